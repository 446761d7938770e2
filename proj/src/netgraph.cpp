#include "ncsynth/netgraph.hpp"

#include <algorithm>

#include "ncsynth/errors.hpp"

namespace ncsynth {

void Demand::validate() const {
  if (h0 < 0 || h1 < 0 || h2 < 0) {
    throw InputError("demand rates must be nonnegative, got (" + std::to_string(h0) + "," +
                     std::to_string(h1) + "," + std::to_string(h2) + ")");
  }
}

std::vector<UnitEdge> expand_capacities(std::span<const WeightedEdge> edges) {
  std::vector<UnitEdge> out;
  for (const auto& e : edges) {
    if (e.capacity <= 0) {
      throw InputError("edge " + e.tail + "->" + e.head + " has non-positive capacity " +
                       std::to_string(e.capacity));
    }
    for (long long k = 0; k < e.capacity; ++k) out.push_back({e.tail, e.head});
  }
  return out;
}

NetworkBuilder::NetworkBuilder(const Network& base)
    : labels_(base.labels_),
      index_(base.index_),
      edges_(base.edges_),
      next_edge_(base.edge_id_bound()),
      source_(base.source_),
      t1_(base.t1_),
      t2_(base.t2_) {}

NodeId NetworkBuilder::add_node(std::string label) {
  if (label.empty()) throw InputError("node label must be non-empty");
  if (index_.contains(label)) throw InputError("duplicate node label '" + label + "'");
  NodeId id{static_cast<std::uint32_t>(labels_.size())};
  index_.emplace(label, id);
  labels_.push_back(std::move(label));
  return id;
}

EdgeId NetworkBuilder::add_edge(NodeId tail, NodeId head) {
  if (tail.value >= labels_.size() || head.value >= labels_.size()) {
    throw LookupError("edge endpoint is not a node of this network");
  }
  if (tail == head) throw InputError("self-loop on node '" + labels_[tail.value] + "'");
  EdgeId id{next_edge_++};
  edges_.push_back({id, tail, head});
  return id;
}

EdgeId NetworkBuilder::add_edge(std::string_view tail, std::string_view head) {
  return add_edge(node(tail), node(head));
}

NodeId NetworkBuilder::node(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw LookupError("unknown node '" + std::string(label) + "'");
  return it->second;
}

NetworkBuilder& NetworkBuilder::set_source(NodeId source) {
  source_ = source;
  return *this;
}

NetworkBuilder& NetworkBuilder::set_terminals(NodeId t1, NodeId t2) {
  t1_ = t1;
  t2_ = t2;
  return *this;
}

Network NetworkBuilder::build() const {
  if (!source_ || !t1_ || !t2_) throw InputError("network needs a source and two terminals");
  for (NodeId v : {*source_, *t1_, *t2_}) {
    if (v.value >= labels_.size()) throw LookupError("source/terminal is not a node of this network");
  }
  if (*source_ == *t1_ || *source_ == *t2_ || *t1_ == *t2_) {
    throw InputError("source and the two terminals must be distinct nodes");
  }
  Network net;
  net.labels_ = labels_;
  net.index_ = index_;
  net.edges_ = edges_;
  net.source_ = *source_;
  net.t1_ = *t1_;
  net.t2_ = *t2_;
  net.index_edges(next_edge_);
  return net;
}

void Network::index_edges(std::uint32_t id_bound) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  slot_.assign(id_bound, -1);
  out_.assign(labels_.size(), {});
  in_.assign(labels_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    slot_[e.id.value] = static_cast<std::int32_t>(i);
    out_[e.tail.value].push_back(e.id);
    in_[e.head.value].push_back(e.id);
  }
}

bool Network::has_edge(EdgeId id) const { return id.value < slot_.size() && slot_[id.value] >= 0; }

const Edge& Network::edge(EdgeId id) const {
  if (!has_edge(id)) throw LookupError("unknown edge id " + std::to_string(id.value));
  return edges_[static_cast<std::size_t>(slot_[id.value])];
}

const std::string& Network::label(NodeId v) const {
  if (!has_node(v)) throw LookupError("unknown node id " + std::to_string(v.value));
  return labels_[v.value];
}

std::optional<NodeId> Network::find_node(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Network::node(std::string_view label) const {
  if (auto v = find_node(label)) return *v;
  throw LookupError("unknown node '" + std::string(label) + "'");
}

std::span<const EdgeId> Network::out_edges(NodeId v) const {
  if (!has_node(v)) throw LookupError("unknown node id " + std::to_string(v.value));
  return out_[v.value];
}

std::span<const EdgeId> Network::in_edges(NodeId v) const {
  if (!has_node(v)) throw LookupError("unknown node id " + std::to_string(v.value));
  return in_[v.value];
}

Network Network::remove_edges(const std::set<EdgeId>& ids) const {
  for (EdgeId id : ids) {
    if (!has_edge(id)) throw LookupError("cannot remove unknown edge id " + std::to_string(id.value));
  }
  Network out = *this;
  std::erase_if(out.edges_, [&](const Edge& e) { return ids.contains(e.id); });
  out.index_edges(edge_id_bound());
  return out;
}

bool operator==(const Network& a, const Network& b) {
  return a.labels_ == b.labels_ && a.edges_ == b.edges_ && a.source_ == b.source_ && a.t1_ == b.t1_ &&
         a.t2_ == b.t2_;
}

}  // namespace ncsynth
