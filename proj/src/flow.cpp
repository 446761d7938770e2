#include "ncsynth/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "ncsynth/errors.hpp"

namespace ncsynth {
namespace {

struct Arc {
  std::uint32_t to;
  int cap;
};

// Residual graph over the network's nodes plus an optional super-sink.
// Arc 2k is the forward arc of the k-th real edge, 2k+1 its reverse.
class Residual {
 public:
  Residual(const Network& net, NodeId src, const std::vector<NodeId>& sinks) : net_(net) {
    if (!net.has_node(src)) throw LookupError("max_flow: unknown source node");
    if (sinks.empty()) throw InputError("max_flow: sink set is empty");
    for (NodeId t : sinks) {
      if (!net.has_node(t)) throw LookupError("max_flow: unknown sink node");
      if (t == src) throw InputError("max_flow: source is among the sinks");
    }
    std::size_t n = net.node_count();
    src_ = src.value;
    std::vector<NodeId> uniq(sinks);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() == 1) {
      sink_ = uniq.front().value;
      adj_.resize(n);
    } else {
      sink_ = static_cast<std::uint32_t>(n);
      adj_.resize(n + 1);
    }
    for (const Edge& e : net.edges()) {
      add_arc(e.tail.value, e.head.value, 1);
      edge_of_arc_.push_back(e.id);
    }
    if (uniq.size() > 1) {
      // More than any cut through real edges can carry.
      int big = static_cast<int>(net.edge_count()) + 1;
      for (NodeId t : uniq) add_arc(t.value, sink_, big);
    }
  }

  int run() {
    int value = 0;
    std::vector<std::int64_t> parent_arc(adj_.size());
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<std::uint32_t> queue{src_};
      std::vector<bool> seen(adj_.size(), false);
      seen[src_] = true;
      while (!queue.empty() && !seen[sink_]) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t a : adj_[u]) {
          const Arc& arc = arcs_[a];
          if (arc.cap > 0 && !seen[arc.to]) {
            seen[arc.to] = true;
            parent_arc[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (!seen[sink_]) break;
      for (std::uint32_t v = sink_; v != src_;) {
        auto a = static_cast<std::uint32_t>(parent_arc[v]);
        arcs_[a].cap -= 1;
        arcs_[a ^ 1U].cap += 1;
        v = arcs_[a ^ 1U].to;
      }
      ++value;
    }
    return value;
  }

  FlowResult result(int value) const {
    FlowResult r;
    r.value = value;
    r.edge_flow.assign(net_.edge_id_bound(), 0);
    for (std::size_t k = 0; k < edge_of_arc_.size(); ++k) {
      if (arcs_[2 * k].cap == 0) r.edge_flow[edge_of_arc_[k].value] = 1;
    }
    return r;
  }

  std::vector<bool> reachable() const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::uint32_t> queue{src_};
    seen[src_] = true;
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t a : adj_[u]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  void add_arc(std::uint32_t from, std::uint32_t to, int cap) {
    adj_[from].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  const Network& net_;
  std::uint32_t src_ = 0;
  std::uint32_t sink_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<EdgeId> edge_of_arc_;
};

}  // namespace

FlowResult max_flow(const Network& net, NodeId src, const std::vector<NodeId>& sinks) {
  Residual residual(net, src, sinks);
  int value = residual.run();
  return residual.result(value);
}

int min_cut_value(const Network& net, NodeId src, const std::vector<NodeId>& sinks) {
  return max_flow(net, src, sinks).value;
}

CutResult min_cut(const Network& net, NodeId src, const std::vector<NodeId>& sinks) {
  Residual residual(net, src, sinks);
  int value = residual.run();
  std::vector<bool> seen = residual.reachable();
  CutResult cut;
  cut.source_side.assign(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(net.node_count()));
  for (const Edge& e : net.edges()) {
    if (cut.source_side[e.tail.value] && !cut.source_side[e.head.value]) cut.cut_edges.push_back(e.id);
  }
  cut.value = static_cast<int>(cut.cut_edges.size());
  if (cut.value != value) {
    throw InvariantError("min_cut: flow value " + std::to_string(value) + " differs from cut capacity " +
                         std::to_string(cut.value));
  }
  return cut;
}

std::vector<EdgePath> decompose_paths(const Network& net, const FlowResult& flow, NodeId src,
                                      const std::vector<NodeId>& sinks) {
  const std::size_t n = net.node_count();
  std::vector<int> balance(n, 0);  // outflow - inflow
  std::vector<std::uint8_t> remaining(net.edge_id_bound(), 0);
  for (const Edge& e : net.edges()) {
    if (!flow.carries(e.id)) continue;
    remaining[e.id.value] = 1;
    balance[e.tail.value] += 1;
    balance[e.head.value] -= 1;
  }
  std::vector<bool> is_sink(n, false);
  for (NodeId t : sinks) is_sink[t.value] = true;
  std::vector<int> absorb(n, 0);
  int absorbed = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == src.value) continue;
    if (is_sink[v]) {
      if (balance[v] > 0) throw InvariantError("decompose_paths: sink emits net flow");
      absorb[v] = -balance[v];
      absorbed += absorb[v];
    } else if (balance[v] != 0) {
      throw InvariantError("decompose_paths: conservation violated at node '" + net.label(NodeId{
                               static_cast<std::uint32_t>(v)}) + "'");
    }
  }
  if (balance[src.value] != flow.value || absorbed != flow.value) {
    throw InvariantError("decompose_paths: flow value does not match source/sink balance");
  }

  std::vector<EdgePath> paths;
  std::vector<int> position(n, -1);
  for (int k = 0; k < flow.value; ++k) {
    std::vector<NodeId> nodes{src};
    std::vector<EdgeId> edges;
    position[src.value] = 0;
    NodeId v = src;
    while (!(is_sink[v.value] && absorb[v.value] > 0)) {
      EdgeId next{};
      bool found = false;
      for (EdgeId e : net.out_edges(v)) {
        if (remaining[e.value]) {
          next = e;
          found = true;
          break;
        }
      }
      if (!found) throw InvariantError("decompose_paths: flow path dead-ends");
      remaining[next.value] = 0;
      NodeId w = net.edge(next).head;
      if (position[w.value] >= 0) {
        // Closed a cycle; drop it and continue from w.
        auto keep = static_cast<std::size_t>(position[w.value]);
        for (std::size_t i = keep + 1; i < nodes.size(); ++i) position[nodes[i].value] = -1;
        nodes.resize(keep + 1);
        edges.resize(keep);
      } else {
        position[w.value] = static_cast<int>(nodes.size());
        nodes.push_back(w);
        edges.push_back(next);
      }
      v = w;
    }
    absorb[v.value] -= 1;
    for (NodeId u : nodes) position[u.value] = -1;
    paths.push_back({std::move(edges)});
  }
  return paths;
}

std::vector<NodeId> path_nodes(const Network& net, const EdgePath& path) {
  std::vector<NodeId> nodes;
  if (path.edges.empty()) return nodes;
  nodes.push_back(net.edge(path.edges.front()).tail);
  for (EdgeId e : path.edges) nodes.push_back(net.edge(e).head);
  return nodes;
}

bool is_valid_path(const Network& net, const EdgePath& path, NodeId from, NodeId to) {
  if (path.edges.empty()) return from == to;
  std::unordered_set<EdgeId> used;
  NodeId at = from;
  for (EdgeId id : path.edges) {
    if (!net.has_edge(id) || !used.insert(id).second) return false;
    const Edge& e = net.edge(id);
    if (e.tail != at) return false;
    at = e.head;
  }
  return at == to;
}

bool pairwise_edge_disjoint(const std::vector<EdgePath>& paths) {
  std::unordered_set<EdgeId> used;
  for (const auto& p : paths) {
    for (EdgeId e : p.edges) {
      if (!used.insert(e).second) return false;
    }
  }
  return true;
}

}  // namespace ncsynth
