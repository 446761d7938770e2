#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ncsynth {

struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};

/// Identifies a single unit-capacity edge. Parallel edges between the same
/// pair of nodes carry distinct ids; ids survive edge removal unchanged.
struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  EdgeId id;
  NodeId tail;
  NodeId head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Message rates in symbols per network use. Terminal 1 wants (X0, X1),
/// terminal 2 wants (X0, X2).
struct Demand {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;

  void validate() const;
  int total() const { return h0 + h1 + h2; }
  int terminal1() const { return h0 + h1; }
  int terminal2() const { return h0 + h2; }
  friend bool operator==(const Demand&, const Demand&) = default;
};

struct WeightedEdge {
  std::string tail;
  std::string head;
  long long capacity = 1;
};

struct UnitEdge {
  std::string tail;
  std::string head;
  friend bool operator==(const UnitEdge&, const UnitEdge&) = default;
};

/// Splits each capacity-c edge into c parallel unit edges, preserving order.
std::vector<UnitEdge> expand_capacities(std::span<const WeightedEdge> edges);

class Network;

class NetworkBuilder {
 public:
  NetworkBuilder() = default;
  /// Starts from an existing network; new edges receive ids past every id
  /// the base has ever issued.
  explicit NetworkBuilder(const Network& base);

  NodeId add_node(std::string label);
  EdgeId add_edge(NodeId tail, NodeId head);
  EdgeId add_edge(std::string_view tail, std::string_view head);
  NodeId node(std::string_view label) const;

  NetworkBuilder& set_source(NodeId source);
  NetworkBuilder& set_terminals(NodeId t1, NodeId t2);

  Network build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::uint32_t next_edge_ = 0;
  std::optional<NodeId> source_;
  std::optional<NodeId> t1_;
  std::optional<NodeId> t2_;
};

/// Directed multigraph of unit-capacity edges with a source and an ordered
/// pair of terminals. Immutable once built; operations return new values.
class Network {
 public:
  /// Empty network; only useful as a placeholder before assignment.
  Network() = default;

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// One past the largest edge id ever issued for this network lineage.
  std::uint32_t edge_id_bound() const { return static_cast<std::uint32_t>(slot_.size()); }

  /// Edges in ascending id order.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const;
  bool has_node(NodeId v) const { return v.value < labels_.size(); }

  const std::string& label(NodeId v) const;
  NodeId node(std::string_view label) const;
  std::optional<NodeId> find_node(std::string_view label) const;

  NodeId source() const { return source_; }
  NodeId t1() const { return t1_; }
  NodeId t2() const { return t2_; }

  std::span<const EdgeId> out_edges(NodeId v) const;
  std::span<const EdgeId> in_edges(NodeId v) const;

  Network remove_edges(const std::set<EdgeId>& ids) const;

  friend bool operator==(const Network& a, const Network& b);

 private:
  friend class NetworkBuilder;
  void index_edges(std::uint32_t id_bound);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> slot_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  NodeId source_;
  NodeId t1_;
  NodeId t2_;
};

}  // namespace ncsynth

template <>
struct std::hash<ncsynth::EdgeId> {
  std::size_t operator()(ncsynth::EdgeId e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};

template <>
struct std::hash<ncsynth::NodeId> {
  std::size_t operator()(ncsynth::NodeId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};
