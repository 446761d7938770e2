#pragma once

#include <cstdint>
#include <vector>

#include "ncsynth/netgraph.hpp"

namespace ncsynth {

/// Ordered edge sequence; consecutive edges share head -> tail.
struct EdgePath {
  std::vector<EdgeId> edges;
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

struct FlowResult {
  int value = 0;
  /// Indexed by EdgeId::value; each entry is 0 or 1.
  std::vector<std::uint8_t> edge_flow;

  bool carries(EdgeId e) const { return e.value < edge_flow.size() && edge_flow[e.value] != 0; }
};

struct CutResult {
  int value = 0;
  /// Indexed by NodeId::value: reachable from the source in the final residual graph.
  std::vector<bool> source_side;
  std::vector<EdgeId> cut_edges;
};

/// Maximum integral flow from `src` to the set `sinks` (unit capacities).
/// Several sinks are joined through an internal super-sink that never
/// appears in the result. Augmenting paths are found by BFS with arcs
/// scanned in ascending edge id, so results are reproducible.
FlowResult max_flow(const Network& net, NodeId src, const std::vector<NodeId>& sinks);

int min_cut_value(const Network& net, NodeId src, const std::vector<NodeId>& sinks);

/// Computes a max flow and the cut given by residual reachability from `src`.
/// The flow value and cut capacity are checked against each other.
CutResult min_cut(const Network& net, NodeId src, const std::vector<NodeId>& sinks);

/// Splits an integral flow into `flow.value` edge-disjoint src -> sink paths.
/// Paths come out node-simple; circulations are dropped.
std::vector<EdgePath> decompose_paths(const Network& net, const FlowResult& flow, NodeId src,
                                      const std::vector<NodeId>& sinks);

inline std::vector<EdgePath> decompose_paths(const Network& net, const FlowResult& flow, NodeId src,
                                             NodeId sink) {
  return decompose_paths(net, flow, src, std::vector<NodeId>{sink});
}

/// Nodes visited by a path, starting with the tail of its first edge.
std::vector<NodeId> path_nodes(const Network& net, const EdgePath& path);

/// True iff `path` is a contiguous walk from `from` to `to` without repeated edges.
bool is_valid_path(const Network& net, const EdgePath& path, NodeId from, NodeId to);

bool pairwise_edge_disjoint(const std::vector<EdgePath>& paths);

}  // namespace ncsynth
