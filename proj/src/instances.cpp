#include "ncsynth/instances.hpp"

#include <string>

namespace ncsynth {
namespace {

int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Network random_dag(Rng& rng, const RandomDagParams& params) {
  const int n = uniform(rng, params.min_nodes, params.max_nodes);
  const int m = uniform(rng, params.min_edges, params.max_edges);
  int t1 = uniform(rng, 1, n - 1);
  int t2 = uniform(rng, 1, n - 2);
  if (t2 >= t1) ++t2;

  NetworkBuilder builder;
  for (int v = 0; v < n; ++v) {
    std::string label = v == 0 ? "S" : v == t1 ? "T1" : v == t2 ? "T2" : "v" + std::to_string(v);
    builder.add_node(label);
  }
  for (int k = 0; k < m; ++k) {
    int tail = uniform(rng, 0, n - 2);
    int head = uniform(rng, tail + 1, n - 1);
    builder.add_edge(NodeId{static_cast<std::uint32_t>(tail)}, NodeId{static_cast<std::uint32_t>(head)});
  }
  builder.set_source(NodeId{0});
  builder.set_terminals(NodeId{static_cast<std::uint32_t>(t1)}, NodeId{static_cast<std::uint32_t>(t2)});
  return builder.build();
}

}  // namespace ncsynth
