#pragma once

#include <cstdint>

#include "ncsynth/nccode.hpp"
#include "ncsynth/netgraph.hpp"

namespace ncsynth {

struct RandomDagParams {
  int min_nodes = 4;
  int max_nodes = 8;
  int min_edges = 4;
  int max_edges = 14;
};

/// Random DAG: nodes are created in topological order, every edge goes from
/// an earlier node to a later one (parallel edges allowed). The source is the
/// first node; the terminals are two distinct later nodes, possibly interior.
Network random_dag(Rng& rng, const RandomDagParams& params = {});

}  // namespace ncsynth
