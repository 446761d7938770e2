#pragma once

#include <optional>
#include <string>

#include "ncsynth/netgraph.hpp"
#include "ncsynth/planner.hpp"

namespace ncsynth {

struct DotOptions {
  const TransferPlan* plan = nullptr;
  /// When set, the virtual terminals and collectors for this demand are drawn
  /// with dashed capacity-labelled bundles.
  std::optional<Demand> augmented;
};

std::string to_dot(const Network& net, const DotOptions& options = {});

}  // namespace ncsynth
