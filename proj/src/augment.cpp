#include "ncsynth/augment.hpp"

#include <algorithm>

#include "ncsynth/errors.hpp"
#include "ncsynth/flow.hpp"

namespace ncsynth {

AugmentedNetwork build_augmented(const Network& net, const Demand& d) {
  d.validate();
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    if (net.label(NodeId{v}).starts_with(kReservedPrefix)) {
      throw InputError("node label '" + net.label(NodeId{v}) + "' uses the reserved '__' prefix");
    }
  }
  NetworkBuilder builder(net);
  AugmentedNetwork aug{net, net, {}, {}, {}, {}, {}};
  aug.t1p = builder.add_node(std::string(kVirtualT1));
  aug.t2p = builder.add_node(std::string(kVirtualT2));
  aug.y1 = builder.add_node(std::string(kCollectorY1));
  aug.y2 = builder.add_node(std::string(kCollectorY2));

  auto bundle = [&](NodeId from, NodeId to, int count) {
    for (int k = 0; k < count; ++k) aug.virtual_edge_ids.insert(builder.add_edge(from, to));
  };
  bundle(net.t1(), aug.t1p, d.h0 + d.h1);
  bundle(aug.t1p, aug.y1, d.h0 + d.h1);
  bundle(aug.t1p, aug.y2, d.h1);
  bundle(net.t2(), aug.t2p, d.h0 + d.h2);
  bundle(aug.t2p, aug.y1, d.h2);
  bundle(aug.t2p, aug.y2, d.h0 + d.h2);

  aug.net = builder.build();
  return aug;
}

bool LemmaReport::all_satisfied() const {
  return std::all_of(checks.begin(), checks.end(), [](const CutCheck& c) { return c.satisfied(); });
}

LemmaReport check_lemma(const AugmentedNetwork& aug, const Demand& d) {
  const Network& g = aug.net;
  const NodeId s = g.source();
  LemmaReport report;
  report.applicable = min_cut_value(g, s, {g.t1()}) >= d.terminal1() &&
                      min_cut_value(g, s, {g.t2()}) >= d.terminal2() &&
                      min_cut_value(g, s, {g.t1(), g.t2()}) >= d.total();
  report.checks = {{
      {"min-cut(S,T1')", min_cut_value(g, s, {aug.t1p}), d.terminal1(), true},
      {"min-cut(S,T2')", min_cut_value(g, s, {aug.t2p}), d.terminal2(), true},
      {"min-cut(S,{T1',T2'})", min_cut_value(g, s, {aug.t1p, aug.t2p}), d.total(), false},
      {"min-cut(S,Y1)", min_cut_value(g, s, {aug.y1}), d.total(), true},
      {"min-cut(S,Y2)", min_cut_value(g, s, {aug.y2}), d.total(), true},
  }};
  return report;
}

}  // namespace ncsynth
