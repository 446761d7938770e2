#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>

#include "ncsynth/netgraph.hpp"

namespace ncsynth {

inline constexpr std::string_view kVirtualT1 = "__T1P";
inline constexpr std::string_view kVirtualT2 = "__T2P";
inline constexpr std::string_view kCollectorY1 = "__Y1";
inline constexpr std::string_view kCollectorY2 = "__Y2";
inline constexpr std::string_view kReservedPrefix = "__";

/// The input network extended by virtual terminals T1', T2' and collector
/// nodes Y1, Y2. Virtual edges are appended after every original edge id.
struct AugmentedNetwork {
  Network base;
  Network net;
  NodeId t1p;
  NodeId t2p;
  NodeId y1;
  NodeId y2;
  std::set<EdgeId> virtual_edge_ids;

  bool is_virtual(EdgeId e) const { return virtual_edge_ids.contains(e); }
};

/// Adds T1 -> T1' (h0+h1), T1' -> Y1 (h0+h1), T1' -> Y2 (h1),
/// T2 -> T2' (h0+h2), T2' -> Y1 (h2), T2' -> Y2 (h0+h2) as unit-edge bundles.
AugmentedNetwork build_augmented(const Network& net, const Demand& d);

struct CutCheck {
  std::string name;
  int value = 0;
  int required = 0;
  bool exact = true;  // false: value >= required suffices
  bool satisfied() const { return exact ? value == required : value >= required; }
};

struct LemmaReport {
  /// False when the underlying network violates one of the three
  /// feasibility inequalities; the checks are still computed.
  bool applicable = true;
  /// min-cut to T1', T2', {T1',T2'}, Y1, Y2 in that order.
  std::array<CutCheck, 5> checks;

  bool all_satisfied() const;
};

LemmaReport check_lemma(const AugmentedNetwork& aug, const Demand& d);

}  // namespace ncsynth
