#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ncsynth/augment.hpp"
#include "ncsynth/flow.hpp"

namespace ncsynth {

enum class Color : std::uint8_t { green = 1, red = 2 };

struct ColorSet {
  std::uint8_t bits = 0;

  static constexpr ColorSet only_green() { return {1}; }
  static constexpr ColorSet only_red() { return {2}; }
  static constexpr ColorSet both() { return {3}; }

  bool has(Color c) const { return (bits & static_cast<std::uint8_t>(c)) != 0; }
  void add(Color c) { bits |= static_cast<std::uint8_t>(c); }
  friend bool operator==(ColorSet, ColorSet) = default;
};

/// Green paths (S -> collector) and red paths (S -> opposite virtual
/// terminal) together with the per-edge colors they induce. Colors are
/// always derived from the path lists, never edited directly.
struct ColoringState {
  std::vector<EdgePath> green_paths;
  std::vector<EdgePath> red_paths;
  std::map<EdgeId, ColorSet> edge_colors;

  static ColoringState from_paths(std::vector<EdgePath> green, std::vector<EdgePath> red);
  ColorSet color(EdgeId e) const;
  void recompute_colors();

  friend bool operator==(const ColoringState&, const ColoringState&) = default;
};

struct RerouteStep {
  std::size_t green_path = 0;
  EdgeId shared_edge;
  std::size_t red_path = 0;
  /// The green path's prefix up to and including `shared_edge`; it replaces
  /// the red path's own prefix.
  EdgePath prefix_swapped;
  friend bool operator==(const RerouteStep&, const RerouteStep&) = default;
};

struct ReroutingTrace {
  std::vector<RerouteStep> steps;
};

/// Every edge exactly {green}, or the first edge {green, red}.
bool cond(const EdgePath& p, const ColoringState& state);

struct AlgorithmAResult {
  ColoringState state;
  std::optional<RerouteStep> step;  // empty: halted, state unchanged
};

/// One application of the rerouting step to green path `p_index`: find the
/// first dual-colored edge e1 on it, and move the red path through e1 onto
/// the green prefix ending at e1.
AlgorithmAResult algorithm_a(std::size_t p_index, const ColoringState& state);

ColoringState apply_step(const ColoringState& state, const RerouteStep& step);
ColoringState replay(const ColoringState& initial, const ReroutingTrace& trace);

/// Number of out-edges of `source` that currently carry red.
std::size_t red_out_edges(const Network& net, NodeId source, const ColoringState& state);

using StepObserver = std::function<void(const ColoringState&, const RerouteStep&)>;

struct FixpointResult {
  ColoringState state;
  ReroutingTrace trace;
};

/// Applies the rerouting step, scanning green paths in index order and
/// restarting after every change, until all green paths satisfy `cond`.
/// Red-count conservation at `source` is asserted after every step.
FixpointResult run_to_fixpoint(ColoringState state, const Network& net, NodeId source,
                               std::size_t step_budget, const StepObserver& observer = {});

std::size_t exclusive_green_count(const ColoringState& state);

/// The first `count` exclusively green paths. Every exclusively green path
/// must pass through `via` as an intermediate node.
std::vector<EdgePath> extract_exclusive_green(const ColoringState& state, const Network& net, NodeId via,
                                              std::size_t count);

struct RecolorPass {
  ColoringState initial;
  FixpointResult fixpoint;
  std::size_t step_budget = 0;
  /// Paths in the augmented network, S -> collector through the route terminal.
  std::vector<EdgePath> routes;
};

struct RecolorRoles {
  NodeId green_sink;
  std::size_t green_count = 0;
  NodeId red_sink;
  std::size_t red_count = 0;
  NodeId route_terminal;
  std::size_t route_count = 0;
};

RecolorPass run_recolor_pass(const Network& g, const RecolorRoles& roles, const StepObserver& observer = {});

struct SymmetricPassResult {
  RecolorPass x1_pass;
  /// Augmentation of the network left after removing the X1 routes,
  /// with demand (h0, 0, h2); the X2 pass runs on it.
  AugmentedNetwork x2_graph;
  RecolorPass x2_pass;
  /// Routes over original edges only: S -> T1 and S -> T2.
  std::vector<EdgePath> x1_routes;
  std::vector<EdgePath> x2_routes;
};

SymmetricPassResult symmetric_pass(const AugmentedNetwork& aug, const Demand& d,
                                   const StepObserver& observer = {});

}  // namespace ncsynth
