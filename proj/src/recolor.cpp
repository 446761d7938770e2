#include "ncsynth/recolor.hpp"

#include <algorithm>
#include <unordered_set>

#include "ncsynth/errors.hpp"

namespace ncsynth {

ColoringState ColoringState::from_paths(std::vector<EdgePath> green, std::vector<EdgePath> red) {
  ColoringState s;
  s.green_paths = std::move(green);
  s.red_paths = std::move(red);
  s.recompute_colors();
  return s;
}

ColorSet ColoringState::color(EdgeId e) const {
  auto it = edge_colors.find(e);
  return it == edge_colors.end() ? ColorSet{} : it->second;
}

void ColoringState::recompute_colors() {
  edge_colors.clear();
  for (const auto& p : green_paths) {
    for (EdgeId e : p.edges) edge_colors[e].add(Color::green);
  }
  for (const auto& p : red_paths) {
    for (EdgeId e : p.edges) edge_colors[e].add(Color::red);
  }
}

bool cond(const EdgePath& p, const ColoringState& state) {
  if (p.edges.empty()) return true;
  if (state.color(p.edges.front()) == ColorSet::both()) return true;
  return std::all_of(p.edges.begin(), p.edges.end(),
                     [&](EdgeId e) { return state.color(e) == ColorSet::only_green(); });
}

ColoringState apply_step(const ColoringState& state, const RerouteStep& step) {
  if (step.red_path >= state.red_paths.size() || step.prefix_swapped.edges.empty() ||
      step.prefix_swapped.edges.back() != step.shared_edge) {
    throw InvariantError("apply_step: malformed rerouting step");
  }
  const auto& red = state.red_paths[step.red_path].edges;
  auto at = std::find(red.begin(), red.end(), step.shared_edge);
  if (at == red.end()) throw InvariantError("apply_step: shared edge is not on the red path");

  ColoringState next = state;
  std::vector<EdgeId> rerouted = step.prefix_swapped.edges;
  rerouted.insert(rerouted.end(), at + 1, red.end());
  next.red_paths[step.red_path].edges = std::move(rerouted);
  next.recompute_colors();
  return next;
}

AlgorithmAResult algorithm_a(std::size_t p_index, const ColoringState& state) {
  if (p_index >= state.green_paths.size()) throw LookupError("algorithm_a: green path index out of range");
  const auto& p = state.green_paths[p_index].edges;
  auto e1 = std::find_if(p.begin(), p.end(), [&](EdgeId e) { return state.color(e) == ColorSet::both(); });
  if (e1 == p.end()) return {state, std::nullopt};

  std::optional<std::size_t> owner;
  for (std::size_t j = 0; j < state.red_paths.size() && !owner; ++j) {
    const auto& r = state.red_paths[j].edges;
    if (std::find(r.begin(), r.end(), *e1) != r.end()) owner = j;
  }
  if (!owner) {
    throw InvariantError("algorithm_a: edge " + std::to_string(e1->value) +
                         " is colored red but lies on no red path");
  }
  RerouteStep step{p_index, *e1, *owner, EdgePath{std::vector<EdgeId>(p.begin(), e1 + 1)}};
  return {apply_step(state, step), std::move(step)};
}

ColoringState replay(const ColoringState& initial, const ReroutingTrace& trace) {
  ColoringState s = initial;
  for (const auto& step : trace.steps) s = apply_step(s, step);
  return s;
}

std::size_t red_out_edges(const Network& net, NodeId source, const ColoringState& state) {
  std::size_t count = 0;
  for (EdgeId e : net.out_edges(source)) {
    if (state.color(e).has(Color::red)) ++count;
  }
  return count;
}

FixpointResult run_to_fixpoint(ColoringState state, const Network& net, NodeId source,
                               std::size_t step_budget, const StepObserver& observer) {
  FixpointResult result;
  const std::size_t greens = state.green_paths.size();
  const std::size_t reds = state.red_paths.size();
  while (true) {
    std::optional<std::size_t> violator;
    for (std::size_t i = 0; i < greens; ++i) {
      if (!cond(state.green_paths[i], state)) {
        violator = i;
        break;
      }
    }
    if (!violator) break;
    if (result.trace.steps.size() >= step_budget) {
      throw NonTerminationError("rerouting did not reach a fixpoint within " + std::to_string(step_budget) +
                                " steps");
    }
    auto [next, step] = algorithm_a(*violator, state);
    if (!step) break;
    state = std::move(next);
    if (state.green_paths.size() != greens || state.red_paths.size() != reds) {
      throw InvariantError("rerouting changed the number of paths");
    }
    if (std::size_t red = red_out_edges(net, source, state); red != reds) {
      throw InvariantError("red out-edge count at the source is " + std::to_string(red) + ", expected " +
                           std::to_string(reds));
    }
    if (observer) observer(state, *step);
    result.trace.steps.push_back(std::move(*step));
  }
  result.state = std::move(state);
  return result;
}

namespace {

bool exclusively_green(const EdgePath& p, const ColoringState& state) {
  return std::all_of(p.edges.begin(), p.edges.end(),
                     [&](EdgeId e) { return state.color(e) == ColorSet::only_green(); });
}

}  // namespace

std::size_t exclusive_green_count(const ColoringState& state) {
  return static_cast<std::size_t>(std::count_if(state.green_paths.begin(), state.green_paths.end(),
                                                [&](const EdgePath& p) { return exclusively_green(p, state); }));
}

std::vector<EdgePath> extract_exclusive_green(const ColoringState& state, const Network& net, NodeId via,
                                              std::size_t count) {
  std::vector<EdgePath> out;
  for (const auto& p : state.green_paths) {
    if (!exclusively_green(p, state)) continue;
    auto nodes = path_nodes(net, p);
    bool passes = nodes.size() > 2 && std::find(nodes.begin() + 1, nodes.end() - 1, via) != nodes.end() - 1;
    if (!passes) {
      throw TheoremViolation("exclusively green path avoids virtual terminal '" + net.label(via) + "'");
    }
    if (out.size() < count) out.push_back(p);
  }
  if (out.size() < count) {
    throw TheoremViolation("only " + std::to_string(out.size()) + " exclusively green paths, need " +
                           std::to_string(count));
  }
  return out;
}

RecolorPass run_recolor_pass(const Network& g, const RecolorRoles& roles, const StepObserver& observer) {
  const NodeId s = g.source();
  auto green_flow = max_flow(g, s, {roles.green_sink});
  if (static_cast<std::size_t>(green_flow.value) != roles.green_count) {
    throw TheoremViolation("min-cut to '" + g.label(roles.green_sink) + "' is " +
                           std::to_string(green_flow.value) + ", expected " + std::to_string(roles.green_count));
  }
  auto red_flow = max_flow(g, s, {roles.red_sink});
  if (static_cast<std::size_t>(red_flow.value) != roles.red_count) {
    throw TheoremViolation("min-cut to '" + g.label(roles.red_sink) + "' is " + std::to_string(red_flow.value) +
                           ", expected " + std::to_string(roles.red_count));
  }

  RecolorPass pass;
  pass.initial = ColoringState::from_paths(decompose_paths(g, green_flow, s, roles.green_sink),
                                           decompose_paths(g, red_flow, s, roles.red_sink));
  pass.step_budget = g.edge_count() * roles.green_count * roles.red_count;
  pass.fixpoint = run_to_fixpoint(pass.initial, g, s, pass.step_budget, observer);
  pass.routes = extract_exclusive_green(pass.fixpoint.state, g, roles.route_terminal, roles.route_count);
  return pass;
}

namespace {

std::vector<EdgePath> project_routes(const AugmentedNetwork& aug, const std::vector<EdgePath>& routes,
                                     NodeId terminal) {
  std::vector<EdgePath> out;
  for (const auto& r : routes) {
    EdgePath real;
    for (EdgeId e : r.edges) {
      if (!aug.is_virtual(e)) real.edges.push_back(e);
    }
    if (!is_valid_path(aug.base, real, aug.base.source(), terminal)) {
      throw InvariantError("projected route is not a source-to-terminal path");
    }
    out.push_back(std::move(real));
  }
  return out;
}

}  // namespace

SymmetricPassResult symmetric_pass(const AugmentedNetwork& aug, const Demand& d, const StepObserver& observer) {
  d.validate();
  const auto total = static_cast<std::size_t>(d.total());
  SymmetricPassResult out;
  out.x1_pass = run_recolor_pass(aug.net,
                                 {aug.y1, total, aug.t2p, static_cast<std::size_t>(d.terminal2()), aug.t1p,
                                  static_cast<std::size_t>(d.h1)},
                                 observer);
  out.x1_routes = project_routes(aug, out.x1_pass.routes, aug.base.t1());

  // Mirrored pass on what the X1 routes leave behind. Terminal 1 no longer
  // needs X1 there, so the augmentation is rebuilt with h1 = 0.
  std::set<EdgeId> used;
  for (const auto& r : out.x1_routes) used.insert(r.edges.begin(), r.edges.end());
  const Demand rest{d.h0, 0, d.h2};
  out.x2_graph = build_augmented(aug.base.remove_edges(used), rest);
  const auto& g2 = out.x2_graph;
  out.x2_pass = run_recolor_pass(g2.net,
                                 {g2.y2, static_cast<std::size_t>(rest.total()), g2.t1p,
                                  static_cast<std::size_t>(rest.h0), g2.t2p, static_cast<std::size_t>(d.h2)},
                                 observer);
  out.x2_routes = project_routes(g2, out.x2_pass.routes, aug.base.t2());

  std::vector<EdgePath> all = out.x1_routes;
  all.insert(all.end(), out.x2_routes.begin(), out.x2_routes.end());
  if (!pairwise_edge_disjoint(all)) throw InvariantError("X1 and X2 routes share an edge");
  return out;
}

}  // namespace ncsynth
