#include "ncsynth/planner.hpp"

#include <set>
#include <sstream>

namespace ncsynth {
namespace {

std::string describe(const FeasibilityReport& r) {
  std::ostringstream os;
  os << "demand infeasible:";
  for (const auto& v : r.violated) {
    os << ' ' << v.name << " (" << v.cut << " = " << v.actual << " < " << v.required << ")";
  }
  return os.str();
}

std::set<EdgeId> route_edges(const TransferPlan& plan) {
  std::set<EdgeId> used;
  for (const auto* family : {&plan.x1_routes, &plan.x2_routes}) {
    for (const auto& r : *family) used.insert(r.edges.begin(), r.edges.end());
  }
  return used;
}

}  // namespace

InfeasibleDemand::InfeasibleDemand(FeasibilityReport report)
    : Error(describe(report)), report_(std::move(report)) {}

FeasibilityReport check_feasibility(const Network& net, const Demand& d) {
  d.validate();
  const NodeId s = net.source();
  FeasibilityReport r;
  r.cuts = {min_cut_value(net, s, {net.t1()}), min_cut_value(net, s, {net.t2()}),
            min_cut_value(net, s, {net.t1(), net.t2()})};
  r.required = {d.terminal1(), d.terminal2(), d.total()};
  const std::array<const char*, 3> names{"ineq1", "ineq2", "ineq3"};
  const std::array<const char*, 3> cuts{"min-cut(S,T1)", "min-cut(S,T2)", "min-cut(S,{T1,T2})"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (r.cuts[i] < r.required[i]) r.violated.push_back({names[i], cuts[i], r.required[i], r.cuts[i]});
  }
  r.feasible = r.violated.empty();
  return r;
}

SynthesisAudit synthesize_audited(const Network& net, const Demand& d, std::uint64_t seed,
                                  const SynthesisOptions& options) {
  SynthesisAudit audit;
  audit.feasibility = check_feasibility(net, d);
  if (!audit.feasibility.feasible) throw InfeasibleDemand(audit.feasibility);

  audit.augmented = build_augmented(net, d);
  audit.passes = symmetric_pass(audit.augmented, d, options.observer);

  TransferPlan& plan = audit.plan;
  plan.demand = d;
  plan.seed = seed;
  plan.x1_routes = audit.passes.x1_routes;
  plan.x2_routes = audit.passes.x2_routes;

  audit.residual = net.remove_edges(route_edges(plan));
  audit.residual_flow_t1 = min_cut_value(audit.residual, net.source(), {net.t1()});
  audit.residual_flow_t2 = min_cut_value(audit.residual, net.source(), {net.t2()});

  Rng rng(seed);
  plan.multicast = build_multicast_code(audit.residual, d.h0, options.field_bits, rng);
  check_plan(net, plan);
  return audit;
}

TransferPlan synthesize(const Network& net, const Demand& d, std::uint64_t seed, const SynthesisOptions& options) {
  return synthesize_audited(net, d, seed, options).plan;
}

void check_plan(const Network& net, const TransferPlan& plan) {
  auto fail = [](const std::string& what) { throw PlanMismatchError("plan does not match network: " + what); };
  const Demand& d = plan.demand;
  if (d.h0 < 0 || d.h1 < 0 || d.h2 < 0) fail("negative demand");
  if (plan.x1_routes.size() != static_cast<std::size_t>(d.h1)) fail("x1 route count differs from h1");
  if (plan.x2_routes.size() != static_cast<std::size_t>(d.h2)) fail("x2 route count differs from h2");
  for (const auto& r : plan.x1_routes) {
    if (!is_valid_path(net, r, net.source(), net.t1())) fail("an x1 route is not a source-to-T1 path");
  }
  for (const auto& r : plan.x2_routes) {
    if (!is_valid_path(net, r, net.source(), net.t2())) fail("an x2 route is not a source-to-T2 path");
  }
  std::vector<EdgePath> all = plan.x1_routes;
  all.insert(all.end(), plan.x2_routes.begin(), plan.x2_routes.end());
  if (!pairwise_edge_disjoint(all)) fail("routes share an edge");
  const std::set<EdgeId> routed = route_edges(plan);

  const MulticastCode& code = plan.multicast;
  if (code.h0 != d.h0) fail("multicast width differs from h0");
  if (code.local.size() != code.order.size()) fail("coding order and local coefficients disagree");
  std::set<EdgeId> seen;
  for (EdgeId e : code.order) {
    if (!net.has_edge(e)) fail("coded edge " + std::to_string(e.value) + " is not in the network");
    if (routed.contains(e)) fail("edge " + std::to_string(e.value) + " is both routed and coded");
    auto it = code.local.find(e);
    if (it == code.local.end()) fail("coded edge " + std::to_string(e.value) + " has no local coefficients");
    const NodeId tail = net.edge(e).tail;
    for (const LocalTerm& term : it->second) {
      if (!code.field.contains(term.coeff)) fail("coefficient outside the field");
      if (term.input.kind == CodeInput::Kind::source_symbol) {
        if (tail != net.source() || term.input.index >= static_cast<std::uint32_t>(d.h0)) {
          fail("edge " + std::to_string(e.value) + " reads a source symbol it cannot see");
        }
      } else {
        EdgeId in{term.input.index};
        if (!seen.contains(in) || net.edge(in).head != tail) {
          fail("edge " + std::to_string(e.value) + " reads edge " + std::to_string(in.value) +
               " which is not an earlier coded in-edge of its tail");
        }
      }
    }
    if (!seen.insert(e).second) fail("coded edge listed twice");
  }
  const std::array<NodeId, 2> terminals{net.t1(), net.t2()};
  for (std::size_t t = 0; t < 2; ++t) {
    const auto& dec = code.terminals[t];
    if (dec.inputs.size() != static_cast<std::size_t>(d.h0)) fail("decoder input count differs from h0");
    for (EdgeId e : dec.inputs) {
      if (!seen.contains(e) || net.edge(e).head != terminals[t]) fail("decoder input is not a coded in-edge");
    }
    if (dec.decode.size() != dec.inputs.size()) fail("decode matrix has the wrong shape");
    for (const auto& row : dec.decode) {
      if (row.size() != dec.inputs.size()) fail("decode matrix has the wrong shape");
      for (FieldElement x : row) {
        if (!code.field.contains(x)) fail("decode entry outside the field");
      }
    }
  }
}

Delivery simulate(const Network& net, const TransferPlan& plan, const Messages& m) {
  const MulticastCode& code = plan.multicast;
  const GaloisField& f = code.field;
  std::map<EdgeId, FieldElement> carried;
  for (std::size_t i = 0; i < plan.x1_routes.size(); ++i) {
    for (EdgeId e : plan.x1_routes[i].edges) carried[e] = m.x1.at(i);
  }
  for (std::size_t i = 0; i < plan.x2_routes.size(); ++i) {
    for (EdgeId e : plan.x2_routes[i].edges) carried[e] = m.x2.at(i);
  }
  for (EdgeId e : code.order) {
    FieldElement acc{0};
    for (const LocalTerm& term : code.local.at(e)) {
      FieldElement in = term.input.kind == CodeInput::Kind::source_symbol ? m.x0.at(term.input.index)
                                                                          : carried.at(EdgeId{term.input.index});
      acc = f.add(acc, f.mul(term.coeff, in));
    }
    carried[e] = acc;
  }

  Delivery out;
  std::ostringstream detail;
  auto receive = [&](const std::vector<EdgePath>& routes, const std::vector<FieldElement>& want_routed,
                     const TerminalDecoder& dec, const std::string& name) {
    bool ok = true;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      if (carried.at(routes[i].edges.back()) != want_routed[i]) {
        ok = false;
        detail << name << ": routed symbol " << i << " corrupted; ";
      }
    }
    std::vector<FieldElement> received;
    for (EdgeId e : dec.inputs) received.push_back(carried.at(e));
    if (mat_vec(f, dec.decode, received) != m.x0) {
      ok = false;
      detail << name << ": decoded X0 differs from the source; ";
    }
    return ok;
  };
  out.t1_ok = receive(plan.x1_routes, m.x1, code.terminals[0], net.label(net.t1()));
  out.t2_ok = receive(plan.x2_routes, m.x2, code.terminals[1], net.label(net.t2()));
  out.detail = detail.str();
  return out;
}

VerificationReport verify_plan(const Network& net, const TransferPlan& plan, std::size_t trials,
                               std::uint64_t seed) {
  check_plan(net, plan);
  VerificationReport report;
  report.trials = trials;
  Rng rng(seed);
  const GaloisField& f = plan.multicast.field;
  auto draw = [&](int n) {
    std::vector<FieldElement> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = random_element(f, rng);
    return v;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Messages m{draw(plan.demand.h0), draw(plan.demand.h1), draw(plan.demand.h2)};
    Delivery d = simulate(net, plan, m);
    if (d.t1_ok && d.t2_ok) {
      ++report.passed;
      continue;
    }
    if (!d.t1_ok) report.failures.push_back({t, net.label(net.t1()), d.detail});
    if (!d.t2_ok) report.failures.push_back({t, net.label(net.t2()), d.detail});
  }
  return report;
}

}  // namespace ncsynth
