#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ncsynth/augment.hpp"
#include "ncsynth/errors.hpp"
#include "ncsynth/flow.hpp"
#include "ncsynth/nccode.hpp"
#include "ncsynth/recolor.hpp"

namespace ncsynth {

struct Inequality {
  std::string name;  // "ineq1", "ineq2", "ineq3"
  std::string cut;   // human-readable cut, e.g. "min-cut(S,T1)"
  int required = 0;
  int actual = 0;
  int shortfall() const { return required - actual; }
};

struct FeasibilityReport {
  bool feasible = true;
  /// min-cut(S,T1), min-cut(S,T2), min-cut(S,{T1,T2}).
  std::array<int, 3> cuts{};
  /// h0+h1, h0+h2, h0+h1+h2.
  std::array<int, 3> required{};
  std::vector<Inequality> violated;
};

FeasibilityReport check_feasibility(const Network& net, const Demand& d);

class InfeasibleDemand : public Error {
 public:
  explicit InfeasibleDemand(FeasibilityReport report);
  const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

/// Routes for X1 and X2 plus a linear multicast code for X0, all over the
/// original network's edge ids.
struct TransferPlan {
  Demand demand;
  std::uint64_t seed = 0;
  std::vector<EdgePath> x1_routes;
  std::vector<EdgePath> x2_routes;
  MulticastCode multicast;
};

struct SynthesisOptions {
  unsigned field_bits = 8;
  StepObserver observer;
};

/// Intermediate products of a synthesis run, kept for auditing.
struct SynthesisAudit {
  FeasibilityReport feasibility;
  AugmentedNetwork augmented;
  SymmetricPassResult passes;
  Network residual;
  int residual_flow_t1 = 0;
  int residual_flow_t2 = 0;
  TransferPlan plan;
};

SynthesisAudit synthesize_audited(const Network& net, const Demand& d, std::uint64_t seed,
                                  const SynthesisOptions& options = {});

TransferPlan synthesize(const Network& net, const Demand& d, std::uint64_t seed,
                        const SynthesisOptions& options = {});

/// Structural consistency of a plan against a network; throws
/// PlanMismatchError describing the first problem found.
void check_plan(const Network& net, const TransferPlan& plan);

struct Messages {
  std::vector<FieldElement> x0;
  std::vector<FieldElement> x1;
  std::vector<FieldElement> x2;
};

struct Delivery {
  bool t1_ok = false;
  bool t2_ok = false;
  std::string detail;
};

/// Pushes one message tuple through the network edge by edge (routes copy,
/// coded edges combine with their local coefficients) and decodes at both
/// terminals.
Delivery simulate(const Network& net, const TransferPlan& plan, const Messages& messages);

struct TrialFailure {
  std::size_t trial = 0;
  std::string terminal;
  std::string detail;
};

struct VerificationReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<TrialFailure> failures;
  bool ok() const { return failures.empty() && passed == trials; }
};

VerificationReport verify_plan(const Network& net, const TransferPlan& plan, std::size_t trials,
                               std::uint64_t seed = 0);

}  // namespace ncsynth
