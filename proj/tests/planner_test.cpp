#include <gtest/gtest.h>

#include "ncsynth/errors.hpp"
#include "ncsynth/formats.hpp"
#include "ncsynth/instances.hpp"
#include "ncsynth/planner.hpp"
#include "test_support.hpp"

namespace ncsynth {
namespace {

using testing::edge_between;
using testing::fig2;
using testing::make_network;

TEST(CheckFeasibility, Fig2Demand211) {
  auto r = check_feasibility(fig2(), {2, 1, 1});
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.cuts, (std::array<int, 3>{3, 3, 4}));
  EXPECT_TRUE(r.violated.empty());
}

TEST(CheckFeasibility, Fig2Demand221) {
  auto r = check_feasibility(fig2(), {2, 2, 1});
  EXPECT_FALSE(r.feasible);
  ASSERT_FALSE(r.violated.empty());
  EXPECT_EQ(r.violated[0].name, "ineq1");
  EXPECT_EQ(r.violated[0].required, 4);
  EXPECT_EQ(r.violated[0].actual, 3);
  EXPECT_EQ(r.violated[0].shortfall(), 1);
  // Five symbols cannot leave a source with four out-edges either.
  ASSERT_EQ(r.violated.size(), 2u);
  EXPECT_EQ(r.violated[1].name, "ineq3");
  EXPECT_EQ(r.violated[1].shortfall(), 1);
}

TEST(CheckFeasibility, ZeroDemandAlwaysFeasible) {
  Network net = make_network({{"X", "Y"}}, "S", "T1", "T2");
  auto r = check_feasibility(net, {0, 0, 0});
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.required, (std::array<int, 3>{0, 0, 0}));
}

TEST(CheckFeasibility, ShortfallIsPositiveWhenViolated) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Network net = random_dag(rng);
    Demand d{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    auto r = check_feasibility(net, d);
    EXPECT_EQ(r.feasible, r.violated.empty());
    for (const auto& v : r.violated) EXPECT_GT(v.shortfall(), 0);
  }
}

TEST(Synthesize, Fig2Plan) {
  Network net = fig2();
  auto plan = synthesize(net, {2, 1, 1}, 7);
  ASSERT_EQ(plan.x1_routes.size(), 1u);
  ASSERT_EQ(plan.x2_routes.size(), 1u);
  EXPECT_EQ(plan.x1_routes[0].edges.front(), edge_between(net, "1", "6"));
  EXPECT_EQ(plan.x2_routes[0].edges.front(), edge_between(net, "1", "7"));
  const std::set<std::string> butterfly{"1", "2", "3", "4", "5", "T1", "T2"};
  EXPECT_EQ(plan.multicast.order.size(), 9u);
  for (EdgeId e : plan.multicast.order) {
    EXPECT_TRUE(butterfly.contains(net.label(net.edge(e).tail)));
    EXPECT_TRUE(butterfly.contains(net.label(net.edge(e).head)));
  }
  // The shared edge must mix both X0 symbols.
  const auto& mid = plan.multicast.global.at(edge_between(net, "4", "5"));
  EXPECT_NE(mid[0].value, 0u);
  EXPECT_NE(mid[1].value, 0u);
  auto report = verify_plan(net, plan, 100);
  EXPECT_EQ(report.passed, 100u);
  EXPECT_TRUE(report.ok());
}

TEST(Synthesize, PureRoutingWhenNoSharedMessage) {
  Network net = make_network({{"S", "T1"}, {"S", "T1"}, {"S", "T2"}}, "S", "T1", "T2");
  auto plan = synthesize(net, {0, 2, 1}, 1);
  EXPECT_EQ(plan.x1_routes.size(), 2u);
  EXPECT_EQ(plan.x2_routes.size(), 1u);
  EXPECT_TRUE(plan.multicast.order.empty());
  EXPECT_TRUE(verify_plan(net, plan, 20).ok());
}

TEST(Synthesize, PureMulticast) {
  Network net = load_network(testing::fixture("butterfly.json"));
  auto plan = synthesize(net, {2, 0, 0}, 3);
  EXPECT_TRUE(plan.x1_routes.empty());
  EXPECT_TRUE(plan.x2_routes.empty());
  EXPECT_EQ(plan.multicast.h0, 2);
  EXPECT_TRUE(verify_plan(net, plan, 50).ok());
}

TEST(Synthesize, InfeasibleDemandCarriesReport) {
  try {
    synthesize(fig2(), {3, 1, 1}, 1);
    FAIL() << "expected InfeasibleDemand";
  } catch (const InfeasibleDemand& e) {
    EXPECT_EQ(e.report().violated.size(), 3u);
  }
}

TEST(VerifyPlan, DetectsCorruptedCoefficient) {
  Network net = fig2();
  auto plan = synthesize(net, {2, 1, 1}, 7);
  auto& terms = plan.multicast.local.at(edge_between(net, "4", "5"));
  terms[0].coeff = plan.multicast.field.add(terms[0].coeff, {1});
  auto report = verify_plan(net, plan, 100);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.failures.empty());
}

TEST(VerifyPlan, ZeroMessagesDecodeTrivially) {
  Network net = fig2();
  auto plan = synthesize(net, {2, 1, 1}, 7);
  Messages zero{{{0}, {0}}, {{0}}, {{0}}};
  auto d = simulate(net, plan, zero);
  EXPECT_TRUE(d.t1_ok);
  EXPECT_TRUE(d.t2_ok);
}

TEST(VerifyPlan, StructuralMismatch) {
  Network net = fig2();
  auto plan = synthesize(net, {2, 1, 1}, 7);
  Network other = net.remove_edges({plan.x1_routes[0].edges.back()});
  EXPECT_THROW(verify_plan(other, plan, 1), PlanMismatchError);

  auto overlap = plan;
  overlap.x2_routes[0] = overlap.x1_routes[0];
  EXPECT_THROW(check_plan(net, overlap), PlanMismatchError);

  auto routed_and_coded = plan;
  routed_and_coded.x1_routes[0] = EdgePath{{edge_between(net, "1", "2"), edge_between(net, "2", "T1")}};
  EXPECT_THROW(check_plan(net, routed_and_coded), PlanMismatchError);
}

TEST(VerifyPlan, NoTrialsMeansStructuralOnly) {
  Network net = fig2();
  auto plan = synthesize(net, {2, 1, 1}, 7);
  auto report = verify_plan(net, plan, 0);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.trials, 0u);
}

TEST(Synthesize, SoundAndDeterministicOnRandomInstances) {
  Rng rng(99);
  int plans = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Network net = random_dag(rng);
    Demand d{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    if (!check_feasibility(net, d).feasible) {
      EXPECT_THROW(synthesize(net, d, 1), InfeasibleDemand);
      continue;
    }
    auto plan = synthesize(net, d, trial);
    EXPECT_TRUE(verify_plan(net, plan, 10, trial).ok());
    EXPECT_EQ(dump_plan(plan), dump_plan(synthesize(net, d, trial)));
    ++plans;
  }
  EXPECT_GT(plans, 30);
}

}  // namespace
}  // namespace ncsynth
