#include <gtest/gtest.h>

#include <random>

#include "ncsynth/errors.hpp"
#include "ncsynth/flow.hpp"
#include "ncsynth/instances.hpp"
#include "test_support.hpp"

namespace ncsynth {
namespace {

using testing::brute_force_min_cut;
using testing::fig2;
using testing::fixture;
using testing::make_network;

void expect_valid_decomposition(const Network& net, const FlowResult& flow, NodeId src,
                                const std::vector<NodeId>& sinks) {
  auto paths = decompose_paths(net, flow, src, sinks);
  ASSERT_EQ(paths.size(), static_cast<std::size_t>(flow.value));
  EXPECT_TRUE(pairwise_edge_disjoint(paths));
  for (const auto& p : paths) {
    ASSERT_FALSE(p.edges.empty());
    NodeId end = net.edge(p.edges.back()).head;
    EXPECT_NE(std::find(sinks.begin(), sinks.end(), end), sinks.end());
    EXPECT_TRUE(is_valid_path(net, p, src, end));
    for (EdgeId e : p.edges) EXPECT_TRUE(flow.carries(e));
  }
}

TEST(MaxFlow, Fig2CombinedCutIsFour) {
  Network net = fig2();
  std::vector<NodeId> both{net.t1(), net.t2()};
  EXPECT_EQ(brute_force_min_cut(net, net.source(), both), 4);
  EXPECT_EQ(max_flow(net, net.source(), both).value, 4);
}

TEST(MaxFlow, UnreachableSinkGivesZero) {
  Network net = make_network({{"S", "T1"}, {"X", "T2"}}, "S", "T1", "T2");
  EXPECT_EQ(max_flow(net, net.source(), {net.t2()}).value, 0);
}

TEST(MaxFlow, ButterflyToOneTerminal) {
  Network net = load_network(fixture("butterfly.json"));
  EXPECT_EQ(brute_force_min_cut(net, net.source(), {net.t1()}), 2);
  EXPECT_EQ(max_flow(net, net.source(), {net.t1()}).value, 2);
}

TEST(MaxFlow, RejectsBadEndpoints) {
  Network net = fig2();
  EXPECT_THROW(max_flow(net, NodeId{42}, {net.t1()}), LookupError);
  EXPECT_THROW(max_flow(net, net.source(), {NodeId{42}}), LookupError);
  EXPECT_THROW(max_flow(net, net.source(), {}), InputError);
  EXPECT_THROW(max_flow(net, net.source(), {net.source()}), InputError);
}

TEST(MinCutValue, Fig2PerTerminalCuts) {
  Network net = fig2();
  EXPECT_EQ(brute_force_min_cut(net, net.source(), {net.t1()}), 3);
  EXPECT_EQ(brute_force_min_cut(net, net.source(), {net.t2()}), 3);
  EXPECT_EQ(min_cut_value(net, net.source(), {net.t1()}), 3);
  EXPECT_EQ(min_cut_value(net, net.source(), {net.t2()}), 3);
}

TEST(MinCutValue, ParallelBottleneck) {
  Network net = make_network({{"S", "A"}, {"S", "A"}, {"S", "A"}, {"A", "T1"}, {"A", "T2"}}, "S", "T1", "T2");
  EXPECT_EQ(min_cut_value(net, net.source(), {net.node("A")}), 3);
}

TEST(DecomposePaths, ZeroFlowGivesNoPaths) {
  Network net = make_network({{"S", "T1"}, {"X", "T2"}}, "S", "T1", "T2");
  auto flow = max_flow(net, net.source(), {net.t2()});
  EXPECT_TRUE(decompose_paths(net, flow, net.source(), net.t2()).empty());
}

TEST(DecomposePaths, ParallelEdgesGiveSingleEdgePaths) {
  Network net = make_network({{"S", "T1"}, {"S", "T1"}, {"S", "T1"}, {"S", "T2"}}, "S", "T1", "T2");
  auto flow = max_flow(net, net.source(), {net.t1()});
  auto paths = decompose_paths(net, flow, net.source(), net.t1());
  ASSERT_EQ(paths.size(), 3u);
  for (const auto& p : paths) EXPECT_EQ(p.edges.size(), 1u);
  EXPECT_TRUE(pairwise_edge_disjoint(paths));
}

TEST(DecomposePaths, Fig2FourPathsOnDistinctSourceEdges) {
  Network net = fig2();
  std::vector<NodeId> both{net.t1(), net.t2()};
  auto flow = max_flow(net, net.source(), both);
  auto paths = decompose_paths(net, flow, net.source(), both);
  ASSERT_EQ(paths.size(), 4u);
  EXPECT_TRUE(pairwise_edge_disjoint(paths));
  std::set<EdgeId> first;
  for (const auto& p : paths) first.insert(p.edges.front());
  auto out = net.out_edges(net.source());
  EXPECT_EQ(first, std::set<EdgeId>(out.begin(), out.end()));
  expect_valid_decomposition(net, flow, net.source(), both);
}

TEST(DecomposePaths, DropsCirculations) {
  // S -> A -> T1 plus a cycle A -> B -> C -> A carrying flow.
  Network net = make_network({{"S", "A"}, {"A", "T1"}, {"A", "B"}, {"B", "C"}, {"C", "A"}, {"S", "T2"}}, "S", "T1",
                             "T2");
  FlowResult flow;
  flow.value = 1;
  flow.edge_flow.assign(net.edge_id_bound(), 0);
  for (std::uint32_t e : {0U, 1U, 2U, 3U, 4U}) flow.edge_flow[e] = 1;
  auto paths = decompose_paths(net, flow, net.source(), net.t1());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(is_valid_path(net, paths[0], net.source(), net.t1()));
  std::vector<std::string> nodes;
  for (NodeId v : path_nodes(net, paths[0])) nodes.push_back(net.label(v));
  EXPECT_EQ(nodes, (std::vector<std::string>{"S", "A", "T1"}));
}

TEST(DecomposePaths, InconsistentFlowIsAnInvariantError) {
  Network net = make_network({{"S", "A"}, {"A", "T1"}, {"S", "T2"}}, "S", "T1", "T2");
  FlowResult flow;
  flow.value = 1;
  flow.edge_flow.assign(net.edge_id_bound(), 0);
  flow.edge_flow[0] = 1;  // enters A, never leaves
  EXPECT_THROW(decompose_paths(net, flow, net.source(), net.t1()), InvariantError);
}

class FlowProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FlowProperties, MatchesBruteForceAndDuality) {
  Rng rng(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    Network net = random_dag(rng);
    const NodeId s = net.source();
    for (const std::vector<NodeId>& sinks :
         {std::vector<NodeId>{net.t1()}, std::vector<NodeId>{net.t2()}, std::vector<NodeId>{net.t1(), net.t2()}}) {
      auto flow = max_flow(net, s, sinks);
      EXPECT_EQ(flow.value, brute_force_min_cut(net, s, sinks));
      auto cut = min_cut(net, s, sinks);
      EXPECT_EQ(cut.value, flow.value);
      expect_valid_decomposition(net, flow, s, sinks);
    }
    int a = min_cut_value(net, s, {net.t1()});
    int b = min_cut_value(net, s, {net.t2()});
    int ab = min_cut_value(net, s, {net.t1(), net.t2()});
    EXPECT_LE(ab, a + b);
    EXPECT_GE(ab, std::max(a, b));
  }
}

TEST_P(FlowProperties, InvariantUnderEdgePermutation) {
  Rng rng(GetParam() + 1000);
  for (int trial = 0; trial < 40; ++trial) {
    Network net = random_dag(rng);
    std::vector<Edge> edges(net.edges().begin(), net.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    NetworkBuilder b;
    for (std::uint32_t v = 0; v < net.node_count(); ++v) b.add_node(net.label(NodeId{v}));
    for (const Edge& e : edges) b.add_edge(e.tail, e.head);
    b.set_source(net.source()).set_terminals(net.t1(), net.t2());
    Network shuffled = b.build();
    for (NodeId t : {net.t1(), net.t2()}) {
      EXPECT_EQ(max_flow(net, net.source(), {t}).value, max_flow(shuffled, shuffled.source(), {t}).value);
    }
  }
}

TEST_P(FlowProperties, CyclicGraphsDecompose) {
  Rng rng(GetParam() + 2000);
  for (int trial = 0; trial < 40; ++trial) {
    Network dag = random_dag(rng);
    NetworkBuilder b(dag);
    // Back edges make cycles.
    for (int k = 0; k < 4; ++k) {
      auto u = static_cast<std::uint32_t>(1 + rng() % (dag.node_count() - 1));
      auto v = static_cast<std::uint32_t>(1 + rng() % (dag.node_count() - 1));
      if (u != v) b.add_edge(NodeId{u}, NodeId{v});
    }
    Network net = b.build();
    std::vector<NodeId> sinks{net.t1(), net.t2()};
    auto flow = max_flow(net, net.source(), sinks);
    EXPECT_EQ(flow.value, brute_force_min_cut(net, net.source(), sinks));
    expect_valid_decomposition(net, flow, net.source(), sinks);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FlowProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace ncsynth
