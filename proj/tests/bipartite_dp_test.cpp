// Copyright 2026 The degseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degseq/bipartite_dp.hpp"

#include <gtest/gtest.h>

#include "degseq/oracle.hpp"
#include "test_support.hpp"

namespace degseq {
namespace {

using ::degseq::testing::Rng;

std::int64_t diagnostic(const Solution& s, const std::string& key) {
  for (const auto& [k, v] : s.diagnostics)
    if (k == key) return v;
  ADD_FAILURE() << "missing diagnostic " << key;
  return -1;
}

BipartitePartition part(std::vector<Vertex> left, std::vector<Vertex> right) {
  return BipartitePartition{std::move(left), std::move(right)};
}

TEST(BuildDp, BipartitePathNodeCount) {
  DpDigraph dp = build_dp(testing::bipartite_path(), part({1, 2}, {3, 4}));
  EXPECT_EQ(dp.full_node_count, 14u);
  EXPECT_LE(dp.nodes.size(), 14u);
}

TEST(BuildDp, CompleteBipartiteThreeThree) {
  Instance inst = testing::instance_with(testing::complete_bipartite(3, 3), [](Vertex, int d) {
    return from_closed_form("(x-1)^2", d + 1);
  });
  DpDigraph dp = build_dp(inst, testing::first_r_partition(3, 6));
  EXPECT_EQ(dp.full_node_count, 194u);
  EXPECT_LT(dp.nodes.size(), 194u);
}

TEST(BuildDp, EdgelessGraph) {
  Instance inst(Graph(3, {}), {VertexCostFunction{1}, VertexCostFunction{2}, VertexCostFunction{3}});
  DpDigraph dp = build_dp(inst, part({1}, {2, 3}));
  EXPECT_EQ(dp.nodes.size(), 4u);
  EXPECT_EQ(dp.full_node_count, 4u);
  EXPECT_EQ(dp.shortest_length, 6);
}

TEST(SolveBipartite, BipartitePath) {
  Solution s = solve_bipartite(testing::bipartite_path(), part({1, 2}, {3, 4}));
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(s.edges, (EdgeSet{{1, 3}, {2, 4}}));
  EXPECT_EQ(s.method, Method::Bipartite);
  EXPECT_EQ(diagnostic(s, "full_node_count"), 14);
}

TEST(SolveBipartite, ZeroTables) {
  Instance inst = testing::instance_with(testing::complete_bipartite(2, 3), [](Vertex, int d) {
    return from_closed_form("0", d + 1);
  });
  EXPECT_EQ(solve_bipartite(inst, testing::first_r_partition(2, 5)).value, 0);
}

TEST(SolveBipartite, StarValue) {
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  Instance inst(star, {VertexCostFunction{3, 2, 1, 0}, VertexCostFunction{0, 1},
                       VertexCostFunction{0, 1}, VertexCostFunction{0, 1}});
  Solution s = solve_bipartite(inst, part({1}, {2, 3, 4}));
  EXPECT_EQ(s.value, 3);
  EXPECT_EQ(count_optima(inst), 8u);
}

TEST(SolveBipartite, SwapsLargerLeftSide) {
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  Instance inst = testing::instance_with(star, [](Vertex, int d) { return from_closed_form("(x-1)^2", d + 1); });
  DpSolve out = solve_bipartite_detailed(inst, part({2, 3, 4}, {1}));
  EXPECT_EQ(out.solution.value, 2);
  ASSERT_EQ(out.solution.warnings.size(), 1u);
  EXPECT_NE(out.solution.warnings[0].find("swapped"), std::string::npos);
  EXPECT_EQ(diagnostic(out.solution, "fixed_side"), 1);
  EXPECT_EQ(out.dp.full_node_count, 2u + 3u * 4u);
}

TEST(SolveBipartite, RejectsNonBipartitePartition) {
  EXPECT_THROW(solve_bipartite(testing::weighted_triangle(), part({1}, {2, 3})), NotBipartite);
  EXPECT_THROW(solve_bipartite(testing::bipartite_path(), part({1, 3}, {2, 4})), NotBipartite);
}

TEST(SolveBipartite, InvalidPartitionIsInputError) {
  EXPECT_THROW(solve_bipartite(testing::bipartite_path(), part({1, 2}, {3})), InputError);
  EXPECT_THROW(solve_bipartite(testing::bipartite_path(), part({1, 2, 3}, {3, 4})), InputError);
}

TEST(SolveBipartite, StateBudget) {
  Instance inst = testing::instance_with(testing::complete_bipartite(3, 3), [](Vertex, int d) {
    return from_closed_form("x", d + 1);
  });
  DpOptions tight;
  tight.state_budget = 191;
  EXPECT_THROW(solve_bipartite(inst, testing::first_r_partition(3, 6), tight), StateBudgetExceeded);
  tight.state_budget = 192;
  EXPECT_EQ(solve_bipartite(inst, testing::first_r_partition(3, 6), tight).value, 0);
}

TEST(BipartiteProperties, AgreesWithOracleAndKeepsStructure) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = testing::uniform(rng, 0, 3);
    const int s = testing::uniform(rng, 0, 5);
    Graph h = testing::random_bipartite(rng, r, s, testing::uniform(rng, 20, 100) / 100.0);
    Instance inst = testing::instance_with(
        h, [&](Vertex, int d) { return testing::random_table(rng, d, -9, 9); });
    BipartitePartition p = testing::first_r_partition(r, r + s);
    DpSolve out = solve_bipartite_detailed(inst, p);
    const DpDigraph& dp = out.dp;

    ASSERT_EQ(out.solution.value, brute_force(inst).optimum) << "trial " << trial;
    ASSERT_LE(dp.nodes.size(), dp.full_node_count);
    for (const DpArc& a : dp.arcs) {
      const DpNode& from = dp.nodes[a.from];
      const DpNode& to = dp.nodes[a.to];
      ASSERT_EQ(to.layer, from.layer + 1);
      if (a.kind == ArcKind::Final) continue;
      for (std::size_t q = 0; q < from.state.size(); ++q) {
        ASSERT_GE(to.state[q], from.state[q]);
        ASSERT_LT(to.state[q], dp.plan.radices[q]);
      }
    }
    ASSERT_EQ(dp.path.size(), dp.plan.stages.size() + 2);
    ASSERT_EQ(objective(inst, out.solution.edges), dp.shortest_length);
    for (const Edge& e : out.solution.edges) ASSERT_TRUE(h.has_edge(e.u, e.v));
  }
}

}  // namespace
}  // namespace degseq
