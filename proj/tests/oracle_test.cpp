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

#include "degseq/oracle.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "test_support.hpp"

namespace degseq {
namespace {

using ::degseq::testing::Rng;

TEST(BruteForce, WeightedTriangle) {
  OracleReport r = brute_force(testing::weighted_triangle());
  EXPECT_EQ(r.optimum, 0);
  EXPECT_EQ(r.witness, (EdgeSet{{1, 2}, {2, 3}}));
  EXPECT_EQ(r.num_optima, 1u);
  EXPECT_EQ(r.enumerated, 8u);
}

TEST(BruteForce, BipartitePath) {
  OracleReport r = brute_force(testing::bipartite_path());
  EXPECT_EQ(r.optimum, 0);
  EXPECT_EQ(r.witness, (EdgeSet{{1, 3}, {2, 4}}));
  EXPECT_EQ(r.num_optima, 1u);
}

TEST(BruteForce, EdgelessGraphIsConstant) {
  Instance inst(Graph(3, {}), {VertexCostFunction{-4}, VertexCostFunction{9}, VertexCostFunction{0}});
  OracleReport r = brute_force(inst);
  EXPECT_EQ(r.optimum, 5);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_EQ(r.num_optima, 1u);
  EXPECT_EQ(r.enumerated, 1u);
}

TEST(BruteForce, WitnessIsFirstInBinaryOrder) {
  // Every subgraph of a zero-cost triangle is optimal; the empty one comes first.
  Instance zeros = testing::instance_with(testing::complete_graph(3), [](Vertex, int d) {
    return from_closed_form("0", d + 1);
  });
  OracleReport r = brute_force(zeros);
  EXPECT_EQ(r.num_optima, 8u);
  EXPECT_TRUE(r.witness.empty());

  // Exactly one edge of the path 1-2-3 is wanted at vertex 2: {1,2} is bit 0.
  Instance path(Graph(3, {{1, 2}, {2, 3}}),
                {VertexCostFunction{0, 0}, VertexCostFunction{1, 0, 1}, VertexCostFunction{0, 0}});
  OracleReport p = brute_force(path);
  EXPECT_EQ(p.num_optima, 2u);
  EXPECT_EQ(p.witness, (EdgeSet{{1, 2}}));
}

TEST(CountOptima, Cases) {
  EXPECT_EQ(count_optima(testing::weighted_triangle()), 1u);
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  Instance flat(star, {VertexCostFunction{3, 2, 1, 0}, VertexCostFunction{0, 1},
                       VertexCostFunction{0, 1}, VertexCostFunction{0, 1}});
  EXPECT_EQ(count_optima(flat), 8u);
  EXPECT_EQ(brute_force(flat).optimum, 3);
}

TEST(BruteForce, TooLarge) {
  Instance k8 = testing::instance_with(testing::complete_graph(8), [](Vertex, int d) {
    return from_closed_form("x", d + 1);
  });
  EXPECT_THROW(brute_force(k8), TooLarge);
  EXPECT_THROW(brute_force(testing::weighted_triangle(), 2), TooLarge);
  EXPECT_NO_THROW(brute_force(testing::weighted_triangle(), 3));
}

TEST(BruteForce, OverflowIsRejected) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  Instance inst(Graph(2, {{1, 2}}), {VertexCostFunction{big, 0}, VertexCostFunction{big, 0}});
  EXPECT_THROW(brute_force(inst), OverflowError);
}

TEST(SolveBrute, Diagnostics) {
  Solution s = solve_brute(testing::weighted_triangle());
  EXPECT_EQ(s.method, Method::Brute);
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(s.diagnostics.size(), 2u);
}

TEST(OracleProperties, OptimumIsALowerBoundAndAttained) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph h = testing::random_small_graph(rng, testing::uniform(rng, 1, 6), 0.6, 10);
    Instance inst = testing::instance_with(
        h, [&](Vertex, int d) { return testing::random_table(rng, d, -20, 20); });
    OracleReport r = brute_force(inst);
    ASSERT_EQ(objective(inst, r.witness), r.optimum);
    ASSERT_GE(r.num_optima, 1u);
    ASSERT_LE(r.optimum, empty_value(inst));
    const auto edges = h.edges();
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      EdgeSet sub;
      for (std::size_t k = 0; k < edges.size(); ++k)
        if (mask >> k & 1) sub.push_back(edges[k]);
      std::int64_t v = objective(inst, sub);
      ASSERT_GE(v, r.optimum);
      if (v == r.optimum && hits++ == 0) {
        ASSERT_EQ(sub, r.witness);
      }
    }
    ASSERT_EQ(hits, r.num_optima);
  }
}

}  // namespace
}  // namespace degseq
