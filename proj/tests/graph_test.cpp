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

#include "degseq/graph.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace degseq {
namespace {

using ::degseq::testing::Rng;

TEST(DegreeSequence, Triangle) {
  Graph g(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(degree_sequence(g).values(), (std::vector<int>{2, 2, 2}));
}

TEST(DegreeSequence, EmptyGraph) {
  Graph g(4, {});
  EXPECT_EQ(degree_sequence(g).values(), (std::vector<int>{0, 0, 0, 0}));
}

TEST(DegreeSequence, BipartitePathHost) {
  Graph g(4, {{1, 3}, {2, 3}, {2, 4}});
  EXPECT_EQ(degree_sequence(g).values(), (std::vector<int>{1, 2, 2, 1}));
}

TEST(Neighbors, Cases) {
  Graph tri(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(neighbors(tri, 1), (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(neighbors(Graph(3, {}), 1).empty());
  Graph ex2(4, {{1, 3}, {2, 3}, {2, 4}});
  EXPECT_EQ(neighbors(ex2, 2), (std::vector<Vertex>{3, 4}));
  EXPECT_THROW(neighbors(tri, 4), InputError);
  EXPECT_THROW(neighbors(tri, 0), InputError);
}

TEST(Graph, CanonicalizesAndRejectsBadEdges) {
  Graph g(3, {{2, 1}, {3, 2}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(1, 2));
  EXPECT_EQ(g.edges()[0].u, 1);
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{1, 4}}), InputError);
  EXPECT_THROW(Graph(3, {{2, 2}}), InputError);
}

TEST(CheckBipartite, Cases) {
  Graph ex2(4, {{1, 3}, {2, 3}, {2, 4}});
  EXPECT_TRUE(check_bipartite(ex2, {{1, 2}, {3, 4}}));
  Graph tri(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(check_bipartite(tri, {{1}, {2, 3}}));
  EXPECT_TRUE(check_bipartite(Graph(3, {}), {{2}, {1, 3}}));
}

TEST(CheckBipartite, PartitionMustCoverExactlyOnce) {
  Graph g(3, {{1, 2}});
  EXPECT_THROW(check_bipartite(g, {{1}, {2}}), InputError);
  EXPECT_THROW(check_bipartite(g, {{1, 2}, {2, 3}}), InputError);
  EXPECT_THROW(check_bipartite(g, {{1, 4}, {2, 3}}), InputError);
}

TEST(InducedDegree, Cases) {
  Graph tri(3, {{1, 2}, {1, 3}, {2, 3}});
  std::vector<Vertex> s23{2, 3};
  EXPECT_EQ(induced_degree(tri, 2, s23), 1);
  std::vector<Vertex> s1{1};
  EXPECT_EQ(induced_degree(tri, 1, s1), 0);
  std::vector<Vertex> s234{2, 3, 4};
  EXPECT_EQ(induced_degree(testing::complete_graph(4), 3, s234), 2);
  EXPECT_THROW(induced_degree(tri, 1, s23), InputError);
}

TEST(DeriveBipartition, FindsValidPartitionOrReportsOddCycle) {
  EXPECT_FALSE(derive_bipartition(Graph(3, {{1, 2}, {1, 3}, {2, 3}})).has_value());
  Graph path(4, {{1, 2}, {2, 3}, {3, 4}});
  auto part = derive_bipartition(path);
  ASSERT_TRUE(part.has_value());
  EXPECT_TRUE(check_bipartite(path, *part));
}

TEST(GraphProperties, RandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform(rng, 1, 12);
    Graph g = testing::random_graph(rng, n, 0.4);
    DegreeSequence d = degree_sequence(g);
    EXPECT_EQ(d.sum(), 2 * static_cast<long long>(g.edge_count()));
    EXPECT_EQ(d.sum() % 2, 0);
    for (Vertex i = 1; i <= n; ++i) {
      EXPECT_EQ(neighbors(g, i).size(), static_cast<std::size_t>(d[i]));
      EXPECT_LE(d[i], n - 1);
    }
    if (auto part = derive_bipartition(g)) {
      EXPECT_TRUE(check_bipartite(g, *part));
      EXPECT_TRUE(check_bipartite(g, part->swapped()));
    }
    BipartitePartition half = testing::first_r_partition(n / 2, n);
    EXPECT_EQ(check_bipartite(g, half), check_bipartite(g, half.swapped()));
  }
}

}  // namespace
}  // namespace degseq
