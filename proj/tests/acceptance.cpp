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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "test_support.hpp"

namespace {

using namespace degseq;
using testing::Rng;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t expected_full_count(const Graph& h, const std::vector<Vertex>& fixed, std::size_t stages) {
  std::uint64_t prod = 1;
  for (Vertex i : fixed) prod *= static_cast<std::uint64_t>(h.degree(i) + 1);
  return 2 + stages * prod;
}

CostedGraph random_costed(Rng& rng, int n, double p) {
  Graph g = testing::random_graph(rng, n, p);
  std::vector<std::int64_t> cost;
  for (std::size_t k = 0; k < g.edge_count(); ++k) cost.push_back(testing::uniform(rng, -20, 20));
  return CostedGraph(g, cost);
}

template <typename Ok>
bool has_factor(const Graph& h, Ok&& ok) {
  const auto edges = h.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<int> d(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (mask >> k & 1) {
        ++d[edges[k].u];
        ++d[edges[k].v];
      }
    bool good = true;
    for (Vertex i = 1; i <= h.vertex_count() && good; ++i) good = ok(i, d[i]);
    if (good) return true;
  }
  return false;
}

bool has_exact_matching(const ExactMatchingSpec& spec) {
  std::vector<int> perm(static_cast<std::size_t>(spec.n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> count(static_cast<std::size_t>(spec.colors) + 1, 0);
    for (int i = 1; i <= spec.n; ++i) ++count[spec.coloring[i - 1][perm[i - 1] - 1]];
    bool good = true;
    for (int k = 1; k <= spec.colors; ++k) good = good && count[k] == spec.target[k - 1];
    if (good) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_max_degree_two(Rng& rng, int n) {
  EdgeSet edges;
  std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (d[a] < 2 && d[b] < 2 && testing::coin(rng, 0.5)) {
        edges.emplace_back(a, b);
        ++d[a];
        ++d[b];
      }
  return Graph(n, edges);
}

Check weighted_triangle_check() {
  Check c;
  auto t0 = Clock::now();
  Instance inst = testing::weighted_triangle();
  Solution s = solve_convex(inst);
  double elapsed = seconds_since(t0);
  OracleReport oracle = brute_force(inst);
  c.require(s.value == 0, "value " + std::to_string(s.value));
  c.require(s.edges == EdgeSet{{1, 2}, {2, 3}}, "unexpected edge set");
  c.require(oracle.optimum == 0 && oracle.num_optima == 1, "oracle disagrees or optimum not unique");
  c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check bipartite_path_check() {
  Check c;
  auto t0 = Clock::now();
  Solution s = solve_bipartite(testing::bipartite_path(), BipartitePartition{{1, 2}, {3, 4}});
  double elapsed = seconds_since(t0);
  c.require(s.value == 0, "value " + std::to_string(s.value));
  c.require(s.edges == EdgeSet{{1, 3}, {2, 4}}, "unexpected edge set");
  c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check gadget_size_law() {
  Check c;
  Rng rng(1001);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    Graph h = testing::random_graph(rng, testing::uniform(rng, 1, 10), testing::uniform(rng, 0, 100) / 100.0);
    Instance inst = testing::instance_with(
        h, [&](Vertex, int d) { return testing::random_convex_table(rng, d, -10, 10); });
    AuxGraph aux = build_aux_graph(inst);
    long long m = static_cast<long long>(h.edge_count());
    long long sq = 0;
    for (Vertex i = 1; i <= h.vertex_count(); ++i) sq += 1LL * h.degree(i) * h.degree(i);
    c.require(aux.costed.graph.vertex_count() == 8 * m, "vertex count, trial " + std::to_string(trial));
    c.require(static_cast<long long>(aux.costed.graph.edge_count()) == 4 * m + 2 * sq,
              "edge count, trial " + std::to_string(trial));
  }
  return c;
}

Check dp_size_law() {
  Check c;
  Rng rng(1002);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const int r = testing::uniform(rng, 0, 3);
    const int s = testing::uniform(rng, 0, 5);
    Graph h = testing::random_bipartite(rng, r, s, 0.5);
    Instance inst = testing::instance_with(h, [&](Vertex, int d) { return testing::random_table(rng, d, -5, 5); });
    BipartitePartition p = testing::first_r_partition(r, r + s);
    DpDigraph dp = build_dp(inst, p);
    const auto& fixed = r <= s ? p.left : p.right;
    const std::size_t stages = r <= s ? p.right.size() : p.left.size();
    c.require(dp.full_node_count == expected_full_count(h, fixed, stages),
              "bipartite count, trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const int n = testing::uniform(rng, 1, 7);
    Graph h = testing::random_graph(rng, n, 0.5);
    std::vector<Vertex> fixed;
    for (Vertex v = 1; v <= n && fixed.size() < 3; ++v)
      if (testing::coin(rng, 0.4)) fixed.push_back(v);
    Instance inst = testing::instance_with(h, [&](Vertex v, int d) {
      if (std::find(fixed.begin(), fixed.end(), v) != fixed.end()) return testing::random_table(rng, d, -5, 5);
      return testing::random_monotone_table(rng, d, true, -5, 5);
    });
    MonotoneReduction red = reduce_monotone(inst, fixed);
    DpDigraph dp = build_extended_dp(red, inst);
    std::size_t t = 0;
    for (const Edge& e : h.edges())
      if (std::find(fixed.begin(), fixed.end(), e.u) != fixed.end() &&
          std::find(fixed.begin(), fixed.end(), e.v) != fixed.end())
        ++t;
    const std::size_t s = static_cast<std::size_t>(n) - fixed.size();
    c.require(dp.full_node_count == expected_full_count(h, fixed, s + t),
              "monotone count, trial " + std::to_string(trial));
  }
  Instance k33 = testing::instance_with(testing::complete_bipartite(3, 3), [](Vertex, int d) {
    return from_closed_form("(x-1)^2", d + 1);
  });
  c.require(build_dp(k33, testing::first_r_partition(3, 6)).full_node_count == 194, "K33 count");
  return c;
}

Check convex_oracle() {
  Check c;
  Rng rng(1003);
  auto t0 = Clock::now();
  for (int trial = 0; trial < 300 && c.ok; ++trial) {
    Graph h = testing::random_graph(rng, testing::uniform(rng, 1, 7), testing::uniform(rng, 10, 100) / 100.0);
    Instance inst = testing::instance_with(
        h, [&](Vertex, int d) { return testing::random_convex_table(rng, d, -10, 10); });
    c.require(solve_convex(inst).value == brute_force(inst).optimum, "trial " + std::to_string(trial));
  }
  double elapsed = seconds_since(t0);
  c.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check bipartite_oracle() {
  Check c;
  Rng rng(1004);
  for (int trial = 0; trial < 300 && c.ok; ++trial) {
    const int r = testing::uniform(rng, 0, 3);
    const int s = testing::uniform(rng, 0, 5);
    Graph h = testing::random_bipartite(rng, r, s, testing::uniform(rng, 10, 100) / 100.0);
    Instance inst = testing::instance_with(h, [&](Vertex, int d) { return testing::random_table(rng, d, -10, 10); });
    c.require(solve_bipartite(inst, testing::first_r_partition(r, r + s)).value == brute_force(inst).optimum,
              "trial " + std::to_string(trial));
  }
  return c;
}

Check monotone_oracle() {
  Check c;
  Rng rng(1005);
  for (int trial = 0; trial < 300 && c.ok; ++trial) {
    const int n = testing::uniform(rng, 1, 7);
    Graph h = testing::random_graph(rng, n, testing::uniform(rng, 10, 100) / 100.0);
    const int r = testing::uniform(rng, 0, std::min(3, n));
    std::vector<Vertex> fixed;
    for (Vertex v = 1; v <= r; ++v) fixed.push_back(v);
    const bool up = testing::coin(rng, 0.5);
    Instance inst = testing::instance_with(h, [&](Vertex v, int d) {
      if (v <= r) return testing::random_table(rng, d, -10, 10);
      return testing::random_monotone_table(rng, d, up, -10, 10);
    });
    c.require(solve_monotone(inst, fixed).value == brute_force(inst).optimum, "trial " + std::to_string(trial));
  }
  return c;
}

Check matching_engine() {
  Check c;
  Rng rng(1006);
  int feasible = 0;
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    const int n = 2 * testing::uniform(rng, 1, 6);
    CostedGraph cg = random_costed(rng, n, testing::uniform(rng, 30, 100) / 100.0);
    auto fast = min_cost_perfect_matching(cg);
    auto slow = brute_force_matching(cg);
    c.require(fast.has_value() == slow.has_value(), "feasibility, trial " + std::to_string(trial));
    if (!fast || !slow) continue;
    ++feasible;
    c.require(fast->total_cost == slow->total_cost && verify_matching(cg, *fast),
              "value, trial " + std::to_string(trial));
    // Adding a constant to every edge shifts every perfect matching by n/2 times it.
    const std::int64_t shift = testing::uniform(rng, -50, 50);
    CostedGraph shifted = cg;
    for (auto& x : shifted.cost) x += shift;
    auto moved = min_cost_perfect_matching(shifted);
    c.require(moved && moved->total_cost == fast->total_cost + shift * (n / 2),
              "shift invariance, trial " + std::to_string(trial));
  }
  c.require(feasible >= 100, "too few feasible instances: " + std::to_string(feasible));
  return c;
}

Check reduction_faithfulness() {
  Check c;
  Rng rng(1007);
  for (int trial = 0; trial < 300 && c.ok; ++trial) {
    Graph h = testing::random_small_graph(rng, testing::uniform(rng, 1, 6), 0.6, 6);
    FactorSpec fs{h, {}};
    LUFactorSpec ls{h, {}, {}};
    for (Vertex i = 1; i <= h.vertex_count(); ++i) {
      std::set<int> b;
      for (int x = 0; x <= h.degree(i); ++x)
        if (testing::coin(rng, 0.5)) b.insert(x);
      if (b.empty()) b.insert(testing::uniform(rng, 0, h.degree(i)));
      fs.allowed.push_back(b);
      int a = testing::uniform(rng, 0, h.degree(i));
      int z = testing::uniform(rng, 0, h.degree(i));
      ls.lower.push_back(std::min(a, z));
      ls.upper.push_back(std::max(a, z));
    }
    bool factor = has_factor(h, [&](Vertex i, int d) { return fs.allowed[i - 1].count(d) > 0; });
    c.require((brute_force(encode_factor(fs)).optimum == 0) == factor, "factor, trial " + std::to_string(trial));
    bool lu = has_factor(h, [&](Vertex i, int d) { return d >= ls.lower[i - 1] && d <= ls.upper[i - 1]; });
    c.require((brute_force(encode_lu_factor(ls)).optimum == 0) == lu, "(l,u), trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 80 && c.ok; ++trial) {
    ExactMatchingSpec spec;
    spec.n = 1 + trial % 3;
    spec.colors = testing::uniform(rng, 1, 2);
    spec.coloring.assign(static_cast<std::size_t>(spec.n), std::vector<int>(static_cast<std::size_t>(spec.n)));
    for (auto& row : spec.coloring)
      for (int& col : row) col = testing::uniform(rng, 1, spec.colors);
    spec.target.assign(static_cast<std::size_t>(spec.colors), 0);
    for (int k = 0; k < spec.n; ++k) ++spec.target[static_cast<std::size_t>(testing::uniform(rng, 0, spec.colors - 1))];
    ExactMatchingEncoding enc = encode_exact_matching(spec);
    BipartitePartition p;
    for (Vertex x = 1; x <= enc.instance.vertex_count(); ++x)
      (x > 2 * spec.n && x <= 2 * spec.n + spec.n * spec.n ? p.right : p.left).push_back(x);
    Solution s = solve_bipartite(enc.instance, p);
    if (enc.instance.graph().edge_count() <= 12)
      c.require(s.value == brute_force(enc.instance).optimum, "exact matching DP vs oracle");
    const bool yes = has_exact_matching(spec);
    c.require((s.value == 0) == yes, "exact matching, trial " + std::to_string(trial));
    if (s.value == 0) {
      auto m = decode_exact_matching(enc, s.edges);
      std::vector<int> rows, cols;
      std::vector<int> count(static_cast<std::size_t>(spec.colors) + 1, 0);
      for (auto [i, j] : m) {
        rows.push_back(i);
        cols.push_back(j);
        ++count[spec.coloring[i - 1][j - 1]];
      }
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      std::vector<int> all(static_cast<std::size_t>(spec.n));
      std::iota(all.begin(), all.end(), 1);
      bool valid = rows == all && cols == all;
      for (int k = 1; k <= spec.colors; ++k) valid = valid && count[k] == spec.target[k - 1];
      c.require(valid, "decoded matching invalid, trial " + std::to_string(trial));
    }
  }
  return c;
}

Check hardness_instances() {
  Check c;
  Instance k4 = gen_hardness_instance(HardnessKind::Cubic, testing::complete_graph(4));
  c.require(brute_force(k4).optimum == 0, "cubic K4 optimum not 0");
  Rng rng(1008);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const int n = testing::uniform(rng, 1, 8);
    Graph h = random_max_degree_two(rng, n);
    FactorSpec spec{h, std::vector<std::set<int>>(static_cast<std::size_t>(n), std::set<int>{0, 3})};
    spec.allowed[static_cast<std::size_t>(testing::uniform(rng, 0, n - 1))] = {3};
    c.require(brute_force(encode_factor(spec)).optimum > 0, "B-variant optimum 0, trial " + std::to_string(trial));
  }
  return c;
}

Check convex_smoke() {
  Check c;
  Rng rng(1009);
  Graph h = testing::random_graph(rng, 60, 0.1);
  Instance inst = testing::instance_with(
      h, [&](Vertex, int d) { return testing::random_convex_table(rng, d, -1000, 1000); });
  auto t0 = Clock::now();
  Solution s = solve_convex(inst);
  double elapsed = seconds_since(t0);
  c.require(objective(inst, s.edges) == s.value, "value mismatch");
  c.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  c.detail = c.ok ? std::to_string(h.edge_count()) + " edges, " + std::to_string(elapsed) + " s" : c.detail;
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"weighted triangle reproduction", weighted_triangle_check},
      {"bipartite path reproduction", bipartite_path_check},
      {"gadget size law", gadget_size_law},
      {"DP size law", dp_size_law},
      {"oracle equivalence, convex", convex_oracle},
      {"oracle equivalence, bipartite", bipartite_oracle},
      {"oracle equivalence, monotone", monotone_oracle},
      {"matching engine soundness", matching_engine},
      {"reduction faithfulness", reduction_faithfulness},
      {"hardness instances", hardness_instances},
      {"convex smoke benchmark n=60", convex_smoke},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failures;
    std::printf("%s %s%s%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), c.detail.empty() ? "" : " -- ",
                c.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
