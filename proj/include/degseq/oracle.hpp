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

#ifndef DEGSEQ_ORACLE_HPP
#define DEGSEQ_ORACLE_HPP

// Exhaustive reference solver over all 2^|E| subgraphs.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "degseq/cost_function.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/solution.hpp"

namespace degseq {

inline constexpr int kDefaultOracleLimit = 22;

struct OracleReport {
  std::int64_t optimum = 0;
  /// First optimal subset in increasing binary order, where bit k of the
  /// subset number stands for the k-th edge of H in sorted order.
  EdgeSet witness;
  std::uint64_t num_optima = 0;
  std::uint64_t enumerated = 0;
};

/// Throws TooLarge when |E(H)| exceeds `edge_limit`.
inline OracleReport brute_force(const Instance& inst, int edge_limit = kDefaultOracleLimit) {
  const Graph& h = inst.graph();
  const auto edges = h.edges();
  const std::size_t m = edges.size();
  if (edge_limit > 62) edge_limit = 62;
  if (m > static_cast<std::size_t>(edge_limit)) {
    std::string count = m < 64 ? std::to_string(std::uint64_t{1} << m) : "2^" + std::to_string(m);
    throw TooLarge("oracle limited to " + std::to_string(edge_limit) + " edges; instance has " +
                   std::to_string(m) + " (" + count + " subgraphs)");
  }

  // Bound every partial sum once so the incremental updates below cannot
  // overflow.
  std::int64_t bound = 0;
  for (const auto& f : inst.functions()) {
    std::int64_t worst = 0;
    for (std::int64_t v : f.values()) worst = std::max(worst, v < 0 ? detail::checked_sub(0, v) : v);
    bound = detail::checked_add(bound, worst);
  }
  (void)detail::checked_add(bound, bound);

  const int n = h.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t current = empty_value(inst);
  auto f = [&](Vertex i, int k) { return inst.function(i).values()[static_cast<std::size_t>(k)]; };

  OracleReport report;
  report.enumerated = std::uint64_t{1} << m;
  report.optimum = current;
  report.num_optima = 1;
  std::uint64_t best_mask = 0;

  // Gray-code walk: step s flips the edge at the lowest set bit of s.
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < report.enumerated; ++step) {
    const int bit = __builtin_ctzll(step);
    const std::uint64_t flag = std::uint64_t{1} << bit;
    const Edge& e = edges[static_cast<std::size_t>(bit)];
    const int delta = (gray & flag) ? -1 : 1;
    gray ^= flag;
    for (Vertex x : {e.u, e.v}) {
      current -= f(x, degree[x]);
      degree[x] += delta;
      current += f(x, degree[x]);
    }
    if (current < report.optimum) {
      report.optimum = current;
      report.num_optima = 1;
      best_mask = gray;
    } else if (current == report.optimum) {
      ++report.num_optima;
      if (gray < best_mask) best_mask = gray;
    }
  }

  for (std::size_t k = 0; k < m; ++k)
    if (best_mask >> k & 1) report.witness.push_back(edges[k]);
  if (objective(inst, report.witness) != report.optimum)
    throw InternalError("oracle witness does not attain the reported optimum");
  return report;
}

inline std::uint64_t count_optima(const Instance& inst, int edge_limit = kDefaultOracleLimit) {
  return brute_force(inst, edge_limit).num_optima;
}

inline Solution solve_brute(const Instance& inst, int edge_limit = kDefaultOracleLimit) {
  OracleReport report = brute_force(inst, edge_limit);
  Solution s = make_solution(inst, report.witness, report.optimum, Method::Brute);
  s.diagnostics = {{"enumerated", static_cast<std::int64_t>(report.enumerated)},
                   {"num_optima", static_cast<std::int64_t>(report.num_optima)}};
  return s;
}

}  // namespace degseq

#endif  // DEGSEQ_ORACLE_HPP
