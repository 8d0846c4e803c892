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

#ifndef DEGSEQ_MONOTONE_DP_HPP
#define DEGSEQ_MONOTONE_DP_HPP

// Arbitrary host graphs where every vertex outside a small fixed set I has a
// nondecreasing cost function, or every such vertex has a nonincreasing one.
//
// Edges inside J = [n] \ I are settled by monotonicity: some optimum uses
// none of them (nondecreasing) or all of them (nonincreasing). In the second
// case f_j is replaced by x -> f_j(x + d_j(H[J])). What remains is the
// bipartite DP over the I-J edges followed by one skip/select stage per edge
// inside I.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/bipartite_dp.hpp"
#include "degseq/cost_function.hpp"
#include "degseq/dp_digraph.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/solution.hpp"

namespace degseq {

enum class Monotonicity { Nondecreasing, Nonincreasing };

inline std::string_view to_string(Monotonicity m) {
  return m == Monotonicity::Nondecreasing ? "nondecreasing" : "nonincreasing";
}

struct MonotoneReduction {
  Monotonicity direction = Monotonicity::Nondecreasing;
  std::vector<Vertex> fixed;
  std::vector<Vertex> rest;
  /// E(H[J]) in the nonincreasing case, empty otherwise.
  EdgeSet forced_intra_j_edges;
  /// Indexed by vertex - 1: f_i on I, f_j or its shift on J.
  std::vector<VertexCostFunction> shifted_functions;
  /// E(H[I]) in lexicographic order.
  EdgeSet intra_i_edges;
};

/// Throws InputError on an invalid fixed set and MixedMonotonicity when the
/// functions outside it are not uniformly monotone. `direction` forces a
/// direction, which must then hold for every vertex outside the fixed set.
/// Without it, constant functions are treated as nondecreasing.
inline MonotoneReduction reduce_monotone(const Instance& inst, std::span<const Vertex> fixed_set,
                                         std::optional<Monotonicity> direction = std::nullopt) {
  const Graph& h = inst.graph();
  const int n = h.vertex_count();
  std::vector<char> in_fixed(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex i : fixed_set) {
    h.check_vertex(i);
    if (in_fixed[i]) throw InputError("fixed set lists vertex " + std::to_string(i) + " twice");
    in_fixed[i] = 1;
  }

  MonotoneReduction red;
  for (Vertex x = 1; x <= n; ++x) (in_fixed[x] ? red.fixed : red.rest).push_back(x);

  int increasing = 0;  // some J vertex whose function goes up somewhere
  int decreasing = 0;
  for (Vertex j : red.rest) {
    FunctionClasses c = classify(inst.function(j));
    if (!c.nonincreasing && increasing == 0) increasing = j;
    if (!c.nondecreasing && decreasing == 0) decreasing = j;
  }
  if (direction) {
    if (*direction == Monotonicity::Nondecreasing && decreasing != 0)
      throw MethodInapplicable("vertex " + std::to_string(decreasing) +
                               " outside the fixed set is not nondecreasing");
    if (*direction == Monotonicity::Nonincreasing && increasing != 0)
      throw MethodInapplicable("vertex " + std::to_string(increasing) +
                               " outside the fixed set is not nonincreasing");
    red.direction = *direction;
  } else if (decreasing == 0) {
    red.direction = Monotonicity::Nondecreasing;
  } else if (increasing == 0) {
    red.direction = Monotonicity::Nonincreasing;
  } else {
    throw MixedMonotonicity(increasing, decreasing);
  }

  red.shifted_functions = inst.functions();
  for (const Edge& e : h.edges()) {
    if (in_fixed[e.u] && in_fixed[e.v]) {
      red.intra_i_edges.push_back(e);
    } else if (!in_fixed[e.u] && !in_fixed[e.v] && red.direction == Monotonicity::Nonincreasing) {
      red.forced_intra_j_edges.push_back(e);
    }
  }
  if (red.direction == Monotonicity::Nonincreasing) {
    for (Vertex j : red.rest) {
      const int inner = induced_degree(h, j, red.rest);
      const auto& f = inst.function(j);
      std::vector<std::int64_t> shifted;
      for (int x = 0; x <= h.degree(j) - inner; ++x) shifted.push_back(f(x + inner));
      red.shifted_functions[j - 1] = VertexCostFunction(std::move(shifted));
    }
  }
  return red;
}

namespace detail {

inline DpPlan monotone_plan(const MonotoneReduction& red, const Instance& inst) {
  const Graph& h = inst.graph();
  DpPlan plan;
  plan.fixed = red.fixed;
  std::vector<int> position(static_cast<std::size_t>(h.vertex_count()) + 1, -1);
  for (std::size_t q = 0; q < plan.fixed.size(); ++q) {
    Vertex i = plan.fixed[q];
    position[i] = static_cast<int>(q);
    plan.fixed_costs.push_back(inst.function(i));
    plan.radices.push_back(h.degree(i) + 1);
  }
  for (Vertex j : red.rest) {
    DpStage stage;
    stage.kind = StageKind::Neighborhood;
    stage.vertex = j;
    for (Vertex i : h.adjacent(j))
      if (position[i] >= 0) stage.fixed_neighbors.push_back(position[i]);
    std::sort(stage.fixed_neighbors.begin(), stage.fixed_neighbors.end());
    stage.cost = red.shifted_functions[j - 1];
    if (stage.cost.max_degree() < static_cast<int>(stage.fixed_neighbors.size()))
      throw InternalError("cost table of vertex " + std::to_string(j) +
                          " shorter than its cross degree");
    plan.stages.push_back(std::move(stage));
  }
  for (const Edge& e : red.intra_i_edges) {
    DpStage stage;
    stage.kind = StageKind::IntraEdge;
    stage.edge = e;
    stage.pos_a = position[e.u];
    stage.pos_b = position[e.v];
    plan.stages.push_back(std::move(stage));
  }
  return plan;
}

}  // namespace detail

/// The bipartite digraph over the I-J edges extended by one stage per edge
/// inside I. With no such edges it coincides with build_dp on that
/// bipartite graph.
inline DpDigraph build_extended_dp(const MonotoneReduction& red, const Instance& inst,
                                   const DpOptions& options = {}) {
  return run_dp(detail::monotone_plan(red, inst), options);
}

inline DpSolve solve_monotone_detailed(const Instance& inst, std::span<const Vertex> fixed_set,
                                       const DpOptions& options = {},
                                       std::optional<Monotonicity> direction = std::nullopt) {
  MonotoneReduction red = reduce_monotone(inst, fixed_set, direction);
  DpSolve out;
  out.dp = build_extended_dp(red, inst, options);
  EdgeSet edges = decode_path(out.dp);
  edges.insert(edges.end(), red.forced_intra_j_edges.begin(), red.forced_intra_j_edges.end());
  out.solution = make_solution(inst, std::move(edges), out.dp.shortest_length, Method::Monotone);
  out.solution.diagnostics = {
      {"fixed_side", static_cast<std::int64_t>(red.fixed.size())},
      {"intra_fixed_edges", static_cast<std::int64_t>(red.intra_i_edges.size())},
      {"forced_edges", static_cast<std::int64_t>(red.forced_intra_j_edges.size())},
      {"reachable_nodes", static_cast<std::int64_t>(out.dp.nodes.size())},
      {"full_node_count", static_cast<std::int64_t>(out.dp.full_node_count)},
  };
  out.solution.warnings.push_back(std::string("direction: ") + std::string(to_string(red.direction)));
  return out;
}

inline Solution solve_monotone(const Instance& inst, std::span<const Vertex> fixed_set,
                               DpOptions options = {},
                               std::optional<Monotonicity> direction = std::nullopt) {
  options.keep_arcs = false;
  return solve_monotone_detailed(inst, fixed_set, options, direction).solution;
}

}  // namespace degseq

#endif  // DEGSEQ_MONOTONE_DP_HPP
