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

#ifndef DEGSEQ_BIPARTITE_DP_HPP
#define DEGSEQ_BIPARTITE_DP_HPP

// Arbitrary cost functions on a bipartite host graph H = (I, J, E), with the
// running time exponential only in |I|.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "degseq/cost_function.hpp"
#include "degseq/dp_digraph.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/solution.hpp"

namespace degseq {

namespace detail {

// One neighborhood stage per right vertex, in the partition's order.
inline DpPlan bipartite_plan(const Instance& inst, const BipartitePartition& part) {
  const Graph& h = inst.graph();
  DpPlan plan;
  plan.fixed = part.left;
  std::vector<int> position(static_cast<std::size_t>(h.vertex_count()) + 1, -1);
  for (std::size_t q = 0; q < plan.fixed.size(); ++q) {
    Vertex i = plan.fixed[q];
    position[i] = static_cast<int>(q);
    plan.fixed_costs.push_back(inst.function(i));
    plan.radices.push_back(h.degree(i) + 1);
  }
  for (Vertex j : part.right) {
    DpStage stage;
    stage.kind = StageKind::Neighborhood;
    stage.vertex = j;
    for (Vertex i : h.adjacent(j))
      if (position[i] >= 0) stage.fixed_neighbors.push_back(position[i]);
    std::sort(stage.fixed_neighbors.begin(), stage.fixed_neighbors.end());
    stage.cost = inst.function(j);
    plan.stages.push_back(std::move(stage));
  }
  return plan;
}

// Puts the smaller side on the left, as the DP is exponential in its size.
inline BipartitePartition orient(const Instance& inst, const BipartitePartition& part,
                                 std::vector<std::string>& warnings) {
  if (!check_bipartite(inst.graph(), part))
    throw NotBipartite("some edge does not cross the given partition");
  if (part.left.size() > part.right.size()) {
    warnings.push_back("left side (" + std::to_string(part.left.size()) +
                       " vertices) larger than right side (" + std::to_string(part.right.size()) +
                       "); sides swapped");
    return part.swapped();
  }
  return part;
}

}  // namespace detail

/// The shortest-path digraph for a bipartite instance, with a shortest
/// path already computed.
inline DpDigraph build_dp(const Instance& inst, const BipartitePartition& part,
                          const DpOptions& options = {}) {
  std::vector<std::string> warnings;
  BipartitePartition oriented = detail::orient(inst, part, warnings);
  DpDigraph dp = run_dp(detail::bipartite_plan(inst, oriented), options);
  dp.warnings = std::move(warnings);
  return dp;
}

struct DpSolve {
  DpDigraph dp;
  Solution solution;
};

inline DpSolve solve_bipartite_detailed(const Instance& inst, const BipartitePartition& part,
                                        const DpOptions& options = {}) {
  DpSolve out;
  out.dp = build_dp(inst, part, options);
  out.solution = make_solution(inst, decode_path(out.dp), out.dp.shortest_length, Method::Bipartite);
  out.solution.warnings = out.dp.warnings;
  out.solution.diagnostics = {
      {"fixed_side", static_cast<std::int64_t>(out.dp.plan.fixed.size())},
      {"stages", static_cast<std::int64_t>(out.dp.plan.stages.size())},
      {"reachable_nodes", static_cast<std::int64_t>(out.dp.nodes.size())},
      {"full_node_count", static_cast<std::int64_t>(out.dp.full_node_count)},
  };
  return out;
}

inline Solution solve_bipartite(const Instance& inst, const BipartitePartition& part,
                                DpOptions options = {}) {
  options.keep_arcs = false;
  return solve_bipartite_detailed(inst, part, options).solution;
}

}  // namespace degseq

#endif  // DEGSEQ_BIPARTITE_DP_HPP
