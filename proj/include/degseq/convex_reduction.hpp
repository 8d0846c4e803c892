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

#ifndef DEGSEQ_CONVEX_REDUCTION_HPP
#define DEGSEQ_CONVEX_REDUCTION_HPP

// Convex cost functions via minimum-cost perfect matching.
//
// For every vertex i of H with degree d_i the gadget graph L has
//   u_i^e, v_i^e  for each edge e incident to i,
//   x_i^k, y_i^k  for k = 1..d_i,
// and edges
//   {u_i^e, x_i^k}, {v_i^e, y_i^k}   (cost 0)
//   {x_i^k, y_i^k}                   (cost f_i(k) - f_i(k-1))
//   {u_i^e, u_j^e}, {v_i^e, v_j^e}   for e = {i,j}  (cost 0).
// A min-cost perfect matching M of L has cost c* = f* - sum_i f_i(0), and
// N = { e : {u_i^e, u_j^e} in M } is an optimal subgraph. Convexity makes the
// x-y costs of each vertex nondecreasing in k, which is what forces the
// matching to pay exactly f_i(d_i(G)) - f_i(0).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "degseq/cost_function.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/matching.hpp"
#include "degseq/solution.hpp"

namespace degseq {

enum class AuxKind { U, V, X, Y };

/// Structured name of a gadget vertex. For U/V, `index` is the position of
/// the H-edge e in H.edges(); for X/Y it is k in [d_i].
struct AuxLabel {
  AuxKind kind;
  Vertex vertex;
  int index;

  friend auto operator<=>(const AuxLabel&, const AuxLabel&) = default;
};

struct AuxGraph {
  CostedGraph costed;
  /// labels[id - 1] names vertex `id` of L. Ids follow the sorted label order.
  std::vector<AuxLabel> labels;
  /// {u_i^e, u_j^e} edge of L -> index of e in H.edges().
  std::map<Edge, std::size_t> back_map;
  /// gadget_costs[i - 1][k - 1] = c_i^k.
  std::vector<std::vector<std::int64_t>> gadget_costs;
};

/// Builds L for an instance whose functions are all convex.
/// Throws NonConvexFunction naming the first offending vertex.
inline AuxGraph build_aux_graph(const Instance& inst) {
  const Graph& h = inst.graph();
  const int n = h.vertex_count();
  for (Vertex i = 1; i <= n; ++i)
    if (!classify(inst.function(i)).convex) throw NonConvexFunction(i);

  AuxGraph aux;
  aux.gadget_costs.resize(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    const auto& f = inst.function(i);
    auto& costs = aux.gadget_costs[i - 1];
    for (int k = 1; k <= h.degree(i); ++k) costs.push_back(detail::checked_sub(f(k), f(k - 1)));
    if (!std::is_sorted(costs.begin(), costs.end()))
      throw InternalError("gadget costs of convex vertex " + std::to_string(i) + " are not sorted");
  }

  // Incident edge indices per vertex.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n) + 1);
  const auto h_edges = h.edges();
  for (std::size_t idx = 0; idx < h_edges.size(); ++idx) {
    incident[h_edges[idx].u].push_back(static_cast<int>(idx));
    incident[h_edges[idx].v].push_back(static_cast<int>(idx));
  }

  for (Vertex i = 1; i <= n; ++i) {
    for (int e : incident[i]) {
      aux.labels.push_back({AuxKind::U, i, e});
      aux.labels.push_back({AuxKind::V, i, e});
    }
    for (int k = 1; k <= h.degree(i); ++k) {
      aux.labels.push_back({AuxKind::X, i, k});
      aux.labels.push_back({AuxKind::Y, i, k});
    }
  }
  std::sort(aux.labels.begin(), aux.labels.end());
  auto id_of = [&](AuxLabel label) -> Vertex {
    auto it = std::lower_bound(aux.labels.begin(), aux.labels.end(), label);
    return static_cast<Vertex>(it - aux.labels.begin()) + 1;
  };

  std::vector<std::pair<Edge, std::int64_t>> costed_edges;
  for (Vertex i = 1; i <= n; ++i) {
    const int d = h.degree(i);
    for (int e : incident[i]) {
      for (int k = 1; k <= d; ++k) {
        costed_edges.push_back({Edge(id_of({AuxKind::U, i, e}), id_of({AuxKind::X, i, k})), 0});
        costed_edges.push_back({Edge(id_of({AuxKind::V, i, e}), id_of({AuxKind::Y, i, k})), 0});
      }
    }
    for (int k = 1; k <= d; ++k)
      costed_edges.push_back({Edge(id_of({AuxKind::X, i, k}), id_of({AuxKind::Y, i, k})),
                              aux.gadget_costs[i - 1][k - 1]});
  }
  for (std::size_t idx = 0; idx < h_edges.size(); ++idx) {
    const Edge& e = h_edges[idx];
    const int ei = static_cast<int>(idx);
    Edge uu(id_of({AuxKind::U, e.u, ei}), id_of({AuxKind::U, e.v, ei}));
    costed_edges.push_back({uu, 0});
    costed_edges.push_back({Edge(id_of({AuxKind::V, e.u, ei}), id_of({AuxKind::V, e.v, ei})), 0});
    aux.back_map.emplace(uu, idx);
  }

  std::sort(costed_edges.begin(), costed_edges.end());
  EdgeSet l_edges;
  std::vector<std::int64_t> l_costs;
  l_edges.reserve(costed_edges.size());
  l_costs.reserve(costed_edges.size());
  for (auto& [e, c] : costed_edges) {
    l_edges.push_back(e);
    l_costs.push_back(c);
  }
  aux.costed = CostedGraph(Graph(static_cast<int>(aux.labels.size()), l_edges), std::move(l_costs));
  return aux;
}

/// f* = c* + sum_i f_i(0).
inline std::int64_t relate_values(const Instance& inst, std::int64_t matching_cost) {
  return detail::checked_add(matching_cost, empty_value(inst));
}

struct ConvexSolve {
  AuxGraph aux;
  PerfectMatching matching;
  Solution solution;
};

/// Solves a convex instance and keeps the gadget graph and matching around
/// for inspection or DOT export.
inline ConvexSolve solve_convex_detailed(const Instance& inst) {
  ConvexSolve out;
  out.aux = build_aux_graph(inst);
  auto matching = min_cost_perfect_matching(out.aux.costed);
  if (!matching) throw InternalError("gadget graph has no perfect matching");
  out.matching = std::move(*matching);

  const auto h_edges = inst.graph().edges();
  EdgeSet chosen;
  for (const Edge& m : out.matching.edges) {
    auto it = out.aux.back_map.find(m);
    if (it != out.aux.back_map.end()) chosen.push_back(h_edges[it->second]);
  }
  std::int64_t value = relate_values(inst, out.matching.total_cost);
  out.solution = make_solution(inst, std::move(chosen), value, Method::Convex);
  out.solution.diagnostics = {
      {"aux_vertices", out.aux.costed.graph.vertex_count()},
      {"aux_edges", static_cast<std::int64_t>(out.aux.costed.graph.edge_count())},
      {"matching_size", static_cast<std::int64_t>(out.matching.edges.size())},
      {"matching_cost", out.matching.total_cost},
  };
  return out;
}

inline Solution solve_convex(const Instance& inst) { return solve_convex_detailed(inst).solution; }

inline std::string aux_label_name(const AuxLabel& label, const Graph& h) {
  std::string base;
  switch (label.kind) {
    case AuxKind::U: base = "u"; break;
    case AuxKind::V: base = "v"; break;
    case AuxKind::X: base = "x"; break;
    case AuxKind::Y: base = "y"; break;
  }
  base += "_" + std::to_string(label.vertex) + "^";
  if (label.kind == AuxKind::U || label.kind == AuxKind::V) {
    const Edge& e = h.edges()[static_cast<std::size_t>(label.index)];
    base += "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  } else {
    base += std::to_string(label.index);
  }
  return base;
}

}  // namespace degseq

#endif  // DEGSEQ_CONVEX_REDUCTION_HPP
