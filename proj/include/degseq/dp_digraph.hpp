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

#ifndef DEGSEQ_DP_DIGRAPH_HPP
#define DEGSEQ_DP_DIGRAPH_HPP

// Layered shortest-path dynamic program over degree states of a fixed
// vertex set I = (i_1, ..., i_r).
//
// A state [v, l] records the degrees v in G of the vertices of I after the
// first l stages have been decided. A stage is either
//   * a right vertex j outside I: choose which of its I-neighbours it is
//     joined to; the arc costs f_j(number chosen), or
//   * an edge {a, b} inside I: skip it or select it (v += 1_a + 1_b), cost 0.
// After the last stage every state has an arc to the sink of length
// sum_{i in I} f_i(v_i). Arcs only go from one layer to the next, so one sweep
// in layer order computes all shortest distances.
//
// States are generated lazily from reachable predecessors; the unpruned
// count 2 + (#stages) * prod_i (d_i(H) + 1) is reported alongside.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "degseq/cost_function.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

struct DpOptions {
  /// Upper bound on (#stages) * prod_i (d_i(H) + 1).
  std::uint64_t state_budget = kDefaultStateBudget;
  /// Record every arc (needed for DOT export and structural checks).
  bool keep_arcs = true;
};

enum class StageKind { Neighborhood, IntraEdge };

struct DpStage {
  StageKind kind = StageKind::Neighborhood;
  /// Neighborhood stage: the right vertex j and its neighbours in I, given
  /// as positions into the fixed list, increasing.
  Vertex vertex = 0;
  std::vector<int> fixed_neighbors;
  VertexCostFunction cost;
  /// Intra-edge stage: the edge and the positions of its endpoints.
  Edge edge;
  int pos_a = -1;
  int pos_b = -1;
};

/// Everything the DP needs, independent of how the caller derived it.
struct DpPlan {
  std::vector<Vertex> fixed;
  std::vector<VertexCostFunction> fixed_costs;
  /// d_i(H) + 1 for each fixed vertex; bounds the state coordinates.
  std::vector<int> radices;
  std::vector<DpStage> stages;
};

enum class ArcKind { Neighborhood, SkipEdge, SelectEdge, Final };

struct DpNode {
  /// 0 = source, 1..#stages = stage layers, #stages + 1 = sink.
  int layer = 0;
  std::vector<int> state;
};

struct DpArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t length = 0;
  ArcKind kind = ArcKind::Neighborhood;
  /// Neighborhood arcs: bit b set iff fixed_neighbors[b] was chosen.
  std::uint64_t mask = 0;
};

struct DpDigraph {
  DpPlan plan;
  std::vector<DpNode> nodes;
  std::vector<DpArc> arcs;  // empty unless DpOptions::keep_arcs
  std::uint64_t full_node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::int64_t shortest_length = 0;
  /// Node indices along the chosen shortest path, source first.
  std::vector<std::size_t> path;
  std::vector<std::string> warnings;
};

/// 2 + stages * prod(radices), saturating at UINT64_MAX.
inline std::uint64_t full_node_count(std::size_t stages, const std::vector<int>& radices) {
  std::uint64_t product = 1;
  for (int r : radices) product = detail::saturating_mul(product, static_cast<std::uint64_t>(r));
  return detail::saturating_add(2, detail::saturating_mul(stages, product));
}

namespace detail {

inline std::uint64_t encode_state(const std::vector<int>& state, const std::vector<int>& radices) {
  std::uint64_t code = 0;
  for (std::size_t p = 0; p < state.size(); ++p)
    code = code * static_cast<std::uint64_t>(radices[p]) + static_cast<std::uint64_t>(state[p]);
  return code;
}

}  // namespace detail

/// Builds the reachable part of the digraph and computes a shortest
/// source-to-sink path. Ties go to the first arc found, with arcs enumerated
/// in layer order, predecessor insertion order, then increasing mask
/// (neighborhood stages) or skip-before-select (edge stages).
inline DpDigraph run_dp(DpPlan plan, const DpOptions& options) {
  const std::size_t r = plan.fixed.size();
  const std::size_t num_stages = plan.stages.size();

  std::uint64_t product = 1;
  for (int rad : plan.radices) product = detail::saturating_mul(product, static_cast<std::uint64_t>(rad));
  const std::uint64_t projected = detail::saturating_mul(num_stages, product);
  if (projected > options.state_budget) throw StateBudgetExceeded(projected, options.state_budget);

  DpDigraph dp;
  dp.full_node_count = full_node_count(num_stages, plan.radices);
  dp.plan = std::move(plan);
  const DpPlan& p = dp.plan;

  std::vector<std::int64_t> dist;
  std::vector<std::size_t> pred;  // predecessor node on the best path

  auto add_node = [&](int layer, std::vector<int> state) {
    dp.nodes.push_back({layer, std::move(state)});
    dist.push_back(std::numeric_limits<std::int64_t>::max());
    pred.push_back(SIZE_MAX);
    return dp.nodes.size() - 1;
  };
  auto relax = [&](std::size_t from, std::size_t to, std::int64_t length, ArcKind kind,
                   std::uint64_t mask) {
    if (options.keep_arcs) dp.arcs.push_back({from, to, length, kind, mask});
    std::int64_t candidate = detail::checked_add(dist[from], length);
    if (candidate < dist[to]) {
      dist[to] = candidate;
      pred[to] = from;
    }
  };

  dp.source = add_node(0, std::vector<int>(r, 0));
  dist[dp.source] = 0;
  std::vector<std::size_t> layer_nodes{dp.source};

  for (std::size_t l = 0; l < num_stages; ++l) {
    const DpStage& stage = p.stages[l];
    const int layer = static_cast<int>(l) + 1;
    std::vector<std::size_t> next_nodes;
    std::unordered_map<std::uint64_t, std::size_t> index;
    auto node_for = [&](std::vector<int> state) {
      std::uint64_t code = detail::encode_state(state, p.radices);
      auto [it, inserted] = index.try_emplace(code, 0);
      if (inserted) {
        it->second = add_node(layer, std::move(state));
        next_nodes.push_back(it->second);
      }
      return it->second;
    };

    for (std::size_t from : layer_nodes) {
      if (stage.kind == StageKind::Neighborhood) {
        const std::size_t k = stage.fixed_neighbors.size();
        if (k >= 63) throw StateBudgetExceeded(UINT64_MAX, options.state_budget);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
          std::vector<int> state = dp.nodes[from].state;
          for (std::size_t b = 0; b < k; ++b)
            if (mask >> b & 1) ++state[static_cast<std::size_t>(stage.fixed_neighbors[b])];
          std::int64_t length = stage.cost(std::popcount(mask));
          std::size_t to = node_for(std::move(state));
          relax(from, to, length, ArcKind::Neighborhood, mask);
        }
      } else {
        std::vector<int> skip = dp.nodes[from].state;
        std::vector<int> select = skip;
        ++select[static_cast<std::size_t>(stage.pos_a)];
        ++select[static_cast<std::size_t>(stage.pos_b)];
        std::size_t to_skip = node_for(std::move(skip));
        relax(from, to_skip, 0, ArcKind::SkipEdge, 0);
        std::size_t to_select = node_for(std::move(select));
        relax(from, to_select, 0, ArcKind::SelectEdge, 1);
      }
    }
    layer_nodes = std::move(next_nodes);
  }

  dp.sink = add_node(static_cast<int>(num_stages) + 1, std::vector<int>(r, 0));
  for (std::size_t from : layer_nodes) {
    std::int64_t length = 0;
    for (std::size_t q = 0; q < r; ++q)
      length = detail::checked_add(length, p.fixed_costs[q](dp.nodes[from].state[q]));
    relax(from, dp.sink, length, ArcKind::Final, 0);
  }

  if (pred[dp.sink] == SIZE_MAX) throw InternalError("sink unreachable in DP digraph");
  dp.shortest_length = dist[dp.sink];
  for (std::size_t at = dp.sink; at != SIZE_MAX; at = pred[at]) dp.path.push_back(at);
  std::reverse(dp.path.begin(), dp.path.end());
  return dp;
}

/// Reads the subgraph off the shortest path: stage l contributes the edges
/// {i, j} whose coordinate grew from layer l-1 to l (neighborhood stages) or
/// the stage edge when both endpoints grew (intra-edge stages).
inline EdgeSet decode_path(const DpDigraph& dp) {
  const DpPlan& p = dp.plan;
  EdgeSet out;
  for (std::size_t l = 0; l < p.stages.size(); ++l) {
    const auto& before = dp.nodes[dp.path[l]].state;
    const auto& after = dp.nodes[dp.path[l + 1]].state;
    const DpStage& stage = p.stages[l];
    if (stage.kind == StageKind::Neighborhood) {
      for (std::size_t q = 0; q < before.size(); ++q) {
        int diff = after[q] - before[q];
        if (diff == 1) {
          out.emplace_back(p.fixed[q], stage.vertex);
        } else if (diff != 0) {
          throw InternalError("DP path increments a degree by more than one");
        }
      }
    } else {
      int da = after[static_cast<std::size_t>(stage.pos_a)] - before[static_cast<std::size_t>(stage.pos_a)];
      int db = after[static_cast<std::size_t>(stage.pos_b)] - before[static_cast<std::size_t>(stage.pos_b)];
      if (da != db) throw InternalError("DP path selects half an edge");
      if (da == 1) out.push_back(stage.edge);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace degseq

#endif  // DEGSEQ_DP_DIGRAPH_HPP
