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

#ifndef DEGSEQ_DOT_HPP
#define DEGSEQ_DOT_HPP

// Graphviz export of the matching gadget and of the DP digraph.

#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "degseq/convex_reduction.hpp"
#include "degseq/dp_digraph.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// The gadget graph L. Nonzero costs label their edges (blue); matched
/// edges are drawn red and bold.
inline std::string aux_to_dot(const AuxGraph& aux, const PerfectMatching& matching, const Graph& h) {
  std::set<Edge> matched(matching.edges.begin(), matching.edges.end());
  std::ostringstream out;
  out << "graph L {\n";
  out << "  // vertices=" << aux.costed.graph.vertex_count()
      << " edges=" << aux.costed.graph.edge_count() << " matching_cost=" << matching.total_cost << "\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t id = 0; id < aux.labels.size(); ++id)
    out << "  n" << id + 1 << " [label=\"" << aux_label_name(aux.labels[id], h) << "\"];\n";
  const auto edges = aux.costed.graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out << "  n" << edges[k].u << " -- n" << edges[k].v;
    std::string attrs;
    if (aux.costed.cost[k] != 0)
      attrs += "label=\"" + std::to_string(aux.costed.cost[k]) + "\", fontcolor=blue";
    if (matched.count(edges[k])) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "color=red, penwidth=2";
    }
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string dp_node_name(const DpDigraph& dp, std::size_t idx) {
  const DpNode& node = dp.nodes[idx];
  std::string v = "(";
  for (std::size_t q = 0; q < node.state.size(); ++q) {
    if (q) v += ",";
    v += std::to_string(node.state[q]);
  }
  v += ")";
  const int num_stages = static_cast<int>(dp.plan.stages.size());
  if (node.layer == 0) return "[" + v + ",0]";
  if (node.layer == num_stages + 1) return "[" + v + "," + std::to_string(node.layer) + "]";
  const DpStage& stage = dp.plan.stages[static_cast<std::size_t>(node.layer - 1)];
  if (stage.kind == StageKind::IntraEdge) return "[" + v + "," + to_string(stage.edge) + "]";
  return "[" + v + "," + std::to_string(node.layer) + "]";
}

/// Reachable DP states with arc lengths; the shortest path is red and
/// intra-edge stage nodes are boxes. Requires a digraph built with arcs kept.
inline std::string dp_to_dot(const DpDigraph& dp) {
  std::set<std::pair<std::size_t, std::size_t>> on_path;
  for (std::size_t k = 0; k + 1 < dp.path.size(); ++k) on_path.insert({dp.path[k], dp.path[k + 1]});
  std::set<std::size_t> path_nodes(dp.path.begin(), dp.path.end());

  std::ostringstream out;
  out << "digraph D {\n";
  out << "  // full_node_count=" << dp.full_node_count << " reachable_nodes=" << dp.nodes.size()
      << " arcs=" << dp.arcs.size() << " shortest_length=" << dp.shortest_length << "\n";
  out << "  // fixed side:";
  for (Vertex i : dp.plan.fixed) out << " " << i;
  out << "\n  rankdir=LR;\n  node [fontsize=10];\n";
  for (std::size_t idx = 0; idx < dp.nodes.size(); ++idx) {
    const DpNode& node = dp.nodes[idx];
    bool intra = node.layer >= 1 && node.layer <= static_cast<int>(dp.plan.stages.size()) &&
                 dp.plan.stages[static_cast<std::size_t>(node.layer - 1)].kind == StageKind::IntraEdge;
    out << "  n" << idx << " [label=\"" << dp_node_name(dp, idx) << "\", shape="
        << (intra ? "box" : "ellipse");
    if (path_nodes.count(idx)) out << ", color=red";
    out << "];\n";
  }
  for (const DpArc& arc : dp.arcs) {
    out << "  n" << arc.from << " -> n" << arc.to << " [label=\"" << arc.length << "\"";
    if (on_path.count({arc.from, arc.to})) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace degseq

#endif  // DEGSEQ_DOT_HPP
