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

#ifndef DEGSEQ_COST_FUNCTION_HPP
#define DEGSEQ_COST_FUNCTION_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/expression.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// f_i as an explicit table over {0, ..., d_i(H)}; entry k is f_i(k).
class VertexCostFunction {
 public:
  VertexCostFunction() : values_{0} {}

  explicit VertexCostFunction(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw InputError("cost table must have at least one entry");
  }

  VertexCostFunction(std::initializer_list<std::int64_t> values)
      : VertexCostFunction(std::vector<std::int64_t>(values)) {}

  /// Largest degree in the domain.
  int max_degree() const noexcept { return static_cast<int>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }

  std::int64_t operator()(int k) const {
    if (k < 0 || k > max_degree())
      throw InputError("degree " + std::to_string(k) + " outside cost table domain {0,...," +
                       std::to_string(max_degree()) + "}");
    return values_[static_cast<std::size_t>(k)];
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  friend bool operator==(const VertexCostFunction&, const VertexCostFunction&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Structural flags of a cost table. Several may hold at once.
struct FunctionClasses {
  bool convex = false;
  bool nondecreasing = false;
  bool nonincreasing = false;

  bool general() const noexcept { return !convex && !nondecreasing && !nonincreasing; }
  friend bool operator==(const FunctionClasses&, const FunctionClasses&) = default;
};

/// Convexity is tested as 2 f(k) <= f(k-1) + f(k+1) at interior points, in
/// 128-bit arithmetic so large tables cannot overflow the comparison.
inline FunctionClasses classify(const VertexCostFunction& f) {
  const auto& v = f.values();
  FunctionClasses c{true, true, true};
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k + 1] < v[k]) c.nondecreasing = false;
    if (v[k + 1] > v[k]) c.nonincreasing = false;
  }
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    __int128 lhs = static_cast<__int128>(v[k]) * 2;
    __int128 rhs = static_cast<__int128>(v[k - 1]) + v[k + 1];
    if (lhs > rhs) c.convex = false;
  }
  return c;
}

inline std::string to_string(const FunctionClasses& c) {
  std::string out;
  auto add = [&](const char* name) {
    if (!out.empty()) out += ",";
    out += name;
  };
  if (c.convex) add("convex");
  if (c.nondecreasing) add("nondecreasing");
  if (c.nonincreasing) add("nonincreasing");
  if (out.empty()) out = "general";
  return out;
}

/// Tabulates a closed form such as "(x-1)^2" at x = 0, ..., domain_size - 1.
inline VertexCostFunction from_closed_form(std::string_view expression, int domain_size) {
  if (domain_size < 1) throw InputError("domain size must be at least 1");
  std::vector<std::int64_t> table;
  table.reserve(static_cast<std::size_t>(domain_size));
  for (int x = 0; x < domain_size; ++x) table.push_back(evaluate_expression(expression, x));
  return VertexCostFunction(std::move(table));
}

/// A host graph H with one cost table per vertex.
class Instance {
 public:
  Instance() = default;

  Instance(Graph h, std::vector<VertexCostFunction> functions)
      : h_(std::move(h)), functions_(std::move(functions)) {
    if (functions_.size() != static_cast<std::size_t>(h_.vertex_count()))
      throw InputError("expected " + std::to_string(h_.vertex_count()) +
                       " cost functions, got " + std::to_string(functions_.size()));
    for (Vertex i = 1; i <= h_.vertex_count(); ++i) {
      if (function(i).max_degree() != h_.degree(i))
        throw InputError("cost function of vertex " + std::to_string(i) + " has " +
                         std::to_string(function(i).size()) + " entries; expected degree+1 = " +
                         std::to_string(h_.degree(i) + 1));
    }
  }

  const Graph& graph() const noexcept { return h_; }
  int vertex_count() const noexcept { return h_.vertex_count(); }
  const VertexCostFunction& function(Vertex i) const {
    h_.check_vertex(i);
    return functions_[static_cast<std::size_t>(i - 1)];
  }
  const std::vector<VertexCostFunction>& functions() const noexcept { return functions_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.h_.vertex_count() == b.h_.vertex_count() &&
           std::equal(a.h_.edges().begin(), a.h_.edges().end(), b.h_.edges().begin(),
                      b.h_.edges().end()) &&
           a.functions_ == b.functions_;
  }

 private:
  Graph h_;
  std::vector<VertexCostFunction> functions_;
};

/// Sum of f_i at the given degrees.
inline std::int64_t objective_at(const Instance& inst, const DegreeSequence& degrees) {
  std::int64_t total = 0;
  for (Vertex i = 1; i <= inst.vertex_count(); ++i)
    total = detail::checked_add(total, inst.function(i)(degrees[i]));
  return total;
}

/// Sum over i of f_i(d_i(G)) for G = ([n], sub_edges). Every edge must be an
/// edge of H, at most once.
inline std::int64_t objective(const Instance& inst, std::span<const Edge> sub_edges) {
  const Graph& h = inst.graph();
  std::vector<char> used(h.edge_count(), 0);
  for (const Edge& raw : sub_edges) {
    Edge e(raw.u, raw.v);
    auto idx = h.edge_index(e);
    if (!idx) throw InputError("edge " + to_string(e) + " is not an edge of the host graph");
    if (used[*idx]) throw InputError("edge " + to_string(e) + " listed twice");
    used[*idx] = 1;
  }
  return objective_at(inst, degree_sequence(h.vertex_count(), sub_edges));
}

/// Sum over i of f_i(0), the value of the empty subgraph.
inline std::int64_t empty_value(const Instance& inst) {
  std::int64_t total = 0;
  for (const auto& f : inst.functions()) total = detail::checked_add(total, f(0));
  return total;
}

}  // namespace degseq

#endif  // DEGSEQ_COST_FUNCTION_HPP
