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

#ifndef DEGSEQ_REDUCTIONS_HPP
#define DEGSEQ_REDUCTIONS_HPP

// Special cases expressed as degree-sequence instances:
//   general factor   f_i(x) = 0 if x in B_i, else 1
//   (l,u)-factor     f_i(x) = max(l_i - x, 0, x - u_i)   (convex)
//   exact matching   a gadget graph mixing (x-1)^2, x(3-x) and (x-b_k)^2
//   hardness         cubic subgraph, and convex/concave bipartite instances
// In each case the optimum is 0 iff the original question has a yes answer.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "degseq/cost_function.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/solution.hpp"

namespace degseq {

struct FactorSpec {
  Graph h;
  /// allowed[i - 1] = B_i, a nonempty set of nonnegative degrees. Entries
  /// above d_i(H) are accepted; they can never be met.
  std::vector<std::set<int>> allowed;

  void validate() const {
    if (allowed.size() != static_cast<std::size_t>(h.vertex_count()))
      throw InputError("factor spec needs one allowed-degree set per vertex");
    for (Vertex i = 1; i <= h.vertex_count(); ++i) {
      const auto& b = allowed[i - 1];
      if (b.empty()) throw InputError("allowed set of vertex " + std::to_string(i) + " is empty");
      if (*b.begin() < 0)
        throw InputError("allowed set of vertex " + std::to_string(i) + " has a negative degree");
    }
  }
};

struct LUFactorSpec {
  Graph h;
  std::vector<int> lower;
  std::vector<int> upper;

  void validate() const {
    const auto n = static_cast<std::size_t>(h.vertex_count());
    if (lower.size() != n || upper.size() != n)
      throw InputError("(l,u) spec needs one lower and one upper bound per vertex");
    for (Vertex i = 1; i <= h.vertex_count(); ++i) {
      int l = lower[i - 1];
      int u = upper[i - 1];
      if (l > u)
        throw InputError("vertex " + std::to_string(i) + ": lower bound " + std::to_string(l) +
                         " exceeds upper bound " + std::to_string(u));
      if (l < 0 || u > h.degree(i))
        throw InputError("vertex " + std::to_string(i) + ": bounds outside {0,...," +
                         std::to_string(h.degree(i)) + "}");
    }
  }
};

struct ExactMatchingSpec {
  int n = 0;
  int colors = 0;
  /// target[k - 1] = b_k.
  std::vector<int> target;
  /// coloring[i - 1][j - 1] = colour of (i, j), in [1, colors].
  std::vector<std::vector<int>> coloring;

  void validate() const {
    if (n < 1) throw InputError("exact matching needs n >= 1");
    if (colors < 1) throw InputError("exact matching needs at least one colour");
    if (target.size() != static_cast<std::size_t>(colors))
      throw InputError("target vector must have one entry per colour");
    for (int b : target)
      if (b < 0) throw InputError("target counts must be nonnegative");
    if (coloring.size() != static_cast<std::size_t>(n))
      throw InputError("coloring must have n rows");
    for (const auto& row : coloring) {
      if (row.size() != static_cast<std::size_t>(n)) throw InputError("coloring must have n columns");
      for (int c : row)
        if (c < 1 || c > colors)
          throw InputError("colour " + std::to_string(c) + " outside [1," + std::to_string(colors) + "]");
    }
  }
};

/// The exact-matching gadget instance plus what decoding needs. Vertices are
/// numbered u_1..u_n, v_1..v_n, w_{1,1}..w_{n,n} row-major, x_1..x_r.
struct ExactMatchingEncoding {
  Instance instance;
  int n = 0;
  int colors = 0;
  std::vector<std::string> warnings;

  Vertex u(int i) const { return i; }
  Vertex v(int j) const { return n + j; }
  Vertex w(int i, int j) const { return 2 * n + (i - 1) * n + j; }
  Vertex x(int k) const { return 2 * n + n * n + k; }
};

inline Instance encode_factor(const FactorSpec& spec) {
  spec.validate();
  std::vector<VertexCostFunction> fs;
  for (Vertex i = 1; i <= spec.h.vertex_count(); ++i) {
    std::vector<std::int64_t> table;
    for (int x = 0; x <= spec.h.degree(i); ++x) table.push_back(spec.allowed[i - 1].count(x) ? 0 : 1);
    fs.emplace_back(std::move(table));
  }
  return Instance(spec.h, std::move(fs));
}

inline Instance encode_lu_factor(const LUFactorSpec& spec) {
  spec.validate();
  std::vector<VertexCostFunction> fs;
  for (Vertex i = 1; i <= spec.h.vertex_count(); ++i) {
    const int l = spec.lower[i - 1];
    const int u = spec.upper[i - 1];
    std::vector<std::int64_t> table;
    for (int x = 0; x <= spec.h.degree(i); ++x) table.push_back(x <= l ? l - x : (x >= u ? x - u : 0));
    VertexCostFunction f(std::move(table));
    if (!classify(f).convex) throw InternalError("(l,u) cost table is not convex");
    fs.push_back(std::move(f));
  }
  return Instance(spec.h, std::move(fs));
}

inline ExactMatchingEncoding encode_exact_matching(const ExactMatchingSpec& spec) {
  spec.validate();
  ExactMatchingEncoding enc;
  enc.n = spec.n;
  enc.colors = spec.colors;
  const int n = spec.n;
  const int total = 2 * n + n * n + spec.colors;

  EdgeSet edges;
  std::vector<int> color_degree(static_cast<std::size_t>(spec.colors) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int c = spec.coloring[i - 1][j - 1];
      edges.emplace_back(enc.u(i), enc.w(i, j));
      edges.emplace_back(enc.w(i, j), enc.v(j));
      edges.emplace_back(enc.w(i, j), enc.x(c));
      ++color_degree[c];
    }
  }
  Graph h(total, edges);

  long long sum_b = 0;
  for (int b : spec.target) sum_b += b;
  if (sum_b != n)
    enc.warnings.push_back("target counts sum to " + std::to_string(sum_b) + ", not n = " +
                           std::to_string(n) + "; no exact matching can exist");

  std::vector<VertexCostFunction> fs(static_cast<std::size_t>(total));
  auto tabulate = [](int degree, auto&& fn) {
    std::vector<std::int64_t> t;
    for (int x = 0; x <= degree; ++x) t.push_back(fn(static_cast<std::int64_t>(x)));
    return VertexCostFunction(std::move(t));
  };
  auto one_sq = [](std::int64_t x) { return (x - 1) * (x - 1); };
  for (int i = 1; i <= n; ++i) {
    fs[enc.u(i) - 1] = tabulate(h.degree(enc.u(i)), one_sq);
    fs[enc.v(i) - 1] = tabulate(h.degree(enc.v(i)), one_sq);
    for (int j = 1; j <= n; ++j)
      fs[enc.w(i, j) - 1] = tabulate(3, [](std::int64_t x) { return x * (3 - x); });
  }
  for (int k = 1; k <= spec.colors; ++k) {
    const std::int64_t b = spec.target[k - 1];
    if (b > color_degree[k])
      enc.warnings.push_back("colour " + std::to_string(k) + " has " +
                             std::to_string(color_degree[k]) + " edges but target " +
                             std::to_string(b));
    fs[enc.x(k) - 1] =
        tabulate(h.degree(enc.x(k)), [b](std::int64_t x) { return (x - b) * (x - b); });
  }
  enc.instance = Instance(std::move(h), std::move(fs));
  return enc;
}

/// M = {(i, j) : d_{w_{i,j}}(G) = 3}, sorted.
inline std::vector<std::pair<int, int>> decode_exact_matching(const ExactMatchingEncoding& enc,
                                                              const EdgeSet& edges) {
  DegreeSequence d = degree_sequence(enc.instance.vertex_count(), edges);
  std::vector<std::pair<int, int>> m;
  for (int i = 1; i <= enc.n; ++i)
    for (int j = 1; j <= enc.n; ++j)
      if (d[enc.w(i, j)] == 3) m.emplace_back(i, j);
  return m;
}

/// The factor when the solution value is 0, std::nullopt otherwise. The
/// degrees are rechecked against the allowed sets.
inline std::optional<EdgeSet> decode_factor(const FactorSpec& spec, const Solution& s) {
  if (s.value != 0) return std::nullopt;
  DegreeSequence d = degree_sequence(spec.h.vertex_count(), s.edges);
  for (Vertex i = 1; i <= spec.h.vertex_count(); ++i)
    if (!spec.allowed[i - 1].count(d[i]))
      throw InternalError("value-0 solution violates the allowed set of vertex " + std::to_string(i));
  return s.edges;
}

inline std::optional<EdgeSet> decode_factor(const LUFactorSpec& spec, const Solution& s) {
  if (s.value != 0) return std::nullopt;
  DegreeSequence d = degree_sequence(spec.h.vertex_count(), s.edges);
  for (Vertex i = 1; i <= spec.h.vertex_count(); ++i)
    if (d[i] < spec.lower[i - 1] || d[i] > spec.upper[i - 1])
      throw InternalError("value-0 solution violates the bounds of vertex " + std::to_string(i));
  return s.edges;
}

enum class HardnessKind { Cubic, BipartiteConvexConcave };

/// Cubic: f(x) = 0 for x in {0,3}, 1 otherwise, on every vertex.
/// BipartiteConvexConcave: (x-1)^2 on the left side, x(3-x) on the right.
inline Instance gen_hardness_instance(HardnessKind kind, const Graph& base,
                                      const std::optional<BipartitePartition>& part = std::nullopt) {
  std::vector<VertexCostFunction> fs;
  if (kind == HardnessKind::Cubic) {
    for (Vertex i = 1; i <= base.vertex_count(); ++i) {
      std::vector<std::int64_t> t;
      for (int x = 0; x <= base.degree(i); ++x) t.push_back(x == 0 || x == 3 ? 0 : 1);
      fs.emplace_back(std::move(t));
    }
    return Instance(base, std::move(fs));
  }
  if (!part) throw NotBipartite("convex/concave hardness instance needs a bipartition");
  if (!check_bipartite(base, *part)) throw NotBipartite("some edge does not cross the partition");
  std::vector<char> left(static_cast<std::size_t>(base.vertex_count()) + 1, 0);
  for (Vertex i : part->left) left[i] = 1;
  for (Vertex i = 1; i <= base.vertex_count(); ++i) {
    std::vector<std::int64_t> t;
    for (std::int64_t x = 0; x <= base.degree(i); ++x) t.push_back(left[i] ? (x - 1) * (x - 1) : x * (3 - x));
    fs.emplace_back(std::move(t));
  }
  return Instance(base, std::move(fs));
}

}  // namespace degseq

#endif  // DEGSEQ_REDUCTIONS_HPP
