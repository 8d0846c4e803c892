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

#ifndef DEGSEQ_GRAPH_HPP
#define DEGSEQ_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/error.hpp"

namespace degseq {

/// Vertices are 1-indexed everywhere: a graph on n vertices uses [n] = {1,...,n}.
using Vertex = int;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool contains(Vertex x) const { return x == u || x == v; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// An edge subset, kept sorted lexicographically.
using EdgeSet = std::vector<Edge>;

inline std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

/// Simple undirected graph on [n]; immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Edges may be given in either orientation; they are canonicalized and
  /// sorted. Loops, out-of-range endpoints and duplicates are rejected.
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
      if (raw.u == raw.v) throw InputError("loop at vertex " + std::to_string(raw.u));
      Edge e(raw.u, raw.v);
      if (e.u < 1 || e.v > n)
        throw InputError("edge " + to_string(e) + " has an endpoint outside [1," +
                         std::to_string(n) + "]");
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw InputError("duplicate edge " + to_string(*dup));

    adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains_vertex(Vertex i) const noexcept { return i >= 1 && i <= n_; }

  int degree(Vertex i) const {
    check_vertex(i);
    return static_cast<int>(adjacency_[i].size());
  }

  /// Sorted opposite endpoints of the edges incident to i.
  std::span<const Vertex> adjacent(Vertex i) const {
    check_vertex(i);
    return adjacency_[i];
  }

  std::optional<std::size_t> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_edge(Vertex a, Vertex b) const {
    return a != b && edge_index(Edge(a, b)).has_value();
  }

  void check_vertex(Vertex i) const {
    if (!contains_vertex(i))
      throw InputError("vertex " + std::to_string(i) + " outside [1," + std::to_string(n_) + "]");
  }

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// d(G) = (d_1(G), ..., d_n(G)), accessed with 1-indexed vertices.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> values) : values_(std::move(values)) {}

  int operator[](Vertex i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  int& operator[](Vertex i) { return values_.at(static_cast<std::size_t>(i - 1)); }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<int>& values() const noexcept { return values_; }

  long long sum() const {
    long long s = 0;
    for (int d : values_) s += d;
    return s;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

/// Degree sequence of the graph ([n], edges). Edges are not validated
/// against a host graph here.
inline DegreeSequence degree_sequence(int n, std::span<const Edge> edges) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u == e.v)
      throw InputError("edge " + to_string(e) + " outside [1," + std::to_string(n) + "]");
    ++d[e.u - 1];
    ++d[e.v - 1];
  }
  return DegreeSequence(std::move(d));
}

inline DegreeSequence degree_sequence(const Graph& g) {
  return degree_sequence(g.vertex_count(), g.edges());
}

inline std::vector<Vertex> neighbors(const Graph& g, Vertex i) {
  auto adj = g.adjacent(i);
  return {adj.begin(), adj.end()};
}

/// Ordered vertex lists I (left) and J (right).
struct BipartitePartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;

  BipartitePartition swapped() const { return {right, left}; }

  /// Throws InputError unless left and right partition [n].
  void validate(int n) const {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto* side : {&left, &right}) {
      for (Vertex x : *side) {
        if (x < 1 || x > n)
          throw InputError("partition vertex " + std::to_string(x) + " outside [1," +
                           std::to_string(n) + "]");
        if (seen[x]) throw InputError("partition covers vertex " + std::to_string(x) + " twice");
        seen[x] = 1;
      }
    }
    for (Vertex x = 1; x <= n; ++x)
      if (!seen[x]) throw InputError("partition misses vertex " + std::to_string(x));
  }
};

/// True iff every edge has exactly one endpoint on each side.
inline bool check_bipartite(const Graph& g, const BipartitePartition& part) {
  part.validate(g.vertex_count());
  std::vector<char> on_left(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex x : part.left) on_left[x] = 1;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return on_left[e.u] != on_left[e.v]; });
}

/// Degree of j in the subgraph induced by `subset`; j must belong to it.
inline int induced_degree(const Graph& g, Vertex j, std::span<const Vertex> subset) {
  g.check_vertex(j);
  if (std::find(subset.begin(), subset.end(), j) == subset.end())
    throw InputError("vertex " + std::to_string(j) + " is not in the subset");
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex x : subset) {
    g.check_vertex(x);
    in[x] = 1;
  }
  int count = 0;
  for (Vertex k : g.adjacent(j)) count += in[k];
  return count;
}

/// Two-colours g if possible. Within each connected component the colour
/// class with the smaller product of (degree + 1) goes left, so the left
/// side is the cheap one for the bipartite dynamic program. Isolated
/// vertices go right.
inline std::optional<BipartitePartition> derive_bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n) + 1, -1);
  BipartitePartition part;
  for (Vertex root = 1; root <= n; ++root) {
    if (colour[root] != -1) continue;
    if (g.degree(root) == 0) {
      colour[root] = 1;
      part.right.push_back(root);
      continue;
    }
    std::vector<Vertex> component;
    std::queue<Vertex> frontier;
    colour[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex x = frontier.front();
      frontier.pop();
      component.push_back(x);
      for (Vertex y : g.adjacent(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          frontier.push(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
    double weight[2] = {0.0, 0.0};
    std::size_t count[2] = {0, 0};
    for (Vertex x : component) {
      weight[colour[x]] += std::log(static_cast<double>(g.degree(x)) + 1.0);
      ++count[colour[x]];
    }
    int left_colour = 0;
    if (weight[1] < weight[0] || (weight[1] == weight[0] && count[1] < count[0])) left_colour = 1;
    for (Vertex x : component) (colour[x] == left_colour ? part.left : part.right).push_back(x);
  }
  std::sort(part.left.begin(), part.left.end());
  std::sort(part.right.begin(), part.right.end());
  return part;
}

}  // namespace degseq

#endif  // DEGSEQ_GRAPH_HPP
