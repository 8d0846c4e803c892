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

#ifndef DEGSEQ_SOLUTION_HPP
#define DEGSEQ_SOLUTION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/cost_function.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

enum class Method { Convex, Bipartite, Monotone, Brute };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::Convex: return "convex";
    case Method::Bipartite: return "bipartite";
    case Method::Monotone: return "monotone";
    case Method::Brute: return "brute";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Convex, Method::Bipartite, Method::Monotone, Method::Brute})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

/// An optimal subgraph together with how it was obtained.
struct Solution {
  EdgeSet edges;
  DegreeSequence degrees;
  std::int64_t value = 0;
  Method method = Method::Brute;
  std::vector<std::pair<std::string, std::int64_t>> diagnostics;
  std::vector<std::string> warnings;
};

/// Assembles a Solution and recomputes the objective from the edges; a
/// mismatch with the solver's claimed value is an InternalError.
inline Solution make_solution(const Instance& inst, EdgeSet edges, std::int64_t claimed,
                              Method method) {
  std::sort(edges.begin(), edges.end());
  Solution s;
  s.value = objective(inst, edges);
  if (s.value != claimed)
    throw InternalError(std::string(to_string(method)) + " solver claimed value " +
                        std::to_string(claimed) + " but its subgraph scores " +
                        std::to_string(s.value));
  s.degrees = degree_sequence(inst.vertex_count(), edges);
  s.edges = std::move(edges);
  s.method = method;
  return s;
}

}  // namespace degseq

#endif  // DEGSEQ_SOLUTION_HPP
