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

#ifndef DEGSEQ_ROUTING_HPP
#define DEGSEQ_ROUTING_HPP

// Which exact methods apply to an instance file, and dispatch to them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/bipartite_dp.hpp"
#include "degseq/convex_reduction.hpp"
#include "degseq/cost_function.hpp"
#include "degseq/dp_digraph.hpp"
#include "degseq/io.hpp"
#include "degseq/monotone_dp.hpp"
#include "degseq/oracle.hpp"
#include "degseq/solution.hpp"

namespace degseq {

struct SolverLimits {
  std::uint64_t state_budget = kDefaultStateBudget;
  int oracle_limit = kDefaultOracleLimit;
};

struct MethodReport {
  Method method;
  bool applicable = false;
  std::string reason;
};

struct RoutingReport {
  std::vector<FunctionClasses> classes;
  std::vector<MethodReport> methods;  // convex, bipartite, monotone, brute
  std::optional<BipartitePartition> partition;
  std::optional<std::vector<Vertex>> fixed_set;

  bool applies(Method m) const {
    for (const auto& r : methods)
      if (r.method == m) return r.applicable;
    return false;
  }
  const MethodReport& report(Method m) const {
    for (const auto& r : methods)
      if (r.method == m) return r;
    throw InternalError("method missing from routing report");
  }
};

namespace detail {

inline std::uint64_t projected_states(const Graph& h, std::span<const Vertex> fixed, std::size_t stages) {
  std::uint64_t product = 1;
  for (Vertex i : fixed)
    product = saturating_mul(product, static_cast<std::uint64_t>(h.degree(i)) + 1);
  return saturating_mul(stages, product);
}

inline std::size_t intra_edges(const Graph& h, std::span<const Vertex> fixed) {
  std::vector<char> in(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
  for (Vertex i : fixed) in[i] = 1;
  std::size_t t = 0;
  for (const Edge& e : h.edges()) t += in[e.u] && in[e.v];
  return t;
}

inline MethodReport route_convex(const Instance& inst) {
  for (Vertex i = 1; i <= inst.vertex_count(); ++i)
    if (!classify(inst.function(i)).convex)
      return {Method::Convex, false, "cost function of vertex " + std::to_string(i) + " is not convex"};
  return {Method::Convex, true, "all cost functions convex"};
}

inline MethodReport route_bipartite(const InstanceFile& file, const SolverLimits& limits,
                                    std::optional<BipartitePartition>& chosen) {
  const Graph& h = file.instance.graph();
  std::optional<BipartitePartition> part;
  std::string origin;
  if (file.partition) {
    if (!check_bipartite(h, *file.partition))
      return {Method::Bipartite, false, "given partition has an edge inside one side"};
    part = file.partition;
    origin = "given partition";
  } else {
    part = derive_bipartition(h);
    if (!part) return {Method::Bipartite, false, "host graph is not bipartite"};
    origin = "derived partition";
  }
  const BipartitePartition oriented = part->left.size() > part->right.size() ? part->swapped() : *part;
  std::uint64_t projected = projected_states(h, oriented.left, oriented.right.size());
  if (projected > limits.state_budget)
    return {Method::Bipartite, false,
            origin + ": projected " + std::to_string(projected) + " states exceed budget " +
                std::to_string(limits.state_budget)};
  chosen = part;
  return {Method::Bipartite, true,
          origin + " with fixed side of " + std::to_string(oriented.left.size()) + " vertices"};
}

// Without a fixed set in the file, take I as the vertices whose functions are
// not monotone in a direction, trying both directions. An inferred I must be
// no larger than its complement, mirroring the bipartite orientation rule.
inline MethodReport route_monotone(const InstanceFile& file, const SolverLimits& limits,
                                   std::optional<std::vector<Vertex>>& chosen) {
  const Instance& inst = file.instance;
  const Graph& h = inst.graph();
  const int n = inst.vertex_count();
  auto projected_for = [&](const std::vector<Vertex>& fixed) {
    return projected_states(h, fixed, static_cast<std::size_t>(n) - fixed.size() + intra_edges(h, fixed));
  };

  if (file.fixed_set) {
    try {
      (void)reduce_monotone(inst, *file.fixed_set);
    } catch (const MethodInapplicable& e) {
      return {Method::Monotone, false, std::string("given fixed set: ") + e.what()};
    }
    std::uint64_t projected = projected_for(*file.fixed_set);
    if (projected > limits.state_budget)
      return {Method::Monotone, false,
              "given fixed set: projected " + std::to_string(projected) + " states exceed budget " +
                  std::to_string(limits.state_budget)};
    chosen = file.fixed_set;
    return {Method::Monotone, true, "given fixed set of " + std::to_string(file.fixed_set->size()) + " vertices"};
  }

  std::optional<std::vector<Vertex>> best;
  std::uint64_t best_states = 0;
  std::string best_direction;
  for (Monotonicity dir : {Monotonicity::Nondecreasing, Monotonicity::Nonincreasing}) {
    std::vector<Vertex> fixed;
    for (Vertex i = 1; i <= n; ++i) {
      FunctionClasses c = classify(inst.function(i));
      bool ok = dir == Monotonicity::Nondecreasing ? c.nondecreasing : c.nonincreasing;
      if (!ok) fixed.push_back(i);
    }
    if (2 * fixed.size() > static_cast<std::size_t>(n)) continue;
    std::uint64_t states = projected_for(fixed);
    if (!best || states < best_states) {
      best = std::move(fixed);
      best_states = states;
      best_direction = std::string(to_string(dir));
    }
  }
  if (!best)
    return {Method::Monotone, false,
            "no fixed set of at most half the vertices leaves uniformly monotone functions"};
  if (best_states > limits.state_budget)
    return {Method::Monotone, false,
            "inferred fixed set: projected " + std::to_string(best_states) +
                " states exceed budget " + std::to_string(limits.state_budget)};
  chosen = best;
  return {Method::Monotone, true,
          "inferred fixed set of " + std::to_string(best->size()) + " vertices (" + best_direction + ")"};
}

inline MethodReport route_brute(const Instance& inst, const SolverLimits& limits) {
  const std::size_t m = inst.graph().edge_count();
  if (m > static_cast<std::size_t>(limits.oracle_limit))
    return {Method::Brute, false,
            std::to_string(m) + " edges exceed the oracle limit " + std::to_string(limits.oracle_limit)};
  return {Method::Brute, true, std::to_string(m) + " edges within the oracle limit"};
}

}  // namespace detail

inline RoutingReport classify_instance(const InstanceFile& file, const SolverLimits& limits = {}) {
  RoutingReport report;
  for (const auto& f : file.instance.functions()) report.classes.push_back(classify(f));
  report.methods.push_back(detail::route_convex(file.instance));
  report.methods.push_back(detail::route_bipartite(file, limits, report.partition));
  report.methods.push_back(detail::route_monotone(file, limits, report.fixed_set));
  report.methods.push_back(detail::route_brute(file.instance, limits));
  return report;
}

/// Solves with `method`, or with the first applicable method in the order
/// convex, bipartite, monotone, brute when `method` is empty. Throws
/// MethodInapplicable naming the violated precondition.
inline Solution solve_instance(const InstanceFile& file, std::optional<Method> method,
                               const SolverLimits& limits = {}) {
  RoutingReport routing = classify_instance(file, limits);
  if (!method) {
    for (const auto& r : routing.methods) {
      if (r.applicable) {
        method = r.method;
        break;
      }
    }
    if (!method) throw MethodInapplicable("no exact method applies to this instance");
  }
  const MethodReport& r = routing.report(*method);
  if (!r.applicable)
    throw MethodInapplicable(std::string(to_string(*method)) + " method inapplicable: " + r.reason);

  DpOptions options;
  options.state_budget = limits.state_budget;
  switch (*method) {
    case Method::Convex: return solve_convex(file.instance);
    case Method::Bipartite: return solve_bipartite(file.instance, *routing.partition, options);
    case Method::Monotone: return solve_monotone(file.instance, *routing.fixed_set, options);
    case Method::Brute: return solve_brute(file.instance, limits.oracle_limit);
  }
  throw InternalError("unknown method");
}

}  // namespace degseq

#endif  // DEGSEQ_ROUTING_HPP
