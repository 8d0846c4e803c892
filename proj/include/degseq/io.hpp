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

#ifndef DEGSEQ_IO_HPP
#define DEGSEQ_IO_HPP

// JSON instance, solution and reduction-spec files.
//
// Instance:  {"n": 3, "edges": [[1,2],[2,3]], "functions": [[..],[..],[..]],
//             "partition": {"left": [..], "right": [..]},   (optional)
//             "fixed_set": [..]}                              (optional)
// Solution:  {"value": 0, "edges": [[1,2]], "degrees": [..], "method": "convex",
//             "diagnostics": {..}, "warnings": [..]}

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "degseq/cost_function.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/reductions.hpp"
#include "degseq/solution.hpp"

namespace degseq {

using json = nlohmann::json;

struct InstanceFile {
  Instance instance;
  std::optional<BipartitePartition> partition;
  std::optional<std::vector<Vertex>> fixed_set;

  friend bool operator==(const InstanceFile& a, const InstanceFile& b) {
    auto same_part = [](const std::optional<BipartitePartition>& x,
                        const std::optional<BipartitePartition>& y) {
      if (x.has_value() != y.has_value()) return false;
      return !x || (x->left == y->left && x->right == y->right);
    };
    return a.instance == b.instance && same_part(a.partition, b.partition) &&
           a.fixed_set == b.fixed_set;
  }
};

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

inline std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw InputError(where + ": integer out of range");
  return j.get<std::int64_t>();
}

inline int as_small_int(const json& j, const std::string& where) {
  std::int64_t v = as_int(j, where);
  if (v < INT32_MIN || v > INT32_MAX) throw InputError(where + ": integer out of range");
  return static_cast<int>(v);
}

inline const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

inline std::vector<int> int_list(const json& j, const std::string& where) {
  std::vector<int> out;
  const json& arr = as_array(j, where);
  for (std::size_t k = 0; k < arr.size(); ++k)
    out.push_back(as_small_int(arr[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::vector<Edge> edge_list(const json& j, const std::string& where) {
  std::vector<Edge> out;
  const json& arr = as_array(j, where);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string at = where + "[" + std::to_string(k) + "]";
    const json& pair = as_array(arr[k], at);
    if (pair.size() != 2) throw InputError(at + ": an edge is a pair [i, j]");
    int a = as_small_int(pair[0], at + "[0]");
    int b = as_small_int(pair[1], at + "[1]");
    if (a == b) throw InputError(at + ": loop at vertex " + std::to_string(a));
    out.emplace_back(a, b);
  }
  return out;
}

inline Graph graph_from(const json& j, const std::string& where) {
  int n = as_small_int(field(j, "n", where), where + ".n");
  if (n < 1) throw InputError(where + ".n: vertex count must be positive");
  auto edges = edge_list(field(j, "edges", where), where + ".edges");
  try {
    return Graph(n, edges);
  } catch (const InputError& e) {
    throw InputError(where + ".edges: " + e.what());
  }
}

inline json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}


}  // namespace detail

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

inline InstanceFile instance_from_json(const json& j) {
  const std::string where = "instance";
  Graph h = detail::graph_from(j, where);
  const json& fj = detail::as_array(detail::field(j, "functions", where), where + ".functions");
  if (fj.size() != static_cast<std::size_t>(h.vertex_count()))
    throw InputError(where + ".functions: expected " + std::to_string(h.vertex_count()) +
                     " tables, got " + std::to_string(fj.size()));
  std::vector<VertexCostFunction> fs;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    std::string at = where + ".functions[" + std::to_string(i) + "]";
    const json& table = detail::as_array(fj[i], at);
    int expected = h.degree(static_cast<Vertex>(i) + 1) + 1;
    if (table.size() != static_cast<std::size_t>(expected))
      throw InputError(at + ": vertex " + std::to_string(i + 1) + " has degree " +
                       std::to_string(expected - 1) + ", so its table needs " +
                       std::to_string(expected) + " entries, got " + std::to_string(table.size()));
    std::vector<std::int64_t> values;
    for (std::size_t k = 0; k < table.size(); ++k)
      values.push_back(detail::as_int(table[k], at + "[" + std::to_string(k) + "]"));
    fs.emplace_back(std::move(values));
  }

  InstanceFile file;
  file.instance = Instance(std::move(h), std::move(fs));
  if (auto it = j.find("partition"); it != j.end() && !it->is_null()) {
    BipartitePartition part;
    part.left = detail::int_list(detail::field(*it, "left", where + ".partition"), where + ".partition.left");
    part.right = detail::int_list(detail::field(*it, "right", where + ".partition"), where + ".partition.right");
    try {
      part.validate(file.instance.vertex_count());
    } catch (const InputError& e) {
      throw InputError(where + ".partition: " + e.what());
    }
    file.partition = std::move(part);
  }
  if (auto it = j.find("fixed_set"); it != j.end() && !it->is_null()) {
    auto fixed = detail::int_list(*it, where + ".fixed_set");
    std::set<int> seen;
    for (int x : fixed) {
      if (x < 1 || x > file.instance.vertex_count())
        throw InputError(where + ".fixed_set: vertex " + std::to_string(x) + " out of range");
      if (!seen.insert(x).second)
        throw InputError(where + ".fixed_set: vertex " + std::to_string(x) + " listed twice");
    }
    file.fixed_set = std::move(fixed);
  }
  return file;
}

inline json to_json(const InstanceFile& file) {
  const Instance& inst = file.instance;
  json j;
  j["n"] = inst.vertex_count();
  j["edges"] = detail::edges_json(inst.graph().edges());
  json fs = json::array();
  for (const auto& f : inst.functions()) fs.push_back(f.values());
  j["functions"] = std::move(fs);
  if (file.partition) j["partition"] = {{"left", file.partition->left}, {"right", file.partition->right}};
  if (file.fixed_set) j["fixed_set"] = *file.fixed_set;
  return j;
}

inline json to_json(const Solution& s) {
  json j;
  j["value"] = s.value;
  j["edges"] = detail::edges_json(s.edges);
  j["degrees"] = s.degrees.values();
  j["method"] = std::string(to_string(s.method));
  json diag = json::object();
  for (const auto& [k, v] : s.diagnostics) diag[k] = v;
  j["diagnostics"] = std::move(diag);
  j["warnings"] = s.warnings;
  return j;
}

inline InstanceFile read_instance_file(const std::string& path) {
  return instance_from_json(parse_json_text(read_text_file(path), path));
}

// Reduction specs.
//   factor:          {"n", "edges", "allowed": [[..], ..]}
//   lu:              {"n", "edges", "lower": [..], "upper": [..]}
//   exact-matching:  {"n", "colors", "target": [..], "coloring": [[..], ..]}
//   hardness:        {"kind": "cubic" | "bipartite-convex-concave", "n", "edges",
//                     "partition": {"left", "right"}}

inline FactorSpec factor_spec_from_json(const json& j) {
  const std::string where = "factor";
  FactorSpec spec;
  spec.h = detail::graph_from(j, where);
  const json& allowed = detail::as_array(detail::field(j, "allowed", where), where + ".allowed");
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    auto list = detail::int_list(allowed[i], where + ".allowed[" + std::to_string(i) + "]");
    spec.allowed.emplace_back(list.begin(), list.end());
  }
  try {
    spec.validate();
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  return spec;
}

inline LUFactorSpec lu_spec_from_json(const json& j) {
  const std::string where = "lu";
  LUFactorSpec spec;
  spec.h = detail::graph_from(j, where);
  spec.lower = detail::int_list(detail::field(j, "lower", where), where + ".lower");
  spec.upper = detail::int_list(detail::field(j, "upper", where), where + ".upper");
  try {
    spec.validate();
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  return spec;
}

inline ExactMatchingSpec exact_matching_spec_from_json(const json& j) {
  const std::string where = "exact-matching";
  ExactMatchingSpec spec;
  spec.n = detail::as_small_int(detail::field(j, "n", where), where + ".n");
  spec.colors = detail::as_small_int(detail::field(j, "colors", where), where + ".colors");
  spec.target = detail::int_list(detail::field(j, "target", where), where + ".target");
  const json& rows = detail::as_array(detail::field(j, "coloring", where), where + ".coloring");
  for (std::size_t i = 0; i < rows.size(); ++i)
    spec.coloring.push_back(detail::int_list(rows[i], where + ".coloring[" + std::to_string(i) + "]"));
  try {
    spec.validate();
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  return spec;
}

struct HardnessSpec {
  HardnessKind kind = HardnessKind::Cubic;
  Graph base;
  std::optional<BipartitePartition> partition;
};

inline HardnessSpec hardness_spec_from_json(const json& j) {
  const std::string where = "hardness";
  HardnessSpec spec;
  const json& kind = detail::field(j, "kind", where);
  if (kind == "cubic") {
    spec.kind = HardnessKind::Cubic;
  } else if (kind == "bipartite-convex-concave") {
    spec.kind = HardnessKind::BipartiteConvexConcave;
  } else {
    throw InputError(where + ".kind: expected \"cubic\" or \"bipartite-convex-concave\"");
  }
  spec.base = detail::graph_from(j, where);
  if (auto it = j.find("partition"); it != j.end() && !it->is_null()) {
    BipartitePartition part;
    part.left = detail::int_list(detail::field(*it, "left", where + ".partition"), where + ".partition.left");
    part.right = detail::int_list(detail::field(*it, "right", where + ".partition"), where + ".partition.right");
    spec.partition = std::move(part);
  }
  return spec;
}

}  // namespace degseq

#endif  // DEGSEQ_IO_HPP
