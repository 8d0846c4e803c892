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

#ifndef DEGSEQ_TOOLS_CLI_APP_HPP
#define DEGSEQ_TOOLS_CLI_APP_HPP

// The `degseq` command line. Kept in a header so the test suite can drive it
// in-process.
//
// Exit codes: 0 success, 1 infeasible / no applicable method,
//             2 input error, 3 internal invariant violation.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "degseq/degseq.hpp"

namespace degseq::cli {

enum ExitCode : int { kOk = 0, kNoMethod = 1, kInputError = 2, kInternalError = 3 };

namespace detail {

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

inline json routing_json(const RoutingReport& report) {
  json j;
  json classes = json::array();
  for (const auto& c : report.classes) classes.push_back(to_string(c));
  j["classes"] = std::move(classes);
  json methods = json::object();
  json applicable = json::array();
  for (const auto& r : report.methods) {
    methods[std::string(to_string(r.method))] = {{"applicable", r.applicable}, {"reason", r.reason}};
    if (r.applicable) applicable.push_back(std::string(to_string(r.method)));
  }
  j["methods"] = std::move(methods);
  j["applicable"] = std::move(applicable);
  if (report.partition)
    j["partition"] = {{"left", report.partition->left}, {"right", report.partition->right}};
  if (report.fixed_set) j["fixed_set"] = *report.fixed_set;
  return j;
}

inline int solve_command(const std::string& path, const std::string& method_name,
                         const std::string& out_path, const SolverLimits& limits, std::ostream& out) {
  InstanceFile file = read_instance_file(path);
  std::optional<Method> method;
  if (method_name != "auto") {
    method = parse_method(method_name);
    if (!method) throw InputError("unknown method '" + method_name + "'");
  }
  Solution s = solve_instance(file, method, limits);
  if (objective(file.instance, s.edges) != s.value)
    throw InternalError("solution value does not match its own edges");
  emit(to_json(s).dump(2) + "\n", out_path, out);
  return kOk;
}

inline int classify_command(const std::string& path, const SolverLimits& limits, std::ostream& out) {
  InstanceFile file = read_instance_file(path);
  RoutingReport report = classify_instance(file, limits);
  json j = routing_json(report);
  out << j.dump(2) << "\n";
  return j["applicable"].empty() ? kNoMethod : kOk;
}

inline int reduce_command(const std::string& kind, const std::string& spec_path,
                          const std::string& out_path, std::ostream& out, std::ostream& err) {
  json spec = parse_json_text(read_text_file(spec_path), spec_path);
  InstanceFile file;
  json sidecar;
  sidecar["kind"] = kind;
  if (kind == "factor") {
    FactorSpec fs = factor_spec_from_json(spec);
    file.instance = encode_factor(fs);
    json allowed = json::array();
    for (const auto& b : fs.allowed) allowed.push_back(std::vector<int>(b.begin(), b.end()));
    sidecar["allowed"] = std::move(allowed);
  } else if (kind == "lu") {
    LUFactorSpec ls = lu_spec_from_json(spec);
    file.instance = encode_lu_factor(ls);
    sidecar["lower"] = ls.lower;
    sidecar["upper"] = ls.upper;
  } else if (kind == "exact-matching") {
    ExactMatchingSpec es = exact_matching_spec_from_json(spec);
    ExactMatchingEncoding enc = encode_exact_matching(es);
    for (const auto& w : enc.warnings) err << "warning: " << w << "\n";
    file.instance = enc.instance;
    sidecar["n"] = enc.n;
    sidecar["colors"] = enc.colors;
    sidecar["u"] = json::array();
    sidecar["v"] = json::array();
    sidecar["w"] = json::array();
    sidecar["x"] = json::array();
    for (int i = 1; i <= enc.n; ++i) {
      sidecar["u"].push_back(enc.u(i));
      sidecar["v"].push_back(enc.v(i));
      json row = json::array();
      for (int j = 1; j <= enc.n; ++j) row.push_back(enc.w(i, j));
      sidecar["w"].push_back(std::move(row));
    }
    for (int k = 1; k <= enc.colors; ++k) sidecar["x"].push_back(enc.x(k));
    sidecar["decode"] = "M = {(i,j) : degree of w[i-1][j-1] in the solution is 3}";
    sidecar["warnings"] = enc.warnings;
  } else if (kind == "hardness") {
    HardnessSpec hs = hardness_spec_from_json(spec);
    file.instance = gen_hardness_instance(hs.kind, hs.base, hs.partition);
    if (hs.partition) file.partition = hs.partition;
    sidecar["variant"] = spec["kind"];
  } else {
    throw InputError("unknown reduction kind '" + kind + "' (factor, lu, exact-matching, hardness)");
  }
  write_text_file(out_path, to_json(file).dump(2) + "\n");
  write_text_file(out_path + ".decode.json", sidecar.dump(2) + "\n");
  out << "wrote " << out_path << " (" << file.instance.vertex_count() << " vertices, "
      << file.instance.graph().edge_count() << " edges)\n";
  return kOk;
}

inline int export_dot_command(const std::string& path, const std::string& target,
                              const std::string& out_path, const SolverLimits& limits,
                              std::ostream& out) {
  InstanceFile file = read_instance_file(path);
  if (target == "aux") {
    ConvexSolve cs = solve_convex_detailed(file.instance);
    emit(aux_to_dot(cs.aux, cs.matching, file.instance.graph()), out_path, out);
    return kOk;
  }
  if (target != "dp") throw InputError("unknown DOT target '" + target + "' (aux, dp)");
  RoutingReport routing = classify_instance(file, limits);
  DpOptions options;
  options.state_budget = limits.state_budget;
  options.keep_arcs = true;
  if (routing.applies(Method::Bipartite)) {
    DpSolve ds = solve_bipartite_detailed(file.instance, *routing.partition, options);
    emit(dp_to_dot(ds.dp), out_path, out);
    return kOk;
  }
  if (routing.applies(Method::Monotone)) {
    DpSolve ds = solve_monotone_detailed(file.instance, *routing.fixed_set, options);
    emit(dp_to_dot(ds.dp), out_path, out);
    return kOk;
  }
  throw MethodInapplicable("no DP method applies: " + routing.report(Method::Bipartite).reason +
                           "; " + routing.report(Method::Monotone).reason);
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact optimization over degree sequences of subgraphs", "degseq"};
  app.require_subcommand(1);

  SolverLimits limits;
  app.add_option("--state-budget", limits.state_budget, "DP state budget")
      ->envname("DEGSEQ_STATE_BUDGET");
  app.add_option("--oracle-limit", limits.oracle_limit, "maximum edge count for brute force")
      ->envname("DEGSEQ_ORACLE_LIMIT");

  std::string file;
  std::string out_path;
  std::string method = "auto";
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", file, "instance JSON")->required();
  solve->add_option("--method", method, "auto|convex|bipartite|monotone|brute")
      ->check(CLI::IsMember({"auto", "convex", "bipartite", "monotone", "brute"}));
  solve->add_option("--out", out_path, "solution JSON (default: stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "report which methods apply");
  classify_cmd->add_option("file", file, "instance JSON")->required();

  std::string kind;
  std::string spec_path;
  auto* reduce = app.add_subcommand("reduce", "encode a factor/lu/exact-matching/hardness spec");
  reduce->add_option("kind", kind, "factor|lu|exact-matching|hardness")->required();
  reduce->add_option("spec", spec_path, "spec JSON")->required();
  reduce->add_option("--out", out_path, "instance JSON to write")->required();

  std::string target;
  auto* dot = app.add_subcommand("export-dot", "write the gadget graph or DP digraph as DOT");
  dot->add_option("file", file, "instance JSON")->required();
  dot->add_option("--target", target, "aux|dp")->required()->check(CLI::IsMember({"aux", "dp"}));
  dot->add_option("--out", out_path, "DOT file (default: stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*solve) return detail::solve_command(file, method, out_path, limits, out);
    if (*classify_cmd) return detail::classify_command(file, limits, out);
    if (*reduce) return detail::reduce_command(kind, spec_path, out_path, out, err);
    if (*dot) return detail::export_dot_command(file, target, out_path, limits, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const MethodInapplicable& e) {
    err << "no method: " << e.what() << "\n";
    return kNoMethod;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace degseq::cli

#endif  // DEGSEQ_TOOLS_CLI_APP_HPP
