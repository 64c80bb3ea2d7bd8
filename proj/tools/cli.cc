// Copyright 2026 The Gridflow Authors.
//
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

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "generate.h"
#include "gridflow/candidates.h"
#include "gridflow/classify.h"
#include "gridflow/dp_solver.h"
#include "gridflow/error.h"
#include "gridflow/extreme.h"
#include "gridflow/flow.h"
#include "gridflow/instance_io.h"
#include "gridflow/oracle.h"

namespace gridflow::cli {
namespace {

struct CommonFlags {
  int64_t budget = EnumerationBudget{}.max_combinations;
  int max_vertices = EnumerationBudget{}.max_vertices;
  double tolerance = 1e-9;
  int threads = 1;
  std::string output;

  EnumerationBudget Budget() const { return {max_vertices, budget}; }
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kNetSupplyNonzero:
    case ErrorCode::kUnknownArc:
    case ErrorCode::kNegativeCapacity:
    case ErrorCode::kNonConcaveCost:
      return kExitParse;
    case ErrorCode::kInfeasibleInstance:
      return kExitInfeasible;
    case ErrorCode::kUnsupported:
      return kExitUnsupported;
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    case ErrorCode::kInfeasibleFlow:
      return kExitVerifyFailed;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kBadB:
    case ErrorCode::kOddTotal:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

Json ArcList(const GridSpec& grid) {
  Json arcs = Json::array();
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    arcs.push_back(Json::array({Json::array({grid.arc(id).tail.row,
                                             grid.arc(id).tail.col}),
                                Json::array({grid.arc(id).head.row,
                                             grid.arc(id).head.col})}));
  }
  return arcs;
}

// The report goes to --output when set, to `out` otherwise.
void Emit(const Json& report, const CommonFlags& flags, std::ostream& out) {
  const std::string text = DumpJson(report);
  if (flags.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.output, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write " + flags.output);
  }
  file << text;
}

int Solve(const std::string& path, const CommonFlags& flags,
          std::ostream& out, std::ostream& err) {
  const GridSpec grid = ReadInstanceFile(path, flags.tolerance);
  SolveOptions options;
  options.threads = flags.threads;
  options.tolerance = flags.tolerance;
  options.budget = flags.Budget();
  const SolveResult r = gridflow::Solve(grid, options);

  Json report;
  report["command"] = "solve";
  report["instance"] = path;
  report["case"] = CaseKindName(r.tag);
  report["classification"] = r.instance_case.ToString();
  report["cost"] = r.cost;
  Json stats;
  stats["states_per_stage"] = r.stats.states_per_stage;
  stats["state_graph_arcs"] = r.stats.num_edges;
  stats["oracle_queries"] = r.stats.oracle_queries;
  stats["extreme_points"] = r.stats.extreme_points;
  report["stats"] = std::move(stats);
  report["flows"] = FlowToJson(grid, r.flow).at("flows");
  Emit(report, flags, out);
  err << "solve: case " << CaseKindName(r.tag) << ", cost "
      << std::setprecision(17) << r.cost << "\n";
  return kExitOk;
}

int Verify(const std::string& instance_path, const std::string& flow_path,
           const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const GridSpec grid = ReadInstanceFile(instance_path, flags.tolerance);
  const FlowAssignment flow = ReadFlowFile(grid, flow_path);
  const FlowCheck check = CheckFlow(grid, flow);
  Json report;
  report["command"] = "verify";
  report["instance"] = instance_path;
  report["flow"] = flow_path;
  report["feasible"] = check.ok();
  Json violations = Json::array();
  for (const FlowViolation& v : check.violations) {
    violations.push_back(v.DebugString(grid));
  }
  report["violations"] = std::move(violations);
  if (check.ok()) {
    report["cost"] = EvaluateCost(grid, flow);
  } else {
    report["cost"] = nullptr;
  }
  Emit(report, flags, out);
  err << "verify: " << (check.ok() ? "feasible" : "infeasible") << ", "
      << check.violations.size() << " violation(s)\n";
  return check.ok() ? kExitOk : kExitVerifyFailed;
}

int Generate(const GenerateOptions& options, const CommonFlags& flags,
             std::ostream& out, std::ostream& err) {
  const Generated g = GenerateInstance(options);
  Emit(InstanceToJson(g.grid), flags, out);
  if (!g.certificate.is_null()) {
    Json cert;
    cert["model"] = options.model;
    for (const auto& [key, value] : g.certificate.items()) cert[key] = value;
    if (flags.output.empty()) {
      err << "certificate: " << cert.dump() << "\n";
    } else {
      CommonFlags sidecar = flags;
      sidecar.output = flags.output + ".cert.json";
      Emit(cert, sidecar, out);
    }
  }
  err << "generate: " << options.model << ", " << g.grid.rows() << "x"
      << g.grid.cols() << "\n";
  return kExitOk;
}

int Enumerate(const std::string& path, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
  const GridSpec grid = ReadInstanceFile(path, flags.tolerance);
  EnumerationStats stats;
  const std::vector<FlowAssignment> points =
      EnumerateExtremePoints(grid, flags.Budget(), &stats);
  Json report;
  report["command"] = "enumerate";
  report["instance"] = path;
  report["count"] = points.size();
  report["spanning_trees"] = stats.spanning_trees;
  const InstanceCase instance_case = ClassifyInstance(grid);
  if (instance_case.kind == CaseKind::kUnsupported) {
    report["candidates"] = nullptr;
  } else {
    const CandidateValueSet c = CandidatesForCase(grid, instance_case);
    Json candidates;
    candidates["provenance"] = CaseKindName(c.provenance);
    candidates["rows"] = c.rows;
    report["candidates"] = std::move(candidates);
  }
  report["arcs"] = ArcList(grid);
  Json list = Json::array();
  for (const FlowAssignment& p : points) {
    Json entry;
    entry["cost"] = EvaluateCost(grid, p);
    entry["flow"] = p.values();
    list.push_back(std::move(entry));
  }
  report["points"] = std::move(list);
  Emit(report, flags, out);
  err << "enumerate: " << points.size() << " extreme point(s)\n";
  return kExitOk;
}

int Oracle(const std::string& path, bool step_search,
           const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const GridSpec grid = ReadInstanceFile(path, flags.tolerance);
  const OracleResult r = step_search ? ExactMinimum(grid, flags.Budget())
                                     : BruteForceMinimum(grid, flags.Budget());
  Json report;
  report["command"] = "oracle";
  report["instance"] = path;
  report["method"] = OracleMethodName(r.method);
  report["extreme_points"] = r.extreme_points;
  report["search_nodes"] = r.nodes;
  report["cost"] = r.cost;
  report["flows"] = FlowToJson(grid, r.flow).at("flows");
  Emit(report, flags, out);
  err << "oracle: " << OracleMethodName(r.method) << ", cost "
      << std::setprecision(17) << r.cost << "\n";
  return kExitOk;
}

void AddCommonFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--budget", flags.budget,
                  "Oracle cap on spanning trees times bound assignments")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-vertices", flags.max_vertices,
                  "Oracle cap on L*T")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", flags.tolerance,
                  "Cost comparison and concavity tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", flags.threads, "State graph worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", flags.output,
                  "Write the report here instead of standard output");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Concave-cost flow on grid networks"};
  app.name("gridflow-cli");
  app.require_subcommand(1);
  CommonFlags flags;
  std::string instance_path;
  std::string flow_path;
  bool step_search = false;
  GenerateOptions gen;

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", instance_path, "Instance file")->required();
  AddCommonFlags(solve, flags);

  CLI::App* verify =
      app.add_subcommand("verify", "Check a flow file against an instance");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("flow", flow_path, "Flow file or solve report")
      ->required();
  AddCommonFlags(verify, flags);

  CLI::App* generate = app.add_subcommand("generate", "Write an instance");
  generate->add_option("--model", gen.model, "Instance family")
      ->required()
      ->check(CLI::IsMember(ModelNames()));
  generate->add_option("--demands", gen.demands, "ulsp demands")
      ->delimiter(',');
  generate->add_option("--setup", gen.setup, "ulsp production setup costs")
      ->delimiter(',');
  generate->add_option("--unit", gen.unit, "ulsp production unit costs")
      ->delimiter(',');
  generate->add_option("--holding", gen.holding, "ulsp unit holding costs")
      ->delimiter(',');
  generate->add_option("--values", gen.values, "Item values")->delimiter(',');
  generate->add_option("--costs", gen.costs, "Item costs")->delimiter(',');
  generate->add_option("--cost-limit", gen.cost_limit, "Knapsack budget");
  generate->add_option("--target", gen.target, "Knapsack target value");
  generate->add_option("--downward-cap", gen.downward_cap,
                       "knapsack-fig3 downward capacity (default max value)");
  generate->add_option("--rows", gen.rows, "random: rows");
  generate->add_option("--cols", gen.cols, "random: columns");
  generate->add_option("--max-supply", gen.max_supply,
                       "random: largest source supply");
  generate->add_option("--capacities", gen.capacities,
                       "random: distinct finite capacities");
  generate->add_option("--seed", gen.seed, "random: seed");
  AddCommonFlags(generate, flags);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List every extreme point");
  enumerate->add_option("instance", instance_path, "Instance file")
      ->required();
  AddCommonFlags(enumerate, flags);

  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force minimum over extreme points");
  oracle->add_option("instance", instance_path, "Instance file")->required();
  oracle->add_flag("--step-search", step_search,
                   "Fall back to the exact search for fixed-charge costs");
  AddCommonFlags(oracle, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  try {
    if (solve->parsed()) {
      status = Solve(instance_path, flags, out, err);
    } else if (verify->parsed()) {
      status = Verify(instance_path, flow_path, flags, out, err);
    } else if (generate->parsed()) {
      status = Generate(gen, flags, out, err);
    } else if (enumerate->parsed()) {
      status = Enumerate(instance_path, flags, out, err);
    } else {
      status = Oracle(instance_path, step_search, flags, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  err << "wall time: " << std::fixed << std::setprecision(6)
      << elapsed.count() << " s\n";
  return status;
}

}  // namespace gridflow::cli
