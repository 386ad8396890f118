// Copyright 2026 The ghzprep Authors.
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

#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "ghzprep/exact_prep.hpp"
#include "ghzprep/reference_oracle.hpp"
#include "ghzprep/tolerances.hpp"
#include "report.hpp"

namespace ghzprep::cli {

namespace {

constexpr int kFullStateMaxQubits = 16;

// Replays the executed plan through the dense-matrix route and returns the
// max amplitude deviation from the fast path.
double dense_validation(const PrepReport& report, bool minus_variant) {
  const PrepPlan& plan = report.plan;
  StateVector reference = basis_state(plan.qubits, 0);
  reference = dense_apply(dense_walsh(plan.qubits), reference);
  if (plan.pre_phase) {
    reference = dense_apply(
        dense_grover(GroverParams((*plan.pre_phase)[0], (*plan.pre_phase)[1], plan.marked),
                     plan.qubits),
        reference);
  }
  const DenseUnitary standard =
      dense_grover(GroverParams(std::numbers::pi, std::numbers::pi, plan.marked), plan.qubits);
  for (int i = 0; i < plan.iterations; ++i) {
    reference = dense_apply(standard, reference);
  }
  if (plan.post_phase) {
    reference = dense_apply(
        dense_grover(GroverParams((*plan.post_phase)[0], (*plan.post_phase)[1], plan.marked),
                     plan.qubits),
        reference);
  }
  if (plan.corrective_phase != 0.0) {
    PhaseOracle fix;
    fix.set(plan.marked.back(), plan.corrective_phase);
    reference = dense_apply(dense_phase(fix, plan.qubits), reference);
  }
  if (minus_variant) {
    PhaseOracle flip;
    flip.set(reference.dimension() - 1, std::numbers::pi);
    reference = dense_apply(dense_phase(flip, plan.qubits), reference);
  }
  double worst = 0.0;
  for (std::uint64_t i = 0; i < reference.dimension(); ++i) {
    worst = std::max(worst,
                     std::abs(reference.data()[i] - report.final_state.data()[i]));
  }
  return worst;
}

int emit_solver_failure(const convergence_error& error, std::ostream& out) {
  Json report;
  report["error"] = error.what();
  report["residual"] = error.residual();
  report["iterations"] = error.iterations();
  out << render_json(report);
  return 3;
}

bool write_file(const std::string& path, const std::string& contents, std::ostream& err) {
  std::ofstream file(path);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return false;
  }
  file << contents;
  return true;
}

// Plans, executes, and reports for both prepare and search; the two commands
// differ only in how the plan is made and how success is judged.
int run_plan(const RunConfig& config, PrepPlan plan, bool is_search, std::ostream& out,
             std::ostream& err) {
  const bool want_rows = config.format == "csv" || !config.dump_trajectory.empty();
  std::vector<TrajectoryRow> rows;
  PrepReport report = want_rows ? execute(plan, &rows) : execute(plan);

  const bool minus = !is_search && config.variant == "minus";
  if (minus) {
    to_minus_variant(report.final_state);
    remeasure(report);
  }

  ReportOptions options;
  options.variant = config.variant;
  options.search = is_search;
  options.full_state = config.full_state;
  options.trajectory_file = config.dump_trajectory;

  if (config.validate) {
    options.validation_deviation = dense_validation(report, minus);
  }

  if (!config.dump_trajectory.empty() &&
      !write_file(config.dump_trajectory, render_trajectory_csv(rows), err)) {
    return 2;
  }

  if (config.format == "json") {
    out << render_json(run_report(report, options));
  } else if (config.format == "csv") {
    out << render_trajectory_csv(rows);
  } else {
    out << render_run_text(report, options);
  }

  if (options.validation_deviation && *options.validation_deviation >= kSuccessTol) {
    err << "dense validation deviation " << *options.validation_deviation
        << " exceeds tolerance\n";
    return 3;
  }
  const double missing = 1.0 - report.success_probability;
  return missing < kSuccessTol ? 0 : 3;
}

}  // namespace

int cmd_prepare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.full_state && config.qubits > kFullStateMaxQubits) {
    err << "--full-state is limited to n <= " << kFullStateMaxQubits << "\n";
    return 2;
  }
  if (config.validate && config.qubits > kDenseMaxQubits) {
    err << "--validate is limited to n <= " << kDenseMaxQubits << "\n";
    return 2;
  }
  PrepPlan plan;
  try {
    if (config.method == "direct") {
      std::optional<PrepPlan> direct = plan_direct(config.qubits);
      if (!direct) {
        err << "direct preparation needs an integer iteration count; n = " << config.qubits
            << " has j = " << optimal_iteration_count(TrajectoryModel::ghz_pair(config.qubits))
            << " (use --method reinit, retard, or auto)\n";
        return 2;
      }
      plan = *direct;
    } else if (config.method == "reinit") {
      plan = plan_reinit(config.qubits);
    } else if (config.method == "retard") {
      plan = plan_retard(config.qubits);
    } else {  // auto: direct when exact, otherwise the cheaper retard route
      std::optional<PrepPlan> direct = plan_direct(config.qubits);
      plan = direct ? *direct : plan_retard(config.qubits);
    }
  } catch (const convergence_error& error) {
    return emit_solver_failure(error, out);
  }
  return run_plan(config, std::move(plan), /*is_search=*/false, out, err);
}

int cmd_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.validate && config.qubits > kDenseMaxQubits) {
    err << "--validate is limited to n <= " << kDenseMaxQubits << "\n";
    return 2;
  }
  if (config.full_state && config.qubits > kFullStateMaxQubits) {
    err << "--full-state is limited to n <= " << kFullStateMaxQubits << "\n";
    return 2;
  }
  PrepPlan plan;
  try {
    plan = plan_exact_search(config.qubits, config.marked);
  } catch (const convergence_error& error) {
    return emit_solver_failure(error, out);
  } catch (const std::invalid_argument& error) {
    err << error.what() << "\n";
    return 2;
  }
  return run_plan(config, std::move(plan), /*is_search=*/true, out, err);
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int marked_count = 2;
  if (!config.marked.empty()) {
    std::vector<std::uint64_t> unique = config.marked;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    if (unique.back() >= (std::uint64_t{1} << config.qubits)) {
      err << "marked index out of range\n";
      return 2;
    }
    marked_count = static_cast<int>(unique.size());
  }
  PrepAnalysis analysis;
  try {
    analysis = analyze_preparation(config.qubits, marked_count);
  } catch (const std::invalid_argument& error) {
    err << error.what() << "\n";
    return 2;
  }
  if (config.format == "json") {
    out << render_json(analyze_report(analysis));
  } else if (config.format == "csv") {
    out << render_analyze_csv(analysis);
  } else {
    out << render_analyze_text(analysis);
  }
  return 0;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact preparation of (|0...0> + |1...1>)/sqrt2 and exact database search\n"
               "via Grover iterates of arbitrary phase."};
  app.require_subcommand(1);

  RunConfig config;

  auto add_common = [&config](CLI::App* cmd, bool with_marked, bool marked_required) {
    cmd->add_option("-n,--qubits", config.qubits, "Number of qubits")
        ->required()
        ->check(CLI::Range(kMinQubits, kMaxQubits));
    if (with_marked) {
      auto* opt = cmd->add_option("-m,--marked", config.marked,
                                  "Comma-separated marked basis indices");
      opt->delimiter(',');
      if (marked_required) opt->required();
    }
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  CLI::App* prepare = app.add_subcommand("prepare", "Prepare the entangled pair state exactly");
  add_common(prepare, /*with_marked=*/false, false);
  prepare->add_option("--method", config.method, "Planning method")
      ->check(CLI::IsMember({"auto", "direct", "reinit", "retard"}))
      ->capture_default_str();
  prepare->add_option("--variant", config.variant, "Target sign: plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  prepare->add_option("--dump-trajectory", config.dump_trajectory,
                      "Write a per-iteration CSV to this path");
  prepare->add_flag("--full-state", config.full_state,
                    "Include the full amplitude vector in the JSON report (n <= 16)");
  prepare->add_flag("--validate", config.validate)->group("");  // dense cross-check, n <= 8

  CLI::App* search = app.add_subcommand("search", "Amplify a marked set to probability 1");
  add_common(search, /*with_marked=*/true, true);
  search->add_option("--dump-trajectory", config.dump_trajectory,
                     "Write a per-iteration CSV to this path");
  search->add_flag("--full-state", config.full_state,
                   "Include the full amplitude vector in the JSON report (n <= 16)");
  search->add_flag("--validate", config.validate)->group("");

  CLI::App* analyze = app.add_subcommand("analyze", "Closed-form angles and trajectory table");
  add_common(analyze, /*with_marked=*/true, false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& help) {
    const int code = app.exit(help, out, err);
    return code == 0 ? 0 : 2;
  } catch (const CLI::ParseError& error) {
    app.exit(error, out, err);
    return 2;
  }

  if (prepare->parsed()) {
    config.subcommand = "prepare";
    return cmd_prepare(config, out, err);
  }
  if (search->parsed()) {
    config.subcommand = "search";
    return cmd_search(config, out, err);
  }
  config.subcommand = "analyze";
  return cmd_analyze(config, out, err);
}

}  // namespace ghzprep::cli
