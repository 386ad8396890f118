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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ghzprep::cli {

namespace {

Json num_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t first_unmarked_index(const std::vector<std::uint64_t>& marked) {
  std::uint64_t candidate = 0;
  for (std::uint64_t idx : marked) {
    if (idx != candidate) break;
    ++candidate;
  }
  return candidate;
}

const AngleAudit* find_audit(const PrepPlan& plan, const char* name) {
  for (const AngleAudit& audit : plan.formula_vs_solved) {
    if (audit.name == name) return &audit;
  }
  return nullptr;
}

Json closed_form_or_null(const PrepPlan& plan, const char* name) {
  const AngleAudit* audit = find_audit(plan, name);
  return audit ? num_or_null(audit->closed_form) : Json(nullptr);
}

}  // namespace

Json run_report(const PrepReport& report, const ReportOptions& options) {
  const PrepPlan& plan = report.plan;
  const std::uint64_t dim = std::uint64_t{1} << plan.qubits;

  Json out;
  out["n"] = plan.qubits;
  out["N"] = dim;
  out["method"] = to_string(plan.method);
  if (options.search) {
    out["marked"] = plan.marked;
    out["m"] = plan.marked.size();
  } else {
    out["variant"] = options.variant;
  }
  out["iterations"] = plan.iterations;
  out["theta"] = plan.theta;
  out["j_real"] = plan.j_real;

  Json angles;
  angles["alpha"] = closed_form_or_null(plan, "alpha");
  angles["beta"] = closed_form_or_null(plan, "beta");
  angles["phi"] = closed_form_or_null(plan, "phi");
  angles["varphi"] = closed_form_or_null(plan, "varphi");
  Json refined;
  refined["alpha"] = plan.pre_phase ? Json((*plan.pre_phase)[0]) : Json(nullptr);
  refined["beta"] = plan.pre_phase ? Json((*plan.pre_phase)[1]) : Json(nullptr);
  refined["phi"] = plan.post_phase ? Json((*plan.post_phase)[0]) : Json(nullptr);
  refined["varphi"] = plan.post_phase ? Json((*plan.post_phase)[1]) : Json(nullptr);
  angles["refined"] = refined;
  out["angles"] = angles;

  out["success_probability"] = report.success_probability;
  out["relative_phase"] = report.relative_phase;

  const Complex pair = report.final_state.data()[plan.marked.front()];
  const Complex middle = report.final_state.data()[first_unmarked_index(plan.marked)];
  Json amplitudes;
  amplitudes["pair"] = Json::array({pair.real(), pair.imag()});
  amplitudes["middle"] = Json::array({middle.real(), middle.imag()});
  out["amplitudes"] = amplitudes;

  out["residual"] = report.residual_offtarget;
  out["predicted_success"] = plan.predicted_success;
  out["corrective_phase"] = plan.corrective_phase;

  Json audits = Json::array();
  for (const AngleAudit& audit : report.formula_vs_solved) {
    Json entry;
    entry["angle"] = audit.name;
    entry["closed_form"] = num_or_null(audit.closed_form);
    entry["refined"] = audit.refined;
    entry["deviation"] = num_or_null(audit.deviation);
    audits.push_back(entry);
  }
  out["formula_vs_solved"] = audits;
  out["solver"] = Json{{"residual", plan.solve.residual}, {"iterations", plan.solve.iterations}};

  if (options.search) {
    Json probabilities = Json::array();
    for (std::uint64_t idx : plan.marked) {
      probabilities.push_back(std::norm(report.final_state.data()[idx]));
    }
    out["marked_probabilities"] = probabilities;
    out["unmarked_probability"] = 1.0 - report.success_probability;
  }
  if (options.validation_deviation) {
    out["validation"] = Json{{"max_amplitude_deviation", *options.validation_deviation}};
  }
  if (!options.trajectory_file.empty()) {
    out["trajectory_file"] = options.trajectory_file;
  }
  if (options.full_state) {
    Json state = Json::array();
    for (const Complex& c : report.final_state.data()) {
      state.push_back(Json::array({c.real(), c.imag()}));
    }
    out["full_state"] = state;
  }
  return out;
}

Json analyze_report(const PrepAnalysis& analysis) {
  const std::uint64_t dim = std::uint64_t{1} << analysis.qubits;
  Json out;
  out["n"] = analysis.qubits;
  out["N"] = dim;
  out["m"] = analysis.marked_count;
  out["theta"] = analysis.theta;
  out["j_real"] = analysis.j_real;
  out["integral"] = analysis.integral;
  out["j0"] = analysis.j0;
  out["j1"] = analysis.j1;
  out["a1"] = num_or_null(analysis.a1);
  Json angles;
  angles["alpha"] = num_or_null(analysis.alpha_formula);
  angles["beta"] = num_or_null(analysis.alpha_formula);
  angles["phi"] = num_or_null(analysis.phi_formula);
  angles["varphi"] = num_or_null(analysis.varphi_formula);
  out["closed_form_angles"] = angles;

  const TrajectoryModel model =
      TrajectoryModel::for_marked(analysis.qubits, analysis.marked_count);
  const double root_n = std::sqrt(static_cast<double>(dim));
  Json table = Json::array();
  for (int j = 0; j <= analysis.j1 + 1; ++j) {
    const double pair = marked_amplitude(model, j);
    const double middle = unmarked_amplitude(model, j);
    Json row;
    row["j"] = j;
    row["k"] = pair * root_n;
    row["l"] = middle * root_n;
    row["pair_amplitude"] = pair;
    row["middle_amplitude"] = middle;
    row["success_probability"] = analysis.marked_count * pair * pair;
    table.push_back(row);
  }
  out["trajectory"] = table;
  return out;
}

std::string render_json(const Json& value) { return value.dump(2) + "\n"; }

std::string render_trajectory_csv(const std::vector<TrajectoryRow>& rows) {
  std::string out = "j,k_j,l_j,simulated_pair_amp,simulated_middle_amp,success_probability\n";
  for (const TrajectoryRow& row : rows) {
    out += std::to_string(row.step);
    out += ',' + fmt17(row.k_closed);
    out += ',' + fmt17(row.l_closed);
    out += ',' + fmt17(row.simulated_pair_amp);
    out += ',' + fmt17(row.simulated_middle_amp);
    out += ',' + fmt17(row.success_probability);
    out += '\n';
  }
  return out;
}

std::string render_analyze_csv(const PrepAnalysis& analysis) {
  const TrajectoryModel model =
      TrajectoryModel::for_marked(analysis.qubits, analysis.marked_count);
  const double root_n = std::sqrt(static_cast<double>(std::uint64_t{1} << analysis.qubits));
  std::string out = "j,k_j,l_j,pair_amplitude,middle_amplitude,success_probability\n";
  for (int j = 0; j <= analysis.j1 + 1; ++j) {
    const double pair = marked_amplitude(model, j);
    const double middle = unmarked_amplitude(model, j);
    out += std::to_string(j);
    out += ',' + fmt17(pair * root_n);
    out += ',' + fmt17(middle * root_n);
    out += ',' + fmt17(pair);
    out += ',' + fmt17(middle);
    out += ',' + fmt17(analysis.marked_count * pair * pair);
    out += '\n';
  }
  return out;
}

std::string render_run_text(const PrepReport& report, const ReportOptions& options) {
  const PrepPlan& plan = report.plan;
  std::ostringstream out;
  out << "method: " << to_string(plan.method) << "\n";
  out << "qubits: " << plan.qubits << " (N = " << (std::uint64_t{1} << plan.qubits) << ")\n";
  if (options.search) {
    out << "marked:";
    for (std::uint64_t idx : plan.marked) out << ' ' << idx;
    out << "\n";
  } else {
    out << "variant: " << options.variant << "\n";
  }
  out << "theta: " << fmt12(plan.theta) << "\n";
  out << "optimal j: " << fmt12(plan.j_real) << "\n";
  out << "standard iterations: " << plan.iterations << "\n";
  if (!report.formula_vs_solved.empty()) {
    out << "angles (closed-form -> solved):\n";
    for (const AngleAudit& audit : report.formula_vs_solved) {
      out << "  " << audit.name << ": " << fmt12(audit.closed_form) << " -> "
          << fmt12(audit.refined) << " (deviation " << fmt12(audit.deviation) << ")\n";
    }
  }
  out << "success probability: " << fmt12(report.success_probability) << "\n";
  out << "relative phase: " << fmt12(report.relative_phase) << "\n";
  out << "off-target residual: " << fmt12(report.residual_offtarget) << "\n";
  const Complex pair = report.final_state.data()[plan.marked.front()];
  const Complex middle = report.final_state.data()[first_unmarked_index(plan.marked)];
  out << "pair amplitude: (" << fmt12(pair.real()) << ", " << fmt12(pair.imag()) << ")\n";
  out << "middle amplitude: (" << fmt12(middle.real()) << ", " << fmt12(middle.imag())
      << ")\n";
  if (options.search) {
    out << "marked probabilities:";
    for (std::uint64_t idx : plan.marked) {
      out << ' ' << fmt12(std::norm(report.final_state.data()[idx]));
    }
    out << "\n";
  }
  if (plan.corrective_phase != 0.0) {
    out << "corrective phase on top index: " << fmt12(plan.corrective_phase) << "\n";
  }
  if (options.validation_deviation) {
    out << "dense validation max deviation: " << fmt12(*options.validation_deviation) << "\n";
  }
  return out.str();
}

std::string render_analyze_text(const PrepAnalysis& analysis) {
  std::ostringstream out;
  out << "qubits: " << analysis.qubits << " (N = " << (std::uint64_t{1} << analysis.qubits)
      << "), marked count m = " << analysis.marked_count << "\n";
  out << "theta: " << fmt12(analysis.theta) << "\n";
  out << "optimal j: " << fmt12(analysis.j_real)
      << (analysis.integral ? " (integer: direct preparation available)" : "") << "\n";
  out << "j0 (floor): " << analysis.j0 << ", j1 (ceil): " << analysis.j1 << "\n";
  if (std::isfinite(analysis.a1)) {
    out << "a1: " << fmt12(analysis.a1) << "\n";
  }
  out << "closed-form angles: alpha = beta = " << fmt12(analysis.alpha_formula)
      << ", phi = " << fmt12(analysis.phi_formula)
      << ", varphi = " << fmt12(analysis.varphi_formula) << "\n";
  out << "trajectory (j, k_j, l_j, success):\n";
  const TrajectoryModel model =
      TrajectoryModel::for_marked(analysis.qubits, analysis.marked_count);
  const double root_n = std::sqrt(static_cast<double>(std::uint64_t{1} << analysis.qubits));
  for (int j = 0; j <= analysis.j1 + 1; ++j) {
    const double pair = marked_amplitude(model, j);
    out << "  " << j << "  " << fmt12(pair * root_n) << "  "
        << fmt12(unmarked_amplitude(model, j) * root_n) << "  "
        << fmt12(analysis.marked_count * pair * pair) << "\n";
  }
  return out.str();
}

}  // namespace ghzprep::cli
