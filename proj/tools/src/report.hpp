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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghzprep/exact_prep.hpp"

namespace ghzprep::cli {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::string variant = "plus";
  bool search = false;        // include marked-set fields
  bool full_state = false;
  std::optional<double> validation_deviation;
  std::string trajectory_file;  // empty when not written
};

/// Machine-readable report. Stable keys: n, N, method, iterations,
/// angles {alpha, beta, phi, varphi, refined {...}}, success_probability,
/// relative_phase, amplitudes {pair, middle}, residual. Top-level angle
/// values are the closed forms; "refined" holds what actually ran.
Json run_report(const PrepReport& report, const ReportOptions& options);

Json analyze_report(const PrepAnalysis& analysis);

/// dump(2) plus a trailing newline; parsing and re-rendering is
/// byte-identical.
std::string render_json(const Json& value);

std::string render_trajectory_csv(const std::vector<TrajectoryRow>& rows);
std::string render_analyze_csv(const PrepAnalysis& analysis);

std::string render_run_text(const PrepReport& report, const ReportOptions& options);
std::string render_analyze_text(const PrepAnalysis& analysis);

}  // namespace ghzprep::cli
