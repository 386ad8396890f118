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
//
// Exact (probability-1) preparation of the entangled pair state
// (|0> + |N-1>)/sqrt2, and exact search of arbitrary marked sets, even when
// the optimal iteration count j = pi/(4 theta) - 1/2 is not an integer:
//
//   direct — j is an integer: run j standard iterates.
//   reinit — run one arbitrary-phase iterate Q1(alpha, beta) first, chosen so
//            that ceil(j) standard iterates then land exactly on target.
//   retard — run floor(j) standard iterates, then one arbitrary-phase iterate
//            Q2(phi, varphi) that completes the remaining rotation exactly.
//
// Closed-form angle predictions exist for both arbitrary-phase steps (they
// determine cosines only). The planners evaluate them, sign-search the four
// (+,-) branches against the invariant-subspace simulation, and polish with
// a damped 2-D root-find until the off-target amplitude vanishes. Both the
// closed-form and solved angles are kept so reports can show the deviation:
// the retard cosines prove out exactly, while the reinit closed form does not
// make the full pipeline exact and the solved angles genuinely differ.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzprep/grover_ops.hpp"
#include "ghzprep/statevector.hpp"

namespace ghzprep {

enum class PrepMethod { direct, reinit, retard };

const char* to_string(PrepMethod method);

/// Closed-form angle next to the angle the solver actually settled on.
/// closed_form is NaN when the formula left its arccos domain.
struct AngleAudit {
  std::string name;    // "alpha", "beta", "phi", "varphi"
  double closed_form;
  double refined;
  double deviation;    // circular distance, in [0, pi]
};

struct SolveInfo {
  double residual = 0.0;
  int iterations = 0;
};

/// Raised when the angle solver cannot push the off-target residual below
/// tolerance; carries the best residual reached.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& message, double residual, int iterations)
      : std::runtime_error(message), residual_(residual), iterations_(iterations) {}

  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

struct PrepPlan {
  PrepMethod method = PrepMethod::direct;
  int qubits = 0;
  std::vector<std::uint64_t> marked;
  int iterations = 0;  // standard iterates: j (direct), j1 (reinit), j0 (retard)
  std::optional<std::array<double, 2>> pre_phase;   // (alpha, beta), reinit only
  std::optional<std::array<double, 2>> post_phase;  // (phi, varphi), retard only
  double predicted_success = 1.0;
  double theta = 0.0;
  double j_real = 0.0;
  std::vector<AngleAudit> formula_vs_solved;
  SolveInfo solve;
  double corrective_phase = 0.0;  // phase appended on the top marked index; 0 = none
};

/// One observation per applied operation when a trajectory is requested.
/// k/l are the standard-trajectory closed forms at that step index (amplitude
/// is k/sqrt(N) per marked state); the simulated columns are read off the
/// evolving state, so methods with arbitrary-phase steps show where they
/// leave the standard trajectory.
struct TrajectoryRow {
  int step;
  double k_closed;
  double l_closed;
  double simulated_pair_amp;
  double simulated_middle_amp;
  double success_probability;
};

struct PrepReport {
  PrepPlan plan;
  StateVector final_state;
  double success_probability = 0.0;
  double residual_offtarget = 0.0;  // max |amplitude| off the marked set
  double relative_phase = 0.0;      // arg(c_last_marked / c_first_marked)
  std::vector<AngleAudit> formula_vs_solved;
};

/// Direct plan when j is an integer (within kIntegerIterationTol), otherwise
/// nothing — the caller must pick an exact-completion method.
std::optional<PrepPlan> plan_direct(int qubits);

/// Re-initialization method. For integer j this falls through to the direct
/// plan. For n = 2 the pre-rotation alone finishes the job (alpha = beta =
/// pi/2 maps the uniform state straight onto the Bell pair), so no standard
/// iterates follow; for larger n, ceil(j) standard iterates do.
PrepPlan plan_reinit(int qubits);

/// Retarded-final-iteration method: floor(j) standard iterates, then one
/// solved Q2. Also valid at integer j, where Q2 degenerates to a global
/// phase.
PrepPlan plan_retard(int qubits);

/// Exact search over an arbitrary marked set (1 <= |marked| < N/2): direct
/// when j is an integer, otherwise a retard-style completion. The final state
/// is uniform over the marked set.
PrepPlan plan_exact_search(int qubits, std::span<const std::uint64_t> marked);

/// Runs the plan from the uniform superposition and measures the outcome.
/// If the prepared pair carries an off-spec relative phase, a corrective
/// phase on the top marked index is applied and recorded in the plan.
PrepReport execute(const PrepPlan& plan);
PrepReport execute(const PrepPlan& plan, std::vector<TrajectoryRow>* trajectory);

/// Closed-form planning quantities, computed without evolving any state:
/// theta, the real-valued optimal j, floor/ceil integer counts, the predicted
/// pre-rotation pair amplitude a1, and the closed-form completion angles.
/// Fields that have no real solution, or apply only to the m = 2 pair
/// trajectory, are NaN when unavailable.
struct PrepAnalysis {
  int qubits = 0;
  int marked_count = 2;
  double theta = 0.0;
  double j_real = 0.0;
  int j0 = 0;
  int j1 = 0;
  bool integral = false;
  double a1 = 0.0;
  double alpha_formula = 0.0;   // reinit closed form (alpha = beta)
  double phi_formula = 0.0;     // retard closed forms
  double varphi_formula = 0.0;
};

PrepAnalysis analyze_preparation(int qubits, int marked_count = 2);

/// Phase flip on |N-1>: maps (|0> + |N-1>)/sqrt2 to (|0> - |N-1>)/sqrt2.
void to_minus_variant(StateVector& state);

/// Re-derives the measured fields (success probability, relative phase,
/// off-target residual) from report.final_state, e.g. after a post-hoc
/// transform of the state.
void remeasure(PrepReport& report);

namespace detail {

struct RootResult {
  std::array<double, 2> x;
  double residual;
  int iterations;
  bool converged;
};

/// Damped Newton iteration on a 2-component residual with a finite-difference
/// Jacobian (initial probe step kSolverInitialStep, shrinking as the residual
/// does). Stops at kSolverResidualTol or kSolverMaxIterations.
RootResult find_root_2d(
    const std::function<std::array<double, 2>(const std::array<double, 2>&)>& f,
    std::array<double, 2> seed);

}  // namespace detail

}  // namespace ghzprep
