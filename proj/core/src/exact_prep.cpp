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

#include "ghzprep/exact_prep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ghzprep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

double angle_distance(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return kNan;
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

// The pipeline whose final off-target amplitude the solver drives to zero:
// either [Q(x); j standard iterates] or [j standard iterates; Q(x)], run in
// the two-mode invariant subspace starting from the uniform state.
struct PipelineShape {
  int qubits;
  int marked_count;
  int standard_iterations;
  bool unknown_phases_first;
};

std::array<double, 2> pipeline_residual(const PipelineShape& shape,
                                        const std::array<double, 2>& angles) {
  TwoModeState state = two_mode_uniform(shape.qubits);
  if (shape.unknown_phases_first) {
    two_mode_iterate(state, shape.qubits, shape.marked_count, angles[0], angles[1]);
  }
  for (int i = 0; i < shape.standard_iterations; ++i) {
    two_mode_iterate(state, shape.qubits, shape.marked_count, kPi, kPi);
  }
  if (!shape.unknown_phases_first) {
    two_mode_iterate(state, shape.qubits, shape.marked_count, angles[0], angles[1]);
  }
  return {state.unmarked.real(), state.unmarked.imag()};
}

double residual_norm(const std::array<double, 2>& f) { return std::hypot(f[0], f[1]); }

struct Candidate {
  std::array<double, 2> x{};
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

// Deterministic preference: smaller residual; on a near-tie, smaller
// |x0| + |x1|; on a tie of both, the earlier candidate stays.
bool strictly_better(const Candidate& a, const Candidate& b) {
  if (a.residual < b.residual - 1e-13) return true;
  if (a.residual > b.residual + 1e-13) return false;
  return std::abs(a.x[0]) + std::abs(a.x[1]) < std::abs(b.x[0]) + std::abs(b.x[1]) - 1e-9;
}

// Polishes a seed, folds the angles back into (-pi, pi], and re-polishes if
// the fold disturbed the residual (it only can through rounding).
Candidate polished_candidate(
    const std::function<std::array<double, 2>(const std::array<double, 2>&)>& f,
    std::array<double, 2> seed) {
  detail::RootResult r = detail::find_root_2d(f, seed);
  std::array<double, 2> wrapped{wrap_angle(r.x[0]), wrap_angle(r.x[1])};
  double res = residual_norm(f(wrapped));
  int iterations = r.iterations;
  if (res > kSolverResidualTol && r.residual <= kSolverResidualTol) {
    detail::RootResult again = detail::find_root_2d(f, wrapped);
    wrapped = {wrap_angle(again.x[0]), wrap_angle(again.x[1])};
    res = residual_norm(f(wrapped));
    iterations += again.iterations;
  }
  return {wrapped, res, iterations};
}

// Sign-searched, polished angle solve. Seeds are tried in order; if none
// converges, a coarse grid over (-pi, pi]^2 supplies fallback starts.
Candidate solve_angles(const PipelineShape& shape,
                       const std::vector<std::array<double, 2>>& seeds) {
  const auto f = [&shape](const std::array<double, 2>& x) {
    return pipeline_residual(shape, x);
  };

  Candidate best;
  for (const auto& seed : seeds) {
    Candidate c = polished_candidate(f, seed);
    if (strictly_better(c, best)) best = c;
  }

  if (best.residual > kSolverResidualTol) {
    constexpr int kGrid = 24;
    std::vector<std::pair<double, std::array<double, 2>>> coarse;
    coarse.reserve(kGrid * kGrid);
    for (int ia = 0; ia < kGrid; ++ia) {
      for (int ib = 0; ib < kGrid; ++ib) {
        const std::array<double, 2> x{-kPi + 2.0 * kPi * (ia + 0.5) / kGrid,
                                      -kPi + 2.0 * kPi * (ib + 0.5) / kGrid};
        coarse.emplace_back(residual_norm(f(x)), x);
      }
    }
    std::stable_sort(coarse.begin(), coarse.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t tries = std::min<std::size_t>(coarse.size(), 6);
    for (std::size_t i = 0; i < tries; ++i) {
      Candidate c = polished_candidate(f, coarse[i].second);
      if (strictly_better(c, best)) best = c;
    }
  }

  if (best.residual > kSolverResidualTol) {
    throw convergence_error("angle solve did not converge (residual " +
                                std::to_string(best.residual) + ")",
                            best.residual, best.iterations);
  }
  return best;
}

std::vector<std::array<double, 2>> sign_combinations(double a, double b) {
  std::vector<std::array<double, 2>> seeds;
  for (double sa : {1.0, -1.0}) {
    for (double sb : {1.0, -1.0}) {
      const std::array<double, 2> x{sa * a, sb * b};
      if (std::none_of(seeds.begin(), seeds.end(), [&x](const auto& s) { return s == x; })) {
        seeds.push_back(x);
      }
    }
  }
  return seeds;
}

std::vector<std::uint64_t> ghz_marked_pair(int qubits) {
  return {0, (std::uint64_t{1} << qubits) - 1};
}

AngleAudit make_audit(std::string name, double closed_form, double refined) {
  return {std::move(name), closed_form, refined, angle_distance(refined, closed_form)};
}

int nearest_integer(double j) { return static_cast<int>(std::llround(j)); }

bool is_integral(double j) { return std::abs(j - std::llround(j)) < kIntegerIterationTol; }

// Closed-form prediction for the re-initialization pre-rotation: theta1 from
// j1 = pi/(4 theta1) - 1/2, pair amplitude a1 = sin(theta1)/sqrt2, and
// cos(alpha) = cos(beta) = (a1 N sqrt(N) + N - 4) / (2 (N - 2)).
struct ReinitClosedForm {
  double theta1;
  double a1;
  double cos_alpha;
  bool in_domain;
  double alpha;  // NaN when out of domain
};

ReinitClosedForm reinit_closed_form(int qubits, int j1) {
  const double n = static_cast<double>(std::uint64_t{1} << qubits);
  ReinitClosedForm cf;
  cf.theta1 = kPi / (4.0 * j1 + 2.0);
  cf.a1 = std::sin(cf.theta1) / std::sqrt(2.0);
  cf.cos_alpha = (cf.a1 * n * std::sqrt(n) + n - 4.0) / (2.0 * (n - 2.0));
  cf.in_domain = std::abs(cf.cos_alpha) <= 1.0 + 1e-12;
  cf.alpha = cf.in_domain ? std::acos(clamp_cos(cf.cos_alpha)) : kNan;
  return cf;
}

// Closed-form prediction for the retarding step after j0 standard iterates:
// with p, q the marked/unmarked amplitudes at that point,
// cos(phi) = 1 - N^2 q^2 / (2m) and cos(varphi) = -q (N - 2m) / (2 m p).
// For m = 2 these reduce to cos(phi) = 1 - N l0^2 / 4 and
// cos(varphi) = -(N - 4) l0 / (4 k0).
struct RetardClosedForm {
  double cos_phi;
  double cos_varphi;
  bool in_domain;
  double phi;     // NaN when out of domain
  double varphi;
};

RetardClosedForm retard_closed_form(int qubits, int m, int j0, double theta) {
  const double n = static_cast<double>(std::uint64_t{1} << qubits);
  const double gamma = (2.0 * j0 + 1.0) * theta;
  const double p = std::sin(gamma) / std::sqrt(static_cast<double>(m));
  const double q = std::cos(gamma) / std::sqrt(n - m);
  RetardClosedForm cf;
  cf.cos_phi = 1.0 - n * n * q * q / (2.0 * m);
  cf.cos_varphi = -q * (n - 2.0 * m) / (2.0 * m * p);
  const bool phi_ok = std::abs(cf.cos_phi) <= 1.0 + 1e-12;
  const bool varphi_ok = std::abs(cf.cos_varphi) <= 1.0 + 1e-12;
  cf.in_domain = phi_ok && varphi_ok;
  cf.phi = phi_ok ? std::acos(clamp_cos(cf.cos_phi)) : kNan;
  cf.varphi = varphi_ok ? std::acos(clamp_cos(cf.cos_varphi)) : kNan;
  return cf;
}

// Retard-style completion shared by the pair preparation and general search:
// floor(j) standard iterates, then Q2 with solved (phi, varphi).
PrepPlan make_retard_plan(int qubits, std::vector<std::uint64_t> marked) {
  const int m = static_cast<int>(marked.size());
  const TrajectoryModel model = TrajectoryModel::for_marked(qubits, m);
  const double j = optimal_iteration_count(model);
  const int j0 = is_integral(j) ? nearest_integer(j) : static_cast<int>(std::floor(j));

  const RetardClosedForm cf = retard_closed_form(qubits, m, j0, model.theta);
  const PipelineShape shape{qubits, m, j0, /*unknown_phases_first=*/false};
  std::vector<std::array<double, 2>> seeds;
  if (cf.in_domain) {
    seeds = sign_combinations(cf.phi, cf.varphi);
  }
  const Candidate solved = solve_angles(shape, seeds);

  PrepPlan plan;
  plan.method = PrepMethod::retard;
  plan.qubits = qubits;
  plan.marked = std::move(marked);
  plan.iterations = j0;
  plan.post_phase = solved.x;
  plan.predicted_success = 1.0;
  plan.theta = model.theta;
  plan.j_real = j;
  plan.formula_vs_solved.push_back(make_audit("phi", cf.phi, solved.x[0]));
  plan.formula_vs_solved.push_back(make_audit("varphi", cf.varphi, solved.x[1]));
  plan.solve = {solved.residual, solved.iterations};
  return plan;
}

void check_plan(const PrepPlan& plan) {
  if (plan.qubits < kMinQubits || plan.qubits > kMaxQubits) {
    throw std::invalid_argument("plan qubit count outside supported range");
  }
  const std::uint64_t dim = std::uint64_t{1} << plan.qubits;
  if (plan.marked.empty() || plan.marked.back() >= dim ||
      !std::is_sorted(plan.marked.begin(), plan.marked.end())) {
    throw std::invalid_argument("plan marked set must be sorted, nonempty, in range");
  }
  if (plan.iterations < 0) {
    throw std::invalid_argument("plan iteration count must be nonnegative");
  }
  const bool pre = plan.pre_phase.has_value();
  const bool post = plan.post_phase.has_value();
  switch (plan.method) {
    case PrepMethod::direct:
      if (pre || post) throw std::invalid_argument("direct plan carries no phase fields");
      break;
    case PrepMethod::reinit:
      if (!pre || post) throw std::invalid_argument("reinit plan requires pre_phase only");
      break;
    case PrepMethod::retard:
      if (pre || !post) throw std::invalid_argument("retard plan requires post_phase only");
      break;
  }
}

std::uint64_t first_unmarked_index(const std::vector<std::uint64_t>& marked) {
  std::uint64_t candidate = 0;
  for (std::uint64_t idx : marked) {
    if (idx != candidate) break;
    ++candidate;
  }
  return candidate;
}

void record_row(std::vector<TrajectoryRow>* rows, int step, const StateVector& state,
                const TrajectoryModel& model, const std::vector<std::uint64_t>& marked) {
  if (rows == nullptr) return;
  const double n = static_cast<double>(state.dimension());
  TrajectoryRow row;
  row.step = step;
  row.k_closed = marked_amplitude(model, step) * std::sqrt(n);
  row.l_closed = unmarked_amplitude(model, step) * std::sqrt(n);
  row.simulated_pair_amp = std::abs(state.data()[marked.front()]);
  row.simulated_middle_amp = std::abs(state.data()[first_unmarked_index(marked)]);
  row.success_probability = success_probability(state, marked);
  rows->push_back(row);
}

}  // namespace

const char* to_string(PrepMethod method) {
  switch (method) {
    case PrepMethod::direct: return "direct";
    case PrepMethod::reinit: return "reinit";
    case PrepMethod::retard: return "retard";
  }
  return "unknown";
}

std::optional<PrepPlan> plan_direct(int qubits) {
  const TrajectoryModel model = TrajectoryModel::ghz_pair(qubits);
  const double j = optimal_iteration_count(model);
  if (std::abs(j - std::llround(j)) >= kIntegerIterationTol) {
    return std::nullopt;
  }
  PrepPlan plan;
  plan.method = PrepMethod::direct;
  plan.qubits = qubits;
  plan.marked = ghz_marked_pair(qubits);
  plan.iterations = nearest_integer(j);
  plan.predicted_success = 1.0;
  plan.theta = model.theta;
  plan.j_real = j;
  return plan;
}

PrepPlan plan_reinit(int qubits) {
  if (std::optional<PrepPlan> direct = plan_direct(qubits)) {
    return *direct;  // integer j: nothing to re-initialize
  }
  const TrajectoryModel model = TrajectoryModel::ghz_pair(qubits);
  const double j = optimal_iteration_count(model);
  const int j1 = static_cast<int>(std::ceil(j));
  const ReinitClosedForm cf = reinit_closed_form(qubits, j1);

  // n = 2 is the one register where a single arbitrary-phase iterate reaches
  // the pair state outright; the pi/2 phases do it, so no standard iterates
  // follow. Everywhere else Q1 re-aims the state and j1 iterates finish.
  const int standard_iterations = (qubits == 2) ? 0 : j1;
  const PipelineShape shape{qubits, 2, standard_iterations, /*unknown_phases_first=*/true};

  std::vector<std::array<double, 2>> seeds;
  if (qubits == 2) {
    seeds.push_back({kPi / 2.0, kPi / 2.0});
  }
  if (cf.in_domain) {
    for (const auto& s : sign_combinations(cf.alpha, cf.alpha)) {
      seeds.push_back(s);
    }
  }
  const Candidate solved = solve_angles(shape, seeds);

  PrepPlan plan;
  plan.method = PrepMethod::reinit;
  plan.qubits = qubits;
  plan.marked = ghz_marked_pair(qubits);
  plan.iterations = standard_iterations;
  plan.pre_phase = solved.x;
  plan.predicted_success = 1.0;
  plan.theta = model.theta;
  plan.j_real = j;
  plan.formula_vs_solved.push_back(make_audit("alpha", cf.alpha, solved.x[0]));
  plan.formula_vs_solved.push_back(make_audit("beta", cf.alpha, solved.x[1]));
  plan.solve = {solved.residual, solved.iterations};
  return plan;
}

PrepPlan plan_retard(int qubits) {
  return make_retard_plan(qubits, ghz_marked_pair(qubits));
}

PrepPlan plan_exact_search(int qubits, std::span<const std::uint64_t> marked) {
  if (qubits < kMinQubits || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count outside supported range");
  }
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  std::vector<std::uint64_t> sorted(marked.begin(), marked.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) {
    throw std::invalid_argument("marked set must be nonempty");
  }
  if (sorted.back() >= dim) {
    throw std::invalid_argument("marked index out of range");
  }
  if (2 * sorted.size() >= dim) {
    throw std::invalid_argument("marked count must satisfy m < N/2");
  }

  const TrajectoryModel model =
      TrajectoryModel::for_marked(qubits, static_cast<int>(sorted.size()));
  const double j = optimal_iteration_count(model);
  if (std::abs(j - std::llround(j)) < kIntegerIterationTol) {
    PrepPlan plan;
    plan.method = PrepMethod::direct;
    plan.qubits = qubits;
    plan.marked = std::move(sorted);
    plan.iterations = nearest_integer(j);
    plan.predicted_success = 1.0;
    plan.theta = model.theta;
    plan.j_real = j;
    return plan;
  }
  return make_retard_plan(qubits, std::move(sorted));
}

PrepReport execute(const PrepPlan& plan) { return execute(plan, nullptr); }

PrepReport execute(const PrepPlan& plan, std::vector<TrajectoryRow>* trajectory) {
  check_plan(plan);
  const TrajectoryModel model =
      TrajectoryModel::for_marked(plan.qubits, static_cast<int>(plan.marked.size()));

  StateVector state = uniform_superposition(plan.qubits);
  int step = 0;
  record_row(trajectory, step, state, model, plan.marked);

  if (plan.pre_phase) {
    grover_iterate(state, GroverParams((*plan.pre_phase)[0], (*plan.pre_phase)[1], plan.marked));
    record_row(trajectory, ++step, state, model, plan.marked);
  }

  const GroverParams standard(kPi, kPi, plan.marked);
  if (trajectory == nullptr) {
    grover_iterate_repeated(state, standard, plan.iterations);
  } else {
    for (int i = 0; i < plan.iterations; ++i) {
      grover_iterate(state, standard);
      record_row(trajectory, ++step, state, model, plan.marked);
    }
  }

  if (plan.post_phase) {
    grover_iterate(state, GroverParams((*plan.post_phase)[0], (*plan.post_phase)[1], plan.marked));
    record_row(trajectory, ++step, state, model, plan.marked);
  }

  PrepReport report{plan, StateVector(plan.qubits), 0.0, 0.0, 0.0, plan.formula_vs_solved};

  auto relative_phase = [&]() {
    const Complex first = state.data()[plan.marked.front()];
    const Complex last = state.data()[plan.marked.back()];
    if (plan.marked.size() < 2 || std::abs(first) == 0.0) return 0.0;
    return std::arg(last / first);
  };

  const double phase = relative_phase();
  if (plan.marked.size() >= 2 && std::abs(phase) > kRelativePhaseTol) {
    PhaseOracle fix;
    fix.set(plan.marked.back(), -phase);
    apply_phase_oracle(state, fix);
    report.plan.corrective_phase = -phase;
    record_row(trajectory, ++step, state, model, plan.marked);
  }

  report.final_state = std::move(state);
  remeasure(report);
  return report;
}

void remeasure(PrepReport& report) {
  const StateVector& state = report.final_state;
  const std::vector<std::uint64_t>& marked = report.plan.marked;
  report.success_probability = success_probability(state, marked);

  const Complex first = state.data()[marked.front()];
  const Complex last = state.data()[marked.back()];
  report.relative_phase =
      (marked.size() < 2 || std::abs(first) == 0.0) ? 0.0 : std::arg(last / first);

  double worst = 0.0;
  std::size_t next = 0;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if (next < marked.size() && marked[next] == i) {
      ++next;
      continue;
    }
    worst = std::max(worst, std::abs(state.data()[i]));
  }
  report.residual_offtarget = worst;
}

PrepAnalysis analyze_preparation(int qubits, int marked_count) {
  const TrajectoryModel model = TrajectoryModel::for_marked(qubits, marked_count);
  PrepAnalysis analysis;
  analysis.qubits = qubits;
  analysis.marked_count = marked_count;
  analysis.theta = model.theta;
  analysis.j_real = optimal_iteration_count(model);
  analysis.integral = is_integral(analysis.j_real);
  if (analysis.integral) {
    analysis.j0 = analysis.j1 = nearest_integer(analysis.j_real);
  } else {
    analysis.j0 = static_cast<int>(std::floor(analysis.j_real));
    analysis.j1 = static_cast<int>(std::ceil(analysis.j_real));
  }
  if (marked_count == 2) {
    const ReinitClosedForm cf = reinit_closed_form(qubits, analysis.j1);
    analysis.a1 = cf.a1;
    analysis.alpha_formula = cf.alpha;
  } else {
    analysis.a1 = kNan;
    analysis.alpha_formula = kNan;
  }
  const RetardClosedForm rcf = retard_closed_form(qubits, marked_count, analysis.j0, model.theta);
  analysis.phi_formula = rcf.phi;
  analysis.varphi_formula = rcf.varphi;
  return analysis;
}

void to_minus_variant(StateVector& state) {
  PhaseOracle oracle;
  oracle.set(state.dimension() - 1, kPi);
  apply_phase_oracle(state, oracle);
}

namespace detail {

RootResult find_root_2d(
    const std::function<std::array<double, 2>(const std::array<double, 2>&)>& f,
    std::array<double, 2> seed) {
  std::array<double, 2> x = seed;
  std::array<double, 2> fx = f(x);
  double res = std::hypot(fx[0], fx[1]);
  double h = kSolverInitialStep;
  int iterations = 0;

  while (res > kSolverResidualTol && iterations < kSolverMaxIterations) {
    // Central-difference Jacobian.
    double jac[2][2];
    for (int k = 0; k < 2; ++k) {
      std::array<double, 2> xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const std::array<double, 2> fp = f(xp);
      const std::array<double, 2> fm = f(xm);
      jac[0][k] = (fp[0] - fm[0]) / (2.0 * h);
      jac[1][k] = (fp[1] - fm[1]) / (2.0 * h);
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    if (std::abs(det) < 1e-30) break;
    const std::array<double, 2> dx{(-fx[0] * jac[1][1] + fx[1] * jac[0][1]) / det,
                                   (-fx[1] * jac[0][0] + fx[0] * jac[1][0]) / det};

    // Damped acceptance: halve the step until the residual drops.
    double lambda = 1.0;
    bool accepted = false;
    while (lambda > 1e-6) {
      const std::array<double, 2> xn{x[0] + lambda * dx[0], x[1] + lambda * dx[1]};
      const std::array<double, 2> fn = f(xn);
      const double rn = std::hypot(fn[0], fn[1]);
      if (rn < res) {
        x = xn;
        fx = fn;
        res = rn;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    ++iterations;
    if (!accepted) break;
    h = std::min(h, std::max(1e-8, 0.01 * std::sqrt(res)));
  }
  return {x, res, iterations, res <= kSolverResidualTol};
}

}  // namespace detail

}  // namespace ghzprep
