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

#include "ghzprep/grover_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ghzprep {

namespace {

void check_marked(const std::vector<std::uint64_t>& marked, std::uint64_t dimension) {
  if (marked.empty()) {
    throw std::invalid_argument("marked set must be nonempty");
  }
  if (marked.back() >= dimension) {
    throw std::invalid_argument("marked index " + std::to_string(marked.back()) +
                                " out of range for dimension " + std::to_string(dimension));
  }
}

Complex amplitude_sum(const std::vector<Complex>& amps) {
  Complex sum{0.0, 0.0};
  for (const Complex& c : amps) sum += c;
  return sum;
}

// One pass of the rank-1 form: psi <- -(chi^beta psi) - (e^{i alpha} - 1) * mean,
// where `sum` must already hold the amplitude sum of chi^beta psi. Returns
// the analytic amplitude sum of the output, -e^{i alpha} * sum.
Complex diffusion_update(std::vector<Complex>& amps, Complex sum, double alpha) {
  const Complex phase_term = std::polar(1.0, alpha) - 1.0;
  const Complex shift = phase_term * (sum / static_cast<double>(amps.size()));
  for (Complex& c : amps) c = -c - shift;
  return -std::polar(1.0, alpha) * sum;
}

}  // namespace

GroverParams::GroverParams(double alpha_in, double beta_in, std::vector<std::uint64_t> marked_in)
    : alpha(alpha_in), beta(beta_in), marked(std::move(marked_in)) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("iterate phases must be finite");
  }
  if (marked.empty()) {
    throw std::invalid_argument("marked set must be nonempty");
  }
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
}

GroverParams GroverParams::standard(int qubits) {
  if (qubits < kMinQubits || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count outside supported range");
  }
  const std::uint64_t last = (std::uint64_t{1} << qubits) - 1;
  const double pi = std::numbers::pi;
  return GroverParams(pi, pi, {0, last});
}

void grover_iterate(StateVector& state, const GroverParams& params) {
  auto& amps = state.data();
  check_marked(params.marked, amps.size());
  const Complex beta_phase = std::polar(1.0, params.beta);
  for (std::uint64_t idx : params.marked) amps[idx] *= beta_phase;
  diffusion_update(amps, amplitude_sum(amps), params.alpha);
}

void grover_iterate_via_walsh(StateVector& state, const GroverParams& params) {
  check_marked(params.marked, state.dimension());
  const Complex beta_phase = std::polar(1.0, params.beta);
  for (std::uint64_t idx : params.marked) state.data()[idx] *= beta_phase;
  walsh_hadamard(state);
  state.data()[0] *= std::polar(1.0, params.alpha);
  walsh_hadamard(state);
  for (Complex& c : state.data()) c = -c;
}

void grover_iterate_repeated(StateVector& state, const GroverParams& params, int count) {
  if (count < 0) {
    throw std::invalid_argument("iteration count must be nonnegative");
  }
  auto& amps = state.data();
  check_marked(params.marked, amps.size());
  if (count == 0) return;
  const Complex beta_phase = std::polar(1.0, params.beta);
  Complex sum = amplitude_sum(amps);
  for (int step = 0; step < count; ++step) {
    for (std::uint64_t idx : params.marked) {
      const Complex before = amps[idx];
      amps[idx] *= beta_phase;
      sum += amps[idx] - before;
    }
    sum = diffusion_update(amps, sum, params.alpha);
  }
}

void standard_q(StateVector& state) {
  grover_iterate(state, GroverParams::standard(state.qubits()));
}

TrajectoryModel TrajectoryModel::ghz_pair(int qubits) { return for_marked(qubits, 2); }

TrajectoryModel TrajectoryModel::for_marked(int qubits, int marked_count) {
  if (qubits < kMinQubits || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count outside supported range");
  }
  const double n = static_cast<double>(std::uint64_t{1} << qubits);
  if (marked_count < 1 || static_cast<double>(marked_count) >= n) {
    throw std::invalid_argument("marked count must satisfy 1 <= m < N");
  }
  TrajectoryModel model;
  model.qubits = qubits;
  model.marked_count = marked_count;
  model.theta = std::asin(std::sqrt(static_cast<double>(marked_count) / n));
  return model;
}

TrajectoryPoint trajectory_amplitudes(const TrajectoryModel& model, int iterations) {
  if (model.marked_count != 2) {
    throw std::domain_error("k_j/l_j closed forms are defined for the m = 2 pair trajectory");
  }
  if (iterations < 0) {
    throw std::invalid_argument("iteration count must be nonnegative");
  }
  const double n = static_cast<double>(std::uint64_t{1} << model.qubits);
  const double angle = (2.0 * iterations + 1.0) * model.theta;
  return {std::sqrt(n / 2.0) * std::sin(angle), std::sqrt(n / (n - 2.0)) * std::cos(angle)};
}

double optimal_iteration_count(const TrajectoryModel& model) {
  return std::numbers::pi / (4.0 * model.theta) - 0.5;
}

double marked_amplitude(const TrajectoryModel& model, int iterations) {
  const double angle = (2.0 * iterations + 1.0) * model.theta;
  return std::sin(angle) / std::sqrt(static_cast<double>(model.marked_count));
}

double unmarked_amplitude(const TrajectoryModel& model, int iterations) {
  const double n = static_cast<double>(std::uint64_t{1} << model.qubits);
  const double angle = (2.0 * iterations + 1.0) * model.theta;
  return std::cos(angle) / std::sqrt(n - static_cast<double>(model.marked_count));
}

TwoModeState two_mode_uniform(int qubits) {
  if (qubits < kMinQubits || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count outside supported range");
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << qubits));
  return {Complex{amp, 0.0}, Complex{amp, 0.0}};
}

void two_mode_iterate(TwoModeState& state, int qubits, int marked_count,
                      double alpha, double beta) {
  const double n = static_cast<double>(std::uint64_t{1} << qubits);
  const double m = static_cast<double>(marked_count);
  state.marked *= std::polar(1.0, beta);
  const Complex mean = (m * state.marked + (n - m) * state.unmarked) / n;
  const Complex shift = (std::polar(1.0, alpha) - 1.0) * mean;
  state.marked = -state.marked - shift;
  state.unmarked = -state.unmarked - shift;
}

}  // namespace ghzprep
