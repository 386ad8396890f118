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
// The generalized Grover iterate
//
//     Q(alpha, beta, M) = -W chi_0^alpha W^-1 chi_M^beta
//
// applied right to left: phase beta on the marked set M, Walsh-Hadamard,
// phase alpha on |0>, Walsh-Hadamard again, then a global factor of -1.
// The standard iterate is the instance (pi, pi, {0, N-1}). Because
// -W chi_0^alpha W^-1 = -(I + (e^{i alpha} - 1)|s><s|) with |s> the uniform
// state, the iterate is a rank-1 update and runs in O(N) with no transform.
//
// Starting from |s>, the state stays in the two-dimensional subspace spanned
// by (uniform over marked, uniform over unmarked); the closed-form amplitude
// trajectory lives in TrajectoryModel and the tiny TwoModeState propagates
// that subspace exactly, which is what the exact-preparation planners use.

#pragma once

#include <cstdint>
#include <vector>

#include "ghzprep/statevector.hpp"

namespace ghzprep {

/// One generalized iterate: phase alpha on |0> (conjugated by W), phase beta
/// on the marked basis indices.
struct GroverParams {
  GroverParams(double alpha, double beta, std::vector<std::uint64_t> marked);

  /// (pi, pi, {0, N-1}) for an n-qubit register.
  static GroverParams standard(int qubits);

  double alpha;
  double beta;
  std::vector<std::uint64_t> marked;  // sorted, de-duplicated, nonempty
};

/// Applies Q(alpha, beta, M) in place. O(N) time, O(1) extra space.
void grover_iterate(StateVector& state, const GroverParams& params);

/// Same operator through the explicit kernel chain (chi^beta, W, chi_0^alpha,
/// W, global -1). O(N log N); kept as an independent route for cross-checks.
void grover_iterate_via_walsh(StateVector& state, const GroverParams& params);

/// `count` applications of the same iterate, with the amplitude sum carried
/// between steps so each iterate is a single pass over the state.
void grover_iterate_repeated(StateVector& state, const GroverParams& params, int count);

/// The standard iterate Q = Q(pi, pi, {0, N-1}).
void standard_q(StateVector& state);

/// theta with sin^2 theta = m/N, plus the register geometry it came from.
struct TrajectoryModel {
  static TrajectoryModel ghz_pair(int qubits);                  // m = 2
  static TrajectoryModel for_marked(int qubits, int marked_count);

  int qubits;
  int marked_count;
  double theta;
};

struct TrajectoryPoint {
  double k;  // marked-pair coefficient: amplitude is k/sqrt(N) on each of the pair
  double l;  // shared middle coefficient: amplitude is l/sqrt(N) on each middle state
};

/// Closed forms k_j = sqrt(N/2) sin((2j+1) theta), l_j = sqrt(N/(N-2))
/// cos((2j+1) theta) for the m = 2 pair trajectory. They satisfy
/// 2 k_j^2 / N + (N-2) l_j^2 / N = 1.
TrajectoryPoint trajectory_amplitudes(const TrajectoryModel& model, int iterations);

/// The real-valued iteration count j = pi/(4 theta) - 1/2 at which the middle
/// coefficient vanishes. Callers decide how to round.
double optimal_iteration_count(const TrajectoryModel& model);

/// Per-element amplitudes for general m: sin((2j+1) theta)/sqrt(m) on each
/// marked state and cos((2j+1) theta)/sqrt(N-m) on each unmarked state.
double marked_amplitude(const TrajectoryModel& model, int iterations);
double unmarked_amplitude(const TrajectoryModel& model, int iterations);

/// The invariant-subspace state: one amplitude per marked element, one per
/// unmarked element. Exact for any pipeline built from iterates that treat
/// the marked set symmetrically.
struct TwoModeState {
  Complex marked;
  Complex unmarked;
};

TwoModeState two_mode_uniform(int qubits);

/// Q(alpha, beta, marked) restricted to the invariant subspace; mirrors
/// grover_iterate exactly for in-plane states.
void two_mode_iterate(TwoModeState& state, int qubits, int marked_count,
                      double alpha, double beta);

}  // namespace ghzprep
