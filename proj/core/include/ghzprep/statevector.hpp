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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzprep/tolerances.hpp"

namespace ghzprep {

using Complex = std::complex<double>;

/// A 2x2 unitary acting on a single qubit, validated at construction
/// (U†U = I within kGateUnitarityTol) so kernels never re-check it.
class SingleQubitGate {
 public:
  SingleQubitGate(Complex u00, Complex u01, Complex u10, Complex u11);

  /// The Hadamard matrix (1/sqrt2) [[1, 1], [1, -1]]; self-inverse.
  static SingleQubitGate hadamard();
  static SingleQubitGate identity();

  Complex u00() const { return u00_; }
  Complex u01() const { return u01_; }
  Complex u10() const { return u10_; }
  Complex u11() const { return u11_; }

 private:
  Complex u00_, u01_, u10_, u11_;
};

/// Sparse diagonal phase assignment: listed basis indices pick up e^{i*phase},
/// everything else is left alone. Index bounds are checked at application
/// time, when the register dimension is known.
class PhaseOracle {
 public:
  struct Entry {
    std::uint64_t index;
    double phase;
  };

  PhaseOracle() = default;
  PhaseOracle(std::initializer_list<Entry> entries);

  /// phase = pi on every given index (the sign-flip oracle).
  static PhaseOracle flip(std::span<const std::uint64_t> indices);

  void set(std::uint64_t index, double phase);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

/// Dense complex amplitude vector over the 2^n computational basis states.
/// Basis index i is read as an n-bit integer; qubit q is bit q of i, with
/// bit 0 least significant. Kernels mutate the amplitudes in place and are
/// expected to preserve the 2-norm; nothing renormalizes behind your back.
class StateVector {
 public:
  /// Constructs |0...0> on `qubits` qubits (kMinQubits..kMaxQubits).
  explicit StateVector(int qubits);

  int qubits() const { return qubits_; }
  std::uint64_t dimension() const { return amps_.size(); }

  Complex amplitude(std::uint64_t index) const;

  std::vector<Complex>& data() { return amps_; }
  const std::vector<Complex>& data() const { return amps_; }

  /// l2 norm; 1 within kUnitarityTol drift after any sequence of kernels.
  double norm() const;

 private:
  int qubits_;
  std::vector<Complex> amps_;
};

StateVector basis_state(int qubits, std::uint64_t index);

/// Every amplitude 1/sqrt(N); equals walsh_hadamard(basis_state(n, 0)).
StateVector uniform_superposition(int qubits);

/// (|0...0> + |1...1>)/sqrt2 and (|0...0> - |1...1>)/sqrt2.
StateVector ghz_plus(int qubits);
StateVector ghz_minus(int qubits);

/// In-place single-qubit gate: O(N), pairwise over indices differing in the
/// chosen bit. No N x N matrix is ever formed.
void apply_single_qubit(StateVector& state, int qubit, const SingleQubitGate& gate);

/// In-place Walsh-Hadamard transform over all qubits: equivalent to applying
/// hadamard() to qubits 0..n-1 in sequence, and to the sign-sum form
/// (W psi)_k = N^{-1/2} sum_i (-1)^{popcount(k & i)} psi_i. Self-inverse.
void walsh_hadamard(StateVector& state);

/// c_i *= e^{i phase_i} for listed indices only.
void apply_phase_oracle(StateVector& state, const PhaseOracle& oracle);

/// Total probability mass on the target indices. Targets must be nonempty
/// and in range; duplicates are counted once.
double success_probability(const StateVector& state, std::span<const std::uint64_t> targets);

/// |<reference|state>|^2 — insensitive to global phase.
double fidelity(const StateVector& state, const StateVector& reference);

}  // namespace ghzprep
