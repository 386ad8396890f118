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

#include "ghzprep/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ghzprep {

namespace {

void check_qubit_count(int qubits) {
  if (qubits < kMinQubits || qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(qubits) +
                                " outside supported range [" + std::to_string(kMinQubits) +
                                ", " + std::to_string(kMaxQubits) + "]");
  }
}

void check_index(std::uint64_t index, std::uint64_t dimension) {
  if (index >= dimension) {
    throw std::invalid_argument("basis index " + std::to_string(index) +
                                " out of range for dimension " + std::to_string(dimension));
  }
}

}  // namespace

SingleQubitGate::SingleQubitGate(Complex u00, Complex u01, Complex u10, Complex u11)
    : u00_(u00), u01_(u01), u10_(u10), u11_(u11) {
  // Entrywise U†U = I check.
  const Complex a = std::conj(u00_) * u00_ + std::conj(u10_) * u10_;
  const Complex b = std::conj(u00_) * u01_ + std::conj(u10_) * u11_;
  const Complex c = std::conj(u01_) * u00_ + std::conj(u11_) * u10_;
  const Complex d = std::conj(u01_) * u01_ + std::conj(u11_) * u11_;
  const double deviation = std::max(std::max(std::abs(a - 1.0), std::abs(d - 1.0)),
                                    std::max(std::abs(b), std::abs(c)));
  if (deviation > kGateUnitarityTol) {
    throw std::invalid_argument("single-qubit gate is not unitary (deviation " +
                                std::to_string(deviation) + ")");
  }
}

SingleQubitGate SingleQubitGate::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return SingleQubitGate({s, 0}, {s, 0}, {s, 0}, {-s, 0});
}

SingleQubitGate SingleQubitGate::identity() {
  return SingleQubitGate({1, 0}, {0, 0}, {0, 0}, {1, 0});
}

PhaseOracle::PhaseOracle(std::initializer_list<Entry> entries) {
  for (const Entry& e : entries) set(e.index, e.phase);
}

PhaseOracle PhaseOracle::flip(std::span<const std::uint64_t> indices) {
  PhaseOracle oracle;
  const double pi = std::acos(-1.0);
  for (std::uint64_t i : indices) oracle.set(i, pi);
  return oracle;
}

void PhaseOracle::set(std::uint64_t index, double phase) {
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("phase angle must be finite");
  }
  for (Entry& e : entries_) {
    if (e.index == index) {
      e.phase = phase;
      return;
    }
  }
  entries_.push_back({index, phase});
}

StateVector::StateVector(int qubits) : qubits_(qubits) {
  check_qubit_count(qubits);
  amps_.assign(std::uint64_t{1} << qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

Complex StateVector::amplitude(std::uint64_t index) const {
  check_index(index, dimension());
  return amps_[index];
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& c : amps_) sum += std::norm(c);
  return std::sqrt(sum);
}

StateVector basis_state(int qubits, std::uint64_t index) {
  StateVector state(qubits);
  check_index(index, state.dimension());
  state.data()[0] = Complex{0.0, 0.0};
  state.data()[index] = Complex{1.0, 0.0};
  return state;
}

StateVector uniform_superposition(int qubits) {
  StateVector state(qubits);
  const double amp = 1.0 / std::sqrt(static_cast<double>(state.dimension()));
  std::fill(state.data().begin(), state.data().end(), Complex{amp, 0.0});
  return state;
}

StateVector ghz_plus(int qubits) {
  StateVector state(qubits);
  const double amp = 1.0 / std::sqrt(2.0);
  state.data()[0] = Complex{amp, 0.0};
  state.data()[state.dimension() - 1] = Complex{amp, 0.0};
  return state;
}

StateVector ghz_minus(int qubits) {
  StateVector state = ghz_plus(qubits);
  state.data()[state.dimension() - 1] = Complex{-1.0 / std::sqrt(2.0), 0.0};
  return state;
}

void apply_single_qubit(StateVector& state, int qubit, const SingleQubitGate& gate) {
  if (qubit < 0 || qubit >= state.qubits()) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.qubits()) +
                                " qubits");
  }
  auto& amps = state.data();
  const std::uint64_t n = amps.size();
  const std::uint64_t half = std::uint64_t{1} << qubit;
  const std::uint64_t stride = half << 1;
  for (std::uint64_t base = 0; base < n; base += stride) {
    for (std::uint64_t k = base; k < base + half; ++k) {
      const Complex a = amps[k];
      const Complex b = amps[k + half];
      amps[k] = gate.u00() * a + gate.u01() * b;
      amps[k + half] = gate.u10() * a + gate.u11() * b;
    }
  }
}

void walsh_hadamard(StateVector& state) {
  // Butterfly passes with unnormalized +/-, then one scaling pass. Fewer
  // multiplies and less rounding than scaling by 1/sqrt2 per stage.
  auto& amps = state.data();
  const std::uint64_t n = amps.size();
  for (std::uint64_t half = 1; half < n; half <<= 1) {
    const std::uint64_t stride = half << 1;
    for (std::uint64_t base = 0; base < n; base += stride) {
      for (std::uint64_t k = base; k < base + half; ++k) {
        const Complex a = amps[k];
        const Complex b = amps[k + half];
        amps[k] = a + b;
        amps[k + half] = a - b;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Complex& c : amps) c *= scale;
}

void apply_phase_oracle(StateVector& state, const PhaseOracle& oracle) {
  auto& amps = state.data();
  for (const PhaseOracle::Entry& e : oracle.entries()) {
    check_index(e.index, amps.size());
    amps[e.index] *= std::polar(1.0, e.phase);
  }
}

double success_probability(const StateVector& state, std::span<const std::uint64_t> targets) {
  if (targets.empty()) {
    throw std::invalid_argument("target set must be nonempty");
  }
  std::unordered_set<std::uint64_t> seen;
  double sum = 0.0;
  for (std::uint64_t t : targets) {
    check_index(t, state.dimension());
    if (seen.insert(t).second) sum += std::norm(state.data()[t]);
  }
  return sum;
}

double fidelity(const StateVector& state, const StateVector& reference) {
  if (state.qubits() != reference.qubits()) {
    throw std::invalid_argument("fidelity requires equal qubit counts");
  }
  Complex overlap{0.0, 0.0};
  const auto& a = reference.data();
  const auto& b = state.data();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::norm(overlap);
}

}  // namespace ghzprep
