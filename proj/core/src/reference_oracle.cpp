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

#include "ghzprep/reference_oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzprep {

namespace {

void check_dense_qubits(int qubits) {
  if (qubits < kMinQubits || qubits > kDenseMaxQubits) {
    throw std::invalid_argument("dense reference path supports " +
                                std::to_string(kMinQubits) + " <= n <= " +
                                std::to_string(kDenseMaxQubits) + " qubits, got " +
                                std::to_string(qubits));
  }
}

}  // namespace

DenseUnitary::DenseUnitary(std::uint64_t dimension)
    : dim_(dimension), entries_(dimension * dimension, Complex{0.0, 0.0}) {}

DenseUnitary DenseUnitary::identity(std::uint64_t dimension) {
  DenseUnitary u(dimension);
  for (std::uint64_t i = 0; i < dimension; ++i) u.at(i, i) = Complex{1.0, 0.0};
  return u;
}

double DenseUnitary::unitarity_deviation() const {
  double worst = 0.0;
  for (std::uint64_t r = 0; r < dim_; ++r) {
    for (std::uint64_t c = 0; c < dim_; ++c) {
      Complex dot{0.0, 0.0};
      for (std::uint64_t k = 0; k < dim_; ++k) {
        dot += std::conj(at(k, r)) * at(k, c);
      }
      const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(dot - expected));
    }
  }
  return worst;
}

DenseUnitary dense_walsh(int qubits) {
  check_dense_qubits(qubits);
  const std::uint64_t n = std::uint64_t{1} << qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  DenseUnitary u(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t c = 0; c < n; ++c) {
      const bool negative = std::popcount(r & c) & 1;
      u.at(r, c) = Complex{negative ? -scale : scale, 0.0};
    }
  }
  return u;
}

DenseUnitary dense_phase(const PhaseOracle& oracle, int qubits) {
  check_dense_qubits(qubits);
  const std::uint64_t n = std::uint64_t{1} << qubits;
  DenseUnitary u = DenseUnitary::identity(n);
  for (const PhaseOracle::Entry& e : oracle.entries()) {
    if (e.index >= n) {
      throw std::invalid_argument("oracle index out of range");
    }
    u.at(e.index, e.index) = std::polar(1.0, e.phase);
  }
  return u;
}

DenseUnitary dense_grover(const GroverParams& params, int qubits) {
  check_dense_qubits(qubits);
  const std::uint64_t n = std::uint64_t{1} << qubits;
  if (params.marked.back() >= n) {
    throw std::invalid_argument("marked index out of range");
  }

  PhaseOracle zero_oracle;
  zero_oracle.set(0, params.alpha);
  PhaseOracle marked_oracle;
  for (std::uint64_t idx : params.marked) marked_oracle.set(idx, params.beta);

  const DenseUnitary w = dense_walsh(qubits);
  DenseUnitary q = dense_multiply(w, dense_phase(zero_oracle, qubits));
  q = dense_multiply(q, w);
  q = dense_multiply(q, dense_phase(marked_oracle, qubits));
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t c = 0; c < n; ++c) {
      q.at(r, c) = -q.at(r, c);
    }
  }
  return q;
}

DenseUnitary dense_multiply(const DenseUnitary& lhs, const DenseUnitary& rhs) {
  if (lhs.dimension() != rhs.dimension()) {
    throw std::invalid_argument("dimension mismatch in dense multiply");
  }
  const std::uint64_t n = lhs.dimension();
  DenseUnitary out(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const Complex v = lhs.at(r, k);
      if (v == Complex{0.0, 0.0}) continue;
      for (std::uint64_t c = 0; c < n; ++c) {
        out.at(r, c) += v * rhs.at(k, c);
      }
    }
  }
  return out;
}

StateVector dense_apply(const DenseUnitary& u, const StateVector& state) {
  if (u.dimension() != state.dimension()) {
    throw std::invalid_argument("dimension mismatch in dense apply");
  }
  StateVector out(state.qubits());
  const std::uint64_t n = u.dimension();
  for (std::uint64_t r = 0; r < n; ++r) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t c = 0; c < n; ++c) {
      acc += u.at(r, c) * state.data()[c];
    }
    out.data()[r] = acc;
  }
  return out;
}

}  // namespace ghzprep
