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

#include <cstdint>
#include <vector>

#include "ghzprep/grover_ops.hpp"
#include "ghzprep/statevector.hpp"

namespace ghzprep {

// Slow, obviously-correct dense-matrix route used to cross-validate the fast
// kernels. Capped at kDenseMaxQubits; it exists for correctness, not scale.

class DenseUnitary {
 public:
  explicit DenseUnitary(std::uint64_t dimension);

  std::uint64_t dimension() const { return dim_; }

  Complex& at(std::uint64_t row, std::uint64_t col) { return entries_[row * dim_ + col]; }
  const Complex& at(std::uint64_t row, std::uint64_t col) const {
    return entries_[row * dim_ + col];
  }

  static DenseUnitary identity(std::uint64_t dimension);

  /// Max entrywise deviation of U†U from I.
  double unitarity_deviation() const;

 private:
  std::uint64_t dim_;
  std::vector<Complex> entries_;
};

/// Entry (k, i) = N^{-1/2} (-1)^{popcount(k & i)} — the n-fold tensor power
/// of the Hadamard matrix.
DenseUnitary dense_walsh(int qubits);

DenseUnitary dense_phase(const PhaseOracle& oracle, int qubits);

/// -W diag(e^{i alpha}, 1, ..., 1) W diag_M(e^{i beta}) as an explicit matrix.
DenseUnitary dense_grover(const GroverParams& params, int qubits);

DenseUnitary dense_multiply(const DenseUnitary& lhs, const DenseUnitary& rhs);

StateVector dense_apply(const DenseUnitary& u, const StateVector& state);

}  // namespace ghzprep
