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

namespace ghzprep {

// Supported register sizes. n = 1 is excluded because the trajectory and
// angle formulas divide by N - 2; n = 24 (256 MiB of complex doubles) is the
// memory ceiling.
inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 24;

// The dense reference simulator exists for correctness checks, not scale.
inline constexpr int kDenseMaxQubits = 8;

// Norm preservation expected from every in-place kernel, per application.
inline constexpr double kUnitarityTol = 1e-12;

// Agreement between fast kernels and the dense reference path.
inline constexpr double kMatchTol = 1e-10;

// Slack on probability-1 claims of the exact preparation methods.
inline constexpr double kSuccessTol = 1e-9;

// 2x2 gates are checked once, at construction.
inline constexpr double kGateUnitarityTol = 1e-10;

// |j - round(j)| below this routes to the direct (integer-iteration) plan.
inline constexpr double kIntegerIterationTol = 1e-9;

// Angle solver: converged when the off-target amplitude residual drops below
// kSolverResidualTol, giving up after kSolverMaxIterations damped steps. The
// initial finite-difference probe step is kSolverInitialStep radians.
inline constexpr double kSolverResidualTol = 1e-12;
inline constexpr int kSolverMaxIterations = 100;
inline constexpr double kSolverInitialStep = 1e-3;

// Tolerated phase between the two target amplitudes of a prepared pair state.
inline constexpr double kRelativePhaseTol = 1e-6;

}  // namespace ghzprep
