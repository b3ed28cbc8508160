// Copyright 2026 The qmetric Authors
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

#include <functional>
#include <string>

#include "qmetric/povm.hpp"
#include "qmetric/state.hpp"

namespace qmetric {

// Optimal two-outcome discrimination of a pure-state pair at equal priors.
struct DiscriminationResult {
  double p_success;      // (1 + trace distance) / 2, in [1/2, 1]
  double trace_distance; // sqrt(1 - overlap^2)
  double fs_distance;    // arccos(overlap)
  Povm optimal_povm;     // two effects; positive eigenspace first
};

// Builds the optimal measurement from the eigenspaces of |a><a| - |b><b|
// restricted to the pair's 2D span; the span complement is folded into the
// positive effect so the POVM has exactly two outcomes.
DiscriminationResult helstrom(const StateVector& a, const StateVector& b);

// Inverts p = (1 + sin d) / 2: returns arcsin(2p - 1).
double fs_from_popt(double p);

// Finite-difference quantum Fisher information estimate at one parameter
// point, plus the matching quadratic Bures coefficient.
struct QfiEstimate {
  double theta;
  double step_size;
  double value;                  // 4 (1 - overlap^2) / step^2, clamped at 0
  double bures_sq_over_step_sq;  // d_bures^2 / step^2, ~ value / 4
};

// The family maps a parameter to raw amplitudes; outputs must be normalized
// within 1e-9. Steps outside [1e-6, 1e-2] are rejected.
QfiEstimate qfi_finite_difference(const std::function<Cvec(double)>& family,
                                  double theta, double step);

// Built-in parameter families for the CLI and tests.
std::function<Cvec(double)> family_qubit_rotation();
std::function<Cvec(double)> family_qubit_phase();
std::function<Cvec(double)> family_constant();

}  // namespace qmetric
