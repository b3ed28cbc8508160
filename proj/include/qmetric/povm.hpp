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

#include <vector>

#include "qmetric/state.hpp"

namespace qmetric {

// Finite measurement: positive-semidefinite effects summing to the identity.
// Validated on construction (hermiticity and completeness within 1e-10,
// eigenvalues above -1e-10).
class Povm {
 public:
  // Skips validation; the caller guarantees the effects are PSD and complete.
  struct Unchecked {};

  Povm(Index dim, std::vector<Cmat> effects);
  Povm(Index dim, std::vector<Cmat> effects, Unchecked);

  static Povm computational_basis(Index dim);

  Index dim() const { return dim_; }
  std::size_t outcomes() const { return effects_.size(); }
  const std::vector<Cmat>& effects() const { return effects_; }

  // Outcome distribution p_m = <psi| E_m |psi>.
  Rvec probabilities(const StateVector& psi) const;

 private:
  Index dim_;
  std::vector<Cmat> effects_;
};

// Random POVM: effects E_m = S^{-1/2} G_m^H G_m S^{-1/2} for complex Gaussian
// G_m and S the sum of the Gram matrices.
Povm random_povm(Index dim, int outcomes, Rng& rng);

// Euclidean norm of the difference of outcome distributions.
double measurement_distance_l2(const Povm& m, const StateVector& a, const StateVector& b);

// Total variation style distance: sum_m |p_m - q_m|.
double measurement_distance_l1(const Povm& m, const StateVector& a, const StateVector& b);

}  // namespace qmetric
