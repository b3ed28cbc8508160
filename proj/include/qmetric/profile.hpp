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
#include <optional>
#include <string>

#include "qmetric/candidate.hpp"

namespace qmetric {

// A distance profile over the overlap: d([psi],[phi]) = f(|<psi|phi>|).
// Admissible profiles have f(1) = 0, f strictly decreasing, and
// g(theta) = f(cos theta) subadditive on [0, pi/2].
struct OverlapProfile {
  std::string name;
  std::function<double(double)> f;

  double g(double theta) const { return f(std::cos(theta)); }
};

struct ProfileDefect {
  std::string condition;
  std::vector<double> witness;
  std::string message;
};

// Checks the admissibility conditions on finite grids (1000 points for
// monotonicity and the endpoint, sampled pairs for subadditivity with slack
// 1e-9). Returns the first violated condition, if any.
std::optional<ProfileDefect> validate_profile(const OverlapProfile& p);

// Wraps an admissible profile as a DistanceCandidate; throws ProfileViolation
// when validation fails.
DistanceCandidate distance_from_profile(const OverlapProfile& p);

// Builds the candidate without validating; for probing profiles that are
// expected to break one of the axioms.
DistanceCandidate distance_from_profile_unchecked(const OverlapProfile& p,
                                                  bool claims_metric = false);

// max over grid pairs (theta1, theta2) with theta1 + theta2 <= pi/2 of
// |g(theta1 + theta2) - g(theta1) - g(theta2)|. Vanishes exactly when g is
// linear on the grid, i.e. when the profile is a scalar multiple of arccos.
double profile_additivity_defect(const OverlapProfile& p, int grid);

OverlapProfile profile_arccos(double scale = 1.0);
OverlapProfile profile_bures();
OverlapProfile profile_linear();  // f(r) = 1 - r

// Piecewise-linear profile through sampled (r, f) points; r must be ascending
// and cover [0, 1].
OverlapProfile profile_from_table(std::string name, std::vector<double> r,
                                  std::vector<double> f);

}  // namespace qmetric
