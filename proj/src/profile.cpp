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

#include "qmetric/profile.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>
#include <vector>

namespace qmetric {

namespace {
constexpr int kMonotoneGrid = 1000;
constexpr int kSubadditiveGrid = 100;
}  // namespace

std::optional<ProfileDefect> validate_profile(const OverlapProfile& p) {
  const double f1 = p.f(1.0);
  if (std::abs(f1) > 1e-12) {
    return ProfileDefect{"f(1)=0", {1.0}, p.name + ": f(1) = " + std::to_string(f1)};
  }
  double prev = p.f(0.0);
  if (prev < -1e-12) {
    return ProfileDefect{"nonnegative", {0.0}, p.name + ": f(0) < 0"};
  }
  for (int k = 1; k < kMonotoneGrid; ++k) {
    const double r0 = static_cast<double>(k - 1) / (kMonotoneGrid - 1);
    const double r1 = static_cast<double>(k) / (kMonotoneGrid - 1);
    const double cur = p.f(r1);
    if (cur < -1e-12) {
      return ProfileDefect{"nonnegative", {r1}, p.name + ": f < 0"};
    }
    if (!(prev > cur - 1e-12)) {
      return ProfileDefect{"strictly-decreasing", {r0, r1},
                           p.name + ": f is not decreasing between grid points"};
    }
    prev = cur;
  }
  const double step = (kPi / 2.0) / (kSubadditiveGrid - 1);
  for (int i = 0; i < kSubadditiveGrid; ++i) {
    for (int j = i; i + j <= kSubadditiveGrid - 1; ++j) {
      const double t1 = i * step;
      const double t2 = j * step;
      const double excess = p.g(t1 + t2) - p.g(t1) - p.g(t2);
      if (excess > kSlack) {
        return ProfileDefect{"subadditive", {t1, t2},
                             p.name + ": g(t1+t2) exceeds g(t1)+g(t2) by " +
                                 std::to_string(excess)};
      }
    }
  }
  return std::nullopt;
}

DistanceCandidate distance_from_profile(const OverlapProfile& p) {
  if (auto defect = validate_profile(p)) {
    throw ProfileViolation(defect->message, defect->condition, defect->witness);
  }
  return distance_from_profile_unchecked(p, /*claims_metric=*/true);
}

DistanceCandidate distance_from_profile_unchecked(const OverlapProfile& p, bool claims_metric) {
  DistanceCandidate c;
  c.name = "profile:" + p.name;
  auto f = p.f;
  c.evaluate = [f](const StateVector& a, const StateVector& b) { return f(overlap(a, b)); };
  c.claims_metric = claims_metric;
  c.claimed = {Axiom::Ray, Axiom::UnitaryInvariance, Axiom::Superposition};
  if (claims_metric) {
    c.claimed.push_back(Axiom::NonDegeneracy);
    c.claimed.push_back(Axiom::Triangle);
  }
  return c;
}

double profile_additivity_defect(const OverlapProfile& p, int grid) {
  if (grid < 2) {
    throw RangeError("additivity defect needs a grid of at least 2 points");
  }
  const double step = (kPi / 2.0) / (grid - 1);
  double defect = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = i; i + j <= grid - 1; ++j) {
      const double t1 = i * step;
      const double t2 = j * step;
      defect = std::max(defect, std::abs(p.g(t1 + t2) - p.g(t1) - p.g(t2)));
    }
  }
  return defect;
}

OverlapProfile profile_arccos(double scale) {
  return OverlapProfile{
      scale == 1.0 ? "arccos" : "arccos*" + std::to_string(scale),
      [scale](double r) { return scale * std::acos(std::clamp(r, 0.0, 1.0)); }};
}

OverlapProfile profile_bures() {
  return OverlapProfile{"bures", [](double r) {
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - r)));
  }};
}

OverlapProfile profile_linear() {
  return OverlapProfile{"linear", [](double r) { return 1.0 - r; }};
}

OverlapProfile profile_from_table(std::string name, std::vector<double> r,
                                  std::vector<double> f) {
  if (r.size() != f.size() || r.size() < 2) {
    throw ConfigError("profile table needs matching r/f arrays of length >= 2");
  }
  if (!std::is_sorted(r.begin(), r.end())) {
    throw ConfigError("profile table r values must be ascending");
  }
  if (std::abs(r.front()) > 1e-9 || std::abs(r.back() - 1.0) > 1e-9) {
    throw ConfigError("profile table must cover r in [0, 1]");
  }
  // Interpolate linearly in the angle arccos(r), not in r. Linear-in-r chords
  // behave like theta^2 near theta = 0 and are superadditive there no matter
  // how dense the table is; angle-space chords of a concave profile stay
  // concave, so subadditivity survives sampling.
  const std::size_t n = r.size();
  auto thetas = std::make_shared<std::vector<double>>(n);
  auto values = std::make_shared<std::vector<double>>(n);
  for (std::size_t k = 0; k < n; ++k) {
    (*thetas)[k] = std::acos(std::clamp(r[n - 1 - k], 0.0, 1.0));
    (*values)[k] = f[n - 1 - k];
  }
  auto interp = [thetas, values](double x) {
    const double theta = std::acos(std::clamp(x, 0.0, 1.0));
    if (theta <= thetas->front()) return values->front();
    if (theta >= thetas->back()) return values->back();
    const auto it = std::upper_bound(thetas->begin(), thetas->end(), theta);
    const std::size_t hi = static_cast<std::size_t>(it - thetas->begin());
    const std::size_t lo = hi - 1;
    const double span = (*thetas)[hi] - (*thetas)[lo];
    if (span <= 0.0) return (*values)[lo];
    const double t = (theta - (*thetas)[lo]) / span;
    return (1.0 - t) * (*values)[lo] + t * (*values)[hi];
  };
  return OverlapProfile{std::move(name), interp};
}

}  // namespace qmetric
