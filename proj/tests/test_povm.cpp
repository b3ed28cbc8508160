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

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qmetric/distances.hpp"
#include "qmetric/povm.hpp"

using namespace qmetric;
using qmetric::testing::plus_state;

TEST_CASE("computational basis POVM is valid and distributes correctly") {
  const Povm basis = Povm::computational_basis(3);
  CHECK(basis.outcomes() == 3);
  const Rvec p = basis.probabilities(StateVector::basis(3, 1));
  CHECK(p(0) == doctest::Approx(0.0));
  CHECK(p(1) == doctest::Approx(1.0));
}

TEST_CASE("random POVMs satisfy the completeness relation") {
  Rng rng(31);
  for (Index dim : {2, 3, 8}) {
    for (int outcomes : {2, 3, 5}) {
      const Povm p = random_povm(dim, outcomes, rng);
      Cmat sum = Cmat::Zero(dim, dim);
      for (const auto& e : p.effects()) {
        sum += e;
        Eigen::SelfAdjointEigenSolver<Cmat> es(e, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > -1e-10);
      }
      CHECK((sum - Cmat::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("invalid POVMs are rejected") {
  std::vector<Cmat> effects;
  effects.push_back(Cmat::Identity(2, 2) * Complex(0.5, 0.0));
  CHECK_THROWS_AS(Povm(2, std::move(effects)), InvalidPovm);

  std::vector<Cmat> negative;
  Cmat too_big = Cmat::Identity(2, 2) * Complex(1.5, 0.0);
  Cmat fixup = Cmat::Identity(2, 2) * Complex(-0.5, 0.0);
  negative.push_back(too_big);
  negative.push_back(fixup);
  CHECK_THROWS_AS(Povm(2, std::move(negative)), InvalidPovm);
}

TEST_CASE("measurement distances on reference pairs") {
  const Povm basis = Povm::computational_basis(2);
  const StateVector e0 = StateVector::basis(2, 0);
  const StateVector e1 = StateVector::basis(2, 1);

  CHECK(measurement_distance_l2(basis, e0, e0) == 0.0);
  // |+> and |-> are distinct rays with identical basis statistics.
  CHECK(measurement_distance_l2(basis, plus_state(+1), plus_state(-1)) < 1e-15);
  CHECK(measurement_distance_l2(basis, e0, e1) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK(measurement_distance_l1(basis, e0, e0) == 0.0);
  CHECK(measurement_distance_l1(basis, e0, e1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("amplitude-moduli distance is bounded by the vector norm") {
  Rng rng(32);
  for (int t = 0; t < 10000; ++t) {
    const Index dim = 2 + static_cast<Index>(rng.below(6));
    const StateVector a = haar_state(dim, rng);
    const StateVector b = haar_state(dim, rng);
    double sum = 0.0;
    for (Index i = 0; i < dim; ++i) {
      const double gap = std::abs(a.amplitude(i)) - std::abs(b.amplitude(i));
      sum += gap * gap;
    }
    CHECK(std::sqrt(sum) <= d_hilbert(a, b) + 1e-9);
  }
}

TEST_CASE("L1 measurement distance respects the distinguishability bound") {
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    const Index dim = 2 + static_cast<Index>(rng.below(3));
    const Povm p = random_povm(dim, 2 + static_cast<int>(rng.below(3)), rng);
    for (int k = 0; k < 100; ++k) {
      const StateVector a = haar_state(dim, rng);
      const StateVector b = haar_state(dim, rng);
      CHECK(measurement_distance_l1(p, a, b) <= 2.0 * std::sin(d_fs(a, b)) + 1e-9);
    }
  }
}

TEST_CASE("measurement distances reject dimension mismatches") {
  const Povm basis = Povm::computational_basis(2);
  CHECK_THROWS_AS(basis.probabilities(StateVector::basis(3, 0)), DimensionError);
  CHECK_THROWS_AS(
      measurement_distance_l2(basis, StateVector::basis(3, 0), StateVector::basis(3, 1)),
      DimensionError);
}
