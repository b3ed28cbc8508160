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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "qmetric/state.hpp"

using namespace qmetric;
using qmetric::testing::qubit;

TEST_CASE("rng streams are reproducible and children derive from the seed") {
  Rng a(1234);
  Rng b(1234);
  for (int i = 0; i < 200; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  Rng c(1234);
  Rng d(1234);
  for (int i = 0; i < 200; ++i) {
    CHECK(c.normal() == d.normal());
  }
  Rng child = c.child(7);
  Rng manual(derive_seed(1234, 7));
  for (int i = 0; i < 50; ++i) {
    CHECK(child.next_u64() == manual.next_u64());
  }
}

TEST_CASE("rng normal moments") {
  Rng rng(99);
  const int n = 200000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("inner product basics") {
  Rng rng(1);
  const StateVector psi = haar_state(5, rng);
  const Complex self = inner_product(psi, psi);
  CHECK(std::abs(self - Complex(1.0, 0.0)) < 1e-12);

  const StateVector e0 = StateVector::basis(2, 0);
  const StateVector e1 = StateVector::basis(2, 1);
  CHECK(std::abs(inner_product(e0, e1)) < 1e-15);

  const StateVector rotated = qubit(kPi / 6.0);
  CHECK(inner_product(e0, rotated).real() == doctest::Approx(std::cos(kPi / 6.0)).epsilon(1e-12));

  // Linear in the second argument: <a| (i b) = i <a|b>.
  const StateVector b2 = haar_state(5, rng);
  const StateVector ib2 = apply_phase(b2, kPi / 2.0);
  const Complex lhs = inner_product(psi, ib2);
  const Complex rhs = Complex(0.0, 1.0) * inner_product(psi, b2);
  CHECK(std::abs(lhs - rhs) < 1e-12);

  CHECK_THROWS_AS(inner_product(e0, StateVector::basis(3, 0)), DimensionError);
}

TEST_CASE("overlap is phase free and clamped") {
  Rng rng(2);
  const StateVector psi = haar_state(8, rng);
  CHECK(overlap(psi, apply_phase(psi, 0.7)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(overlap(StateVector::basis(2, 0), StateVector::basis(2, 1)) == 0.0);
  CHECK(overlap(psi, psi) <= 1.0);
}

TEST_CASE("canonicalize fixes the gauge") {
  const StateVector e0 = StateVector::basis(2, 0);
  CHECK(canonicalize(e0).representative().amplitude(0) == Complex(1.0, 0.0));

  const StateVector minus = apply_phase(e0, kPi);
  const auto rep = canonicalize(minus).representative();
  CHECK(std::abs(rep.amplitude(0) - Complex(1.0, 0.0)) < 1e-12);

  Cvec v(2);
  const double c = 1.0 / std::sqrt(2.0);
  v << Complex(0.0, c), Complex(0.0, c);  // (i/sqrt2)(|0> + |1>)
  const auto rep2 = canonicalize(StateVector(std::move(v))).representative();
  CHECK(std::abs(rep2.amplitude(0) - Complex(c, 0.0)) < 1e-12);
  CHECK(std::abs(rep2.amplitude(1) - Complex(c, 0.0)) < 1e-12);

  Cvec zero = Cvec::Zero(3);
  CHECK_THROWS_AS(StateVector::normalized(zero), ZeroVectorError);
}

TEST_CASE("canonicalize is invariant under global phases") {
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) {
    const Index dim = 2 + static_cast<Index>(rng.below(4));
    const StateVector psi = haar_state(dim, rng);
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const Ray r1 = canonicalize(psi);
    const Ray r2 = canonicalize(apply_phase(psi, theta));
    CHECK(approx_equal(r1, r2, 1e-10));
  }
}

TEST_CASE("haar state dimension one and errors") {
  Rng rng(4);
  const StateVector s = haar_state(1, rng);
  const auto rep = canonicalize(s).representative();
  CHECK(std::abs(rep.amplitude(0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK_THROWS_AS(haar_state(0, rng), DimensionError);
}

TEST_CASE("haar state first-component law") {
  // |<0|psi>|^2 follows Beta(1, d-1); brute-force moments and the empirical
  // CDF both have closed forms to compare against.
  Rng rng(5);
  const StateVector e0 = StateVector::basis(2, 0);
  const int n = 100000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = overlap(e0, haar_state(2, rng));
    mean += r * r;
  }
  mean /= n;
  CHECK(std::abs(mean - 0.5) < 0.01);

  const Index d = 8;
  const StateVector f0 = StateVector::basis(d, 0);
  std::vector<double> samples(n);
  for (int i = 0; i < n; ++i) {
    const double r = overlap(f0, haar_state(d, rng));
    samples[static_cast<std::size_t>(i)] = r * r;
  }
  std::sort(samples.begin(), samples.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = samples[static_cast<std::size_t>(i)];
    const double cdf = 1.0 - std::pow(1.0 - x, static_cast<double>(d - 1));
    ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / n));
    ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
  }
  CHECK(ks < 0.01);
}

TEST_CASE("haar pair overlap matches the Beta-law mean in dimension 1000") {
  Rng rng(6);
  const int n = 10000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    mean += overlap(haar_state(1000, rng), haar_state(1000, rng));
  }
  mean /= n;
  // Gamma(3/2)/sqrt(1000) = 0.02802...; the stated pi/(4 sqrt(d)) would be 0.0248.
  CHECK(std::abs(mean - 0.028025) < 0.001);
}

TEST_CASE("haar unitary is unitary and preserves overlaps") {
  Rng rng(7);
  for (Index dim : {1, 2, 5, 16}) {
    const Cmat u = haar_unitary(dim, rng);
    const double dev = (u.adjoint() * u - Cmat::Identity(dim, dim)).cwiseAbs().maxCoeff();
    CHECK(dev < 1e-10);
  }
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Index dim = 2 + static_cast<Index>(rng.below(7));
    const Cmat u = haar_unitary(dim, rng);
    const StateVector a = haar_state(dim, rng);
    const StateVector b = haar_state(dim, rng);
    worst = std::max(worst, std::abs(overlap(apply_unitary(u, a), apply_unitary(u, b)) -
                                     overlap(a, b)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("tensor product layout and separability") {
  const BipartiteState s00 = tensor_product(StateVector::basis(2, 0), StateVector::basis(2, 0));
  CHECK(std::abs(s00.state().amplitude(0) - Complex(1.0, 0.0)) < 1e-15);

  const BipartiteState ps = tensor_product(qmetric::testing::plus_state(+1),
                                           StateVector::basis(2, 0));
  CHECK(std::abs(ps.state().amplitude(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
  CHECK(std::abs(ps.state().amplitude(2) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
  CHECK(std::abs(ps.state().amplitude(1)) < 1e-15);
}
