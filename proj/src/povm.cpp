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

#include "qmetric/povm.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qmetric {

Povm::Povm(Index dim, std::vector<Cmat> effects)
    : dim_(dim), effects_(std::move(effects)) {
  if (dim_ < 1 || effects_.empty()) {
    throw InvalidPovm("a POVM needs dimension >= 1 and at least one effect");
  }
  Cmat sum = Cmat::Zero(dim_, dim_);
  for (std::size_t m = 0; m < effects_.size(); ++m) {
    const Cmat& e = effects_[m];
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw InvalidPovm("effect " + std::to_string(m) + " has the wrong shape");
    }
    if ((e - e.adjoint()).cwiseAbs().maxCoeff() > kTolEig) {
      throw InvalidPovm("effect " + std::to_string(m) + " is not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Cmat> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kTolEig) {
      throw InvalidPovm("effect " + std::to_string(m) + " has an eigenvalue below -1e-10");
    }
    sum += e;
  }
  if ((sum - Cmat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() > kTolEig) {
    throw InvalidPovm("effects do not sum to the identity within 1e-10");
  }
}

Povm::Povm(Index dim, std::vector<Cmat> effects, Unchecked)
    : dim_(dim), effects_(std::move(effects)) {}

Povm Povm::computational_basis(Index dim) {
  std::vector<Cmat> effects;
  effects.reserve(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) {
    Cmat e = Cmat::Zero(dim, dim);
    e(k, k) = Complex(1.0, 0.0);
    effects.push_back(std::move(e));
  }
  return Povm(dim, std::move(effects));
}

Rvec Povm::probabilities(const StateVector& psi) const {
  if (psi.dim() != dim_) {
    throw DimensionError("state dimension does not match the POVM");
  }
  Rvec p(static_cast<Index>(effects_.size()));
  for (std::size_t m = 0; m < effects_.size(); ++m) {
    const Complex v = psi.amplitudes().dot(effects_[m] * psi.amplitudes());
    p(static_cast<Index>(m)) = v.real();
  }
  return p;
}

Povm random_povm(Index dim, int outcomes, Rng& rng) {
  if (dim < 1 || outcomes < 1) {
    throw InvalidPovm("random POVM needs dim >= 1 and outcomes >= 1");
  }
  std::vector<Cmat> grams;
  grams.reserve(static_cast<std::size_t>(outcomes));
  Cmat s = Cmat::Zero(dim, dim);
  for (int m = 0; m < outcomes; ++m) {
    Cmat g(dim, dim);
    for (Index j = 0; j < dim; ++j) {
      for (Index i = 0; i < dim; ++i) {
        g(i, j) = Complex(rng.normal(), rng.normal());
      }
    }
    Cmat a = g.adjoint() * g;
    s += a;
    grams.push_back(std::move(a));
  }
  Eigen::SelfAdjointEigenSolver<Cmat> es(s);
  const Cmat inv_sqrt = es.operatorInverseSqrt();
  std::vector<Cmat> effects;
  effects.reserve(grams.size());
  for (auto& a : grams) {
    Cmat e = inv_sqrt * a * inv_sqrt;
    // Symmetrize away the last bits of rounding before validation.
    effects.push_back(((e + e.adjoint()) / 2.0).eval());
  }
  return Povm(dim, std::move(effects));
}

double measurement_distance_l2(const Povm& m, const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("distance requires equal dimensions");
  }
  return (m.probabilities(a) - m.probabilities(b)).norm();
}

double measurement_distance_l1(const Povm& m, const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("distance requires equal dimensions");
  }
  return (m.probabilities(a) - m.probabilities(b)).cwiseAbs().sum();
}

}  // namespace qmetric
