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

#include "qmetric/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qmetric {

StateVector::StateVector(Cvec amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) {
    throw DimensionError("state dimension must be at least 1");
  }
  const double n = amps_.norm();
  if (std::abs(n - 1.0) > kTolNorm) {
    throw NormalizationError("state norm " + std::to_string(n) + " is not 1 within 1e-12");
  }
}

StateVector StateVector::normalized(Cvec amplitudes) {
  if (amplitudes.size() < 1) {
    throw DimensionError("state dimension must be at least 1");
  }
  const double n = amplitudes.norm();
  if (n <= kTolNorm) {
    throw ZeroVectorError("cannot normalize a numerically zero vector");
  }
  return StateVector(amplitudes / n);
}

StateVector StateVector::basis(Index dim, Index k) {
  if (dim < 1 || k < 0 || k >= dim) {
    throw DimensionError("basis index out of range");
  }
  Cvec v = Cvec::Zero(dim);
  v(k) = Complex(1.0, 0.0);
  return StateVector(std::move(v));
}

BipartiteState::BipartiteState(StateVector state, Index dim_a, Index dim_b)
    : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ < 1 || dim_b_ < 1 || dim_a_ * dim_b_ != state_.dim()) {
    throw DimensionError("dimA * dimB must equal the state dimension");
  }
}

Cmat BipartiteState::coefficient_matrix() const {
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMajor>(state_.amplitudes().data(), dim_a_, dim_b_);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner product requires equal dimensions");
  }
  // Eigen's dot conjugates the left operand.
  return a.amplitudes().dot(b.amplitudes());
}

double overlap(const StateVector& a, const StateVector& b) {
  const double r = std::abs(inner_product(a, b));
  // Identical representatives can land a few ulp below 1 because stored norms
  // are only unit within 1e-12; arccos would amplify that to ~1e-8. Snap the
  // ulp cluster at 1 so equal rays sit at exact distance zero.
  if (r >= 1.0 - 1e-15) return 1.0;
  return std::clamp(r, 0.0, 1.0);
}

Ray canonicalize(const StateVector& v) {
  const Cvec& a = v.amplitudes();
  Index lead = -1;
  for (Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i)) > kTolNorm) {
      lead = i;
      break;
    }
  }
  if (lead < 0) {
    throw ZeroVectorError("cannot canonicalize a numerically zero vector");
  }
  const Complex phase = a(lead) / std::abs(a(lead));
  Cvec rep = a * std::conj(phase);
  rep(lead) = Complex(std::abs(a(lead)), 0.0);
  return Ray(StateVector(std::move(rep)));
}

bool approx_equal(const Ray& a, const Ray& b, double tol) {
  if (a.representative().dim() != b.representative().dim()) return false;
  return (a.representative().amplitudes() - b.representative().amplitudes())
             .cwiseAbs()
             .maxCoeff() <= tol;
}

StateVector haar_state(Index dim, Rng& rng) {
  if (dim < 1) {
    throw DimensionError("state dimension must be at least 1");
  }
  Cvec v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = Complex(re, im);
  }
  return StateVector::normalized(std::move(v));
}

Cmat haar_unitary(Index dim, Rng& rng) {
  if (dim < 1) {
    throw DimensionError("unitary dimension must be at least 1");
  }
  Cmat g(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Cmat> qr(g);
  Cmat q = qr.householderQ();
  // Fix the column phases from the R diagonal so the distribution is exactly
  // Haar, not merely unitary.
  const Cvec diag = qr.matrixQR().diagonal();
  for (Index j = 0; j < dim; ++j) {
    const double m = std::abs(diag(j));
    const Complex lambda = m > 0.0 ? diag(j) / m : Complex(1.0, 0.0);
    q.col(j) *= lambda;
  }
  return q;
}

BipartiteState tensor_product(const StateVector& a, const StateVector& b) {
  Cvec v(a.dim() * b.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < b.dim(); ++j) {
      v(i * b.dim() + j) = a.amplitude(i) * b.amplitude(j);
    }
  }
  return BipartiteState(StateVector(std::move(v)), a.dim(), b.dim());
}

StateVector apply_unitary(const Cmat& u, const StateVector& v) {
  if (u.rows() != v.dim() || u.cols() != v.dim()) {
    throw DimensionError("unitary dimension does not match state dimension");
  }
  return StateVector(u * v.amplitudes());
}

StateVector apply_phase(const StateVector& v, double theta) {
  return StateVector(std::polar(1.0, theta) * v.amplitudes());
}

}  // namespace qmetric
