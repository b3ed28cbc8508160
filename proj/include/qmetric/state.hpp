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

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "qmetric/errors.hpp"
#include "qmetric/rng.hpp"

namespace qmetric {

using Complex = std::complex<double>;
using Cvec = Eigen::VectorXcd;
using Cmat = Eigen::MatrixXcd;
using Rvec = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kTolNorm = 1e-12;  // unit norm / hermiticity / trace
inline constexpr double kTolEig = 1e-10;   // eigenvalue floor for PSD checks
inline constexpr double kSlack = 1e-9;     // inequality slack
inline constexpr double kPi = 3.14159265358979323846;

// A normalized pure state. The ray it spans is the physical object; this type
// stores one representative, unit norm within kTolNorm.
class StateVector {
 public:
  explicit StateVector(Cvec amplitudes);

  // Rescales to unit norm before constructing; throws ZeroVectorError when the
  // input is numerically zero.
  static StateVector normalized(Cvec amplitudes);

  // Computational basis vector |k> in the given dimension.
  static StateVector basis(Index dim, Index k);

  Index dim() const { return amps_.size(); }
  const Cvec& amplitudes() const { return amps_; }
  Complex amplitude(Index i) const { return amps_(i); }

 private:
  Cvec amps_;
};

// Canonical-gauge representative of a ray: the first amplitude of modulus
// greater than kTolNorm is real and strictly positive, so two states differing
// only by a global phase canonicalize to the same representative.
class Ray {
 public:
  const StateVector& representative() const { return rep_; }

 private:
  friend Ray canonicalize(const StateVector& v);
  explicit Ray(StateVector rep) : rep_(std::move(rep)) {}
  StateVector rep_;
};

// A pure state with a declared (dimA, dimB) tensor factorization. The
// amplitude at flat index i*dimB + j is the coefficient of |i>_A (x) |j>_B.
class BipartiteState {
 public:
  BipartiteState(StateVector state, Index dim_a, Index dim_b);

  const StateVector& state() const { return state_; }
  Index dim() const { return state_.dim(); }
  Index dim_a() const { return dim_a_; }
  Index dim_b() const { return dim_b_; }

  // The dimA x dimB coefficient matrix M with M(i, j) = amplitude(i*dimB + j).
  Cmat coefficient_matrix() const;

 private:
  StateVector state_;
  Index dim_a_;
  Index dim_b_;
};

// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

// |<a|b>| clamped into [0, 1]; independent of either state's phase gauge.
double overlap(const StateVector& a, const StateVector& b);

Ray canonicalize(const StateVector& v);

bool approx_equal(const Ray& a, const Ray& b, double tol);

// Haar-random pure state: 2*dim independent standard normals as real and
// imaginary parts, then normalized.
StateVector haar_state(Index dim, Rng& rng);

// Haar-random unitary: QR of a complex Ginibre matrix with the diagonal phase
// correction that makes the distribution exactly Haar.
Cmat haar_unitary(Index dim, Rng& rng);

BipartiteState tensor_product(const StateVector& a, const StateVector& b);

StateVector apply_unitary(const Cmat& u, const StateVector& v);

// e^{i theta} v.
StateVector apply_phase(const StateVector& v, double theta);

}  // namespace qmetric
