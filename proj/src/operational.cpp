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

#include "qmetric/operational.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qmetric/distances.hpp"

namespace qmetric {

DiscriminationResult helstrom(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("discrimination requires equal dimensions");
  }
  const Index d = a.dim();
  const double r = overlap(a, b);
  const double fs = std::acos(r);
  const double trace = std::sqrt(std::max(0.0, 1.0 - r * r));

  const Cvec& u = a.amplitudes();
  const Complex cu = u.dot(b.amplitudes());
  Cvec w = b.amplitudes() - cu * u;
  const double nw = w.norm();

  Cmat e_plus;
  Cmat e_minus;
  if (nw < 1e-8) {
    // Same ray to working precision: nothing to separate.
    e_plus = Cmat::Identity(d, d);
    e_minus = Cmat::Zero(d, d);
  } else {
    const Cvec v = w / nw;
    // |a><a| - |b><b| restricted to span{u, v}; a = (1, 0), b = (cu, <v|b>).
    Eigen::Vector2cd av(Complex(1.0, 0.0), Complex(0.0, 0.0));
    Eigen::Vector2cd bv(cu, v.dot(b.amplitudes()));
    Eigen::Matrix2cd diff = av * av.adjoint() - bv * bv.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(diff);
    const Eigen::Vector2cd em = es.eigenvectors().col(0);  // negative branch
    const Eigen::Vector2cd ep = es.eigenvectors().col(1);  // positive branch
    const Cvec vm = em(0) * u + em(1) * v;
    const Cvec vp = ep(0) * u + ep(1) * v;
    const Cmat span = u * u.adjoint() + v * v.adjoint();
    e_minus = vm * vm.adjoint();
    e_plus = vp * vp.adjoint() + (Cmat::Identity(d, d) - span);
    e_plus = ((e_plus + e_plus.adjoint()) / 2.0).eval();
    e_minus = ((e_minus + e_minus.adjoint()) / 2.0).eval();
  }

  // A projector plus the span complement, and a projector: PSD and complete
  // by construction, so the eigensolve-based validation is skipped.
  std::vector<Cmat> effects;
  effects.push_back(std::move(e_plus));
  effects.push_back(std::move(e_minus));
  DiscriminationResult res{(1.0 + trace) / 2.0, trace, fs,
                           Povm(d, std::move(effects), Povm::Unchecked{})};
  return res;
}

double fs_from_popt(double p) {
  if (p < 0.5 - 1e-12 || p > 1.0 + 1e-12) {
    throw RangeError("success probability " + std::to_string(p) + " outside [1/2, 1]");
  }
  p = std::clamp(p, 0.5, 1.0);
  return std::asin(2.0 * p - 1.0);
}

QfiEstimate qfi_finite_difference(const std::function<Cvec(double)>& family,
                                  double theta, double step) {
  if (!(step >= 1e-6 && step <= 1e-2)) {
    throw RangeError("step " + std::to_string(step) + " outside [1e-6, 1e-2]");
  }
  auto state_at = [&](double t) {
    Cvec amps = family(t);
    const double n = amps.norm();
    if (std::abs(n - 1.0) > 1e-9) {
      throw NormalizationError("family output at t=" + std::to_string(t) +
                               " has norm " + std::to_string(n));
    }
    return StateVector(amps / n);
  };
  const StateVector s0 = state_at(theta);
  const StateVector s1 = state_at(theta + step);
  const double f = fidelity(s0, s1);
  double value = 4.0 * (1.0 - f) / (step * step);
  if (value < 0.0 && value > -kSlack) value = 0.0;
  const double db = d_bures(s0, s1);
  return QfiEstimate{theta, step, value, db * db / (step * step)};
}

std::function<Cvec(double)> family_qubit_rotation() {
  return [](double t) {
    Cvec v(2);
    v << Complex(std::cos(t / 2.0), 0.0), Complex(std::sin(t / 2.0), 0.0);
    return v;
  };
}

std::function<Cvec(double)> family_qubit_phase() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return [inv_sqrt2](double t) {
    Cvec v(2);
    v << Complex(inv_sqrt2, 0.0), std::polar(inv_sqrt2, t);
    return v;
  };
}

std::function<Cvec(double)> family_constant() {
  return [](double) {
    Cvec v(2);
    v << Complex(1.0, 0.0), Complex(0.0, 0.0);
    return v;
  };
}

}  // namespace qmetric
