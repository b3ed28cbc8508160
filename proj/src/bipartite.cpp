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

#include "qmetric/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qmetric {

DensityMatrix::DensityMatrix(Cmat entries) : m_(std::move(entries)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw DimensionError("density matrix must be square and nonempty");
  }
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kTolNorm) {
    throw Error("density matrix is not Hermitian within 1e-12");
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kTolNorm || std::abs(m_.trace().imag()) > kTolNorm) {
    throw Error("density matrix trace " + std::to_string(tr) + " is not 1 within 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Cmat> es(m_, Eigen::EigenvaluesOnly);
  eigs_ = es.eigenvalues();
  if (eigs_.minCoeff() < -kTolEig) {
    throw Error("density matrix has an eigenvalue below -1e-10");
  }
}

DensityMatrix partial_trace(const BipartiteState& s, Keep keep) {
  const Cmat m = s.coefficient_matrix();
  if (keep == Keep::A) {
    return DensityMatrix(m * m.adjoint());
  }
  // rho_B(j, j') = sum_i M(i, j) conj(M(i, j')) = conj(M^H M)(j, j').
  return DensityMatrix((m.adjoint() * m).conjugate());
}

SchmidtDecomposition schmidt(const BipartiteState& s) {
  const Cmat m = s.coefficient_matrix();
  Eigen::JacobiSVD<Cmat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition d;
  d.sqrt_lambda = svd.singularValues();
  d.basis_a = svd.matrixU();
  // M(i, j) = sum_k s_k U(i, k) conj(V(j, k)), so the B vectors are the
  // conjugated right singular vectors.
  d.basis_b = svd.matrixV().conjugate();
  return d;
}

StateVector schmidt_reconstruct(const SchmidtDecomposition& d, Index dim_a, Index dim_b) {
  Cvec v = Cvec::Zero(dim_a * dim_b);
  for (Index k = 0; k < d.sqrt_lambda.size(); ++k) {
    for (Index i = 0; i < dim_a; ++i) {
      for (Index j = 0; j < dim_b; ++j) {
        v(i * dim_b + j) += d.sqrt_lambda(k) * d.basis_a(i, k) * d.basis_b(j, k);
      }
    }
  }
  return StateVector(std::move(v));
}

double entropy(const DensityMatrix& rho, EntropyBase base) {
  double s = 0.0;
  for (Index i = 0; i < rho.eigenvalues().size(); ++i) {
    const double lambda = rho.eigenvalues()(i);
    if (lambda > kTolEig) {
      s -= lambda * std::log(lambda);
    }
  }
  s = std::max(0.0, s);
  return base == EntropyBase::Two ? s / std::log(2.0) : s;
}

double entanglement_entropy(const BipartiteState& s, EntropyBase base) {
  return entropy(partial_trace(s, Keep::A), base);
}

double max_entropy(Index d, EntropyBase base) {
  const double s = std::log(static_cast<double>(d));
  return base == EntropyBase::Two ? s / std::log(2.0) : s;
}

double trace_norm_diff(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("trace norm difference requires equal dimensions");
  }
  Eigen::SelfAdjointEigenSolver<Cmat> es(rho.entries() - sigma.entries(),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double binary_entropy(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return -t * std::log(t) - (1.0 - t) * std::log(1.0 - t);
}

}  // namespace qmetric
