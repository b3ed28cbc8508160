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

#include <Eigen/Dense>

#include "qmetric/state.hpp"

namespace qmetric {

enum class Keep { A, B };

enum class EntropyBase { Natural, Two };

// Hermitian, positive-semidefinite, unit-trace matrix. Validated on
// construction; the spectrum is cached for entropy and trace-norm work.
class DensityMatrix {
 public:
  explicit DensityMatrix(Cmat entries);

  Index dim() const { return m_.rows(); }
  const Cmat& entries() const { return m_; }

  // Ascending.
  const Rvec& eigenvalues() const { return eigs_; }

 private:
  Cmat m_;
  Rvec eigs_;
};

// Biorthogonal expansion sum_k sqrt_lambda(k) |a_k> (x) |b_k> with
// coefficients sorted descending; columns of basis_a / basis_b are the
// orthonormal Schmidt vectors.
struct SchmidtDecomposition {
  Rvec sqrt_lambda;
  Cmat basis_a;
  Cmat basis_b;
};

DensityMatrix partial_trace(const BipartiteState& s, Keep keep);

SchmidtDecomposition schmidt(const BipartiteState& s);

// Rebuilds the flat state from a Schmidt decomposition.
StateVector schmidt_reconstruct(const SchmidtDecomposition& d, Index dim_a, Index dim_b);

// -sum_i lambda_i log(lambda_i) over the spectrum, with eigenvalues at or
// below kTolEig contributing zero.
double entropy(const DensityMatrix& rho, EntropyBase base = EntropyBase::Natural);

// Entropy of the reduced state on subsystem A.
double entanglement_entropy(const BipartiteState& s, EntropyBase base = EntropyBase::Natural);

// log(d) in the requested base: the entropy ceiling for a d-dimensional state.
double max_entropy(Index d, EntropyBase base = EntropyBase::Natural);

// Trace norm ||rho - sigma||_1 via the spectrum of the Hermitian difference.
double trace_norm_diff(const DensityMatrix& rho, const DensityMatrix& sigma);

// Binary entropy -t*log(t) - (1-t)*log(1-t) in nats, zero at the endpoints.
double binary_entropy(double t);

}  // namespace qmetric
