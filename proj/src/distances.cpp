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

#include "qmetric/distances.hpp"

#include <algorithm>
#include <cmath>

namespace qmetric {

double d_fs(const StateVector& a, const StateVector& b) {
  return std::acos(overlap(a, b));
}

double d_bures(const StateVector& a, const StateVector& b) {
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - overlap(a, b))));
}

double d_trace_pure(const StateVector& a, const StateVector& b) {
  const double r = overlap(a, b);
  return std::sqrt(std::max(0.0, 1.0 - r * r));
}

double fidelity(const StateVector& a, const StateVector& b) {
  const double r = overlap(a, b);
  return r * r;
}

double d_hilbert(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("distance requires equal dimensions");
  }
  return (a.amplitudes() - b.amplitudes()).norm();
}

double d_entanglement_aware(const BipartiteState& a, const BipartiteState& b,
                            EntropyBase base) {
  if (a.dim() != b.dim()) {
    throw DimensionError("distance requires equal dimensions");
  }
  if (a.dim_a() != b.dim_a() || a.dim_b() != b.dim_b()) {
    throw FactorizationMismatch("states declare different (dimA, dimB) factorizations");
  }
  const double geo = d_fs(a.state(), b.state());
  const double de = entanglement_entropy(a, base) - entanglement_entropy(b, base);
  return std::sqrt(geo * geo + de * de);
}

}  // namespace qmetric
