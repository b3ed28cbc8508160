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

#include "qmetric/bipartite.hpp"
#include "qmetric/state.hpp"

namespace qmetric {

// Geodesic distance on rays: arccos of the overlap, in [0, pi/2].
double d_fs(const StateVector& a, const StateVector& b);

// sqrt(2 (1 - overlap)), in [0, sqrt(2)]; equals 2 sin(d_fs / 2).
double d_bures(const StateVector& a, const StateVector& b);

// Trace distance between the two rank-one density matrices:
// sqrt(1 - overlap^2) = sin(d_fs), in [0, 1].
double d_trace_pure(const StateVector& a, const StateVector& b);

// Transition probability overlap^2.
double fidelity(const StateVector& a, const StateVector& b);

// Euclidean norm of the amplitude difference; acts on representatives, not
// rays, and is therefore not phase-gauge invariant.
double d_hilbert(const StateVector& a, const StateVector& b);

// sqrt(d_fs^2 + |E(a) - E(b)|^2) with the entanglement entropies taken in the
// given base. Requires matching (dimA, dimB) factorizations.
double d_entanglement_aware(const BipartiteState& a, const BipartiteState& b,
                            EntropyBase base = EntropyBase::Natural);

}  // namespace qmetric
