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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmetric/bipartite.hpp"
#include "qmetric/povm.hpp"
#include "qmetric/state.hpp"

namespace qmetric {

enum class Axiom {
  Ray,
  UnitaryInvariance,
  Superposition,
  NonDegeneracy,
  Triangle,
  GeodesicAdditivity,
  EntanglementAwareness,
  MeasurementContextuality,
};

inline constexpr int kAxiomCount = 8;

const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

// A pluggable distance over rays plus the metadata the conformance harness
// needs: which axioms the candidate is expected to satisfy, whether it is
// tied to a measurement context, and whether its states carry a declared
// bipartite factorization.
struct DistanceCandidate {
  std::string name;
  std::function<double(const StateVector&, const StateVector&)> evaluate;
  bool claims_metric = false;
  std::optional<std::string> context_tag;
  std::optional<Povm> context_povm;
  std::optional<std::pair<Index, Index>> bipartite;
  std::optional<Index> fixed_dim;
  std::vector<Axiom> claimed;

  bool claims(Axiom a) const;
};

DistanceCandidate make_fs_candidate();
DistanceCandidate make_bures_candidate();
DistanceCandidate make_hilbert_candidate();
DistanceCandidate make_entanglement_candidate(Index dim_a, Index dim_b,
                                              EntropyBase base = EntropyBase::Natural);
DistanceCandidate make_measurement_l2_candidate(Povm povm, std::string tag);
DistanceCandidate make_measurement_l1_candidate(Povm povm, std::string tag);

}  // namespace qmetric
