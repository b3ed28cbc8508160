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

#include "qmetric/candidate.hpp"

#include <algorithm>

#include "qmetric/distances.hpp"

namespace qmetric {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Ray: return "Ray";
    case Axiom::UnitaryInvariance: return "UnitaryInvariance";
    case Axiom::Superposition: return "Superposition";
    case Axiom::NonDegeneracy: return "NonDegeneracy";
    case Axiom::Triangle: return "Triangle";
    case Axiom::GeodesicAdditivity: return "GeodesicAdditivity";
    case Axiom::EntanglementAwareness: return "EntanglementAwareness";
    case Axiom::MeasurementContextuality: return "MeasurementContextuality";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  for (int i = 0; i < kAxiomCount; ++i) {
    const Axiom a = static_cast<Axiom>(i);
    if (name == axiom_name(a)) return a;
  }
  return std::nullopt;
}

bool DistanceCandidate::claims(Axiom a) const {
  return std::find(claimed.begin(), claimed.end(), a) != claimed.end();
}

DistanceCandidate make_fs_candidate() {
  DistanceCandidate c;
  c.name = "fs";
  c.evaluate = [](const StateVector& a, const StateVector& b) { return d_fs(a, b); };
  c.claims_metric = true;
  c.claimed = {Axiom::Ray, Axiom::UnitaryInvariance, Axiom::Superposition,
               Axiom::NonDegeneracy, Axiom::Triangle, Axiom::GeodesicAdditivity};
  return c;
}

DistanceCandidate make_bures_candidate() {
  DistanceCandidate c;
  c.name = "bures";
  c.evaluate = [](const StateVector& a, const StateVector& b) { return d_bures(a, b); };
  c.claims_metric = true;
  c.claimed = {Axiom::Ray, Axiom::UnitaryInvariance, Axiom::Superposition,
               Axiom::NonDegeneracy, Axiom::Triangle};
  return c;
}

DistanceCandidate make_hilbert_candidate() {
  DistanceCandidate c;
  c.name = "hilbert";
  c.evaluate = [](const StateVector& a, const StateVector& b) { return d_hilbert(a, b); };
  c.claims_metric = false;
  // Claims the quantum-inspired core; the point of running it is that ray
  // well-definedness fails.
  c.claimed = {Axiom::Ray, Axiom::UnitaryInvariance, Axiom::Superposition};
  return c;
}

DistanceCandidate make_entanglement_candidate(Index dim_a, Index dim_b, EntropyBase base) {
  DistanceCandidate c;
  c.name = "entanglement";
  c.evaluate = [dim_a, dim_b, base](const StateVector& a, const StateVector& b) {
    return d_entanglement_aware(BipartiteState(a, dim_a, dim_b),
                                BipartiteState(b, dim_a, dim_b), base);
  };
  c.claims_metric = true;
  c.bipartite = std::make_pair(dim_a, dim_b);
  c.fixed_dim = dim_a * dim_b;
  c.claimed = {Axiom::Ray, Axiom::UnitaryInvariance, Axiom::Superposition,
               Axiom::NonDegeneracy, Axiom::Triangle, Axiom::EntanglementAwareness};
  return c;
}

DistanceCandidate make_measurement_l2_candidate(Povm povm, std::string tag) {
  DistanceCandidate c;
  c.name = "measurement-l2:" + tag;
  c.fixed_dim = povm.dim();
  c.context_tag = std::move(tag);
  c.evaluate = [povm](const StateVector& a, const StateVector& b) {
    return measurement_distance_l2(povm, a, b);
  };
  c.context_povm = std::move(povm);
  c.claims_metric = false;
  // Pseudometric core: no superposition sensitivity or non-degeneracy claims.
  c.claimed = {Axiom::Ray, Axiom::Triangle, Axiom::MeasurementContextuality};
  return c;
}

DistanceCandidate make_measurement_l1_candidate(Povm povm, std::string tag) {
  DistanceCandidate c;
  c.name = "measurement-l1:" + tag;
  c.fixed_dim = povm.dim();
  c.context_tag = std::move(tag);
  c.evaluate = [povm](const StateVector& a, const StateVector& b) {
    return measurement_distance_l1(povm, a, b);
  };
  c.context_povm = std::move(povm);
  c.claims_metric = false;
  c.claimed = {Axiom::Ray, Axiom::Triangle, Axiom::MeasurementContextuality};
  return c;
}

}  // namespace qmetric
