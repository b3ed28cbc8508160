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

#include <optional>
#include <string>
#include <vector>

#include "qmetric/candidate.hpp"
#include "qmetric/rng.hpp"
#include "qmetric/state.hpp"

namespace qmetric {

enum class AxiomStatus { Pass, Fail, NotApplicable };

const char* status_name(AxiomStatus s);

// Everything needed to replay one violating evaluation standalone. Which
// fields are present depends on the axiom; see violation_from_witness.
struct Witness {
  std::optional<StateVector> state_a;
  std::optional<StateVector> state_b;
  std::optional<StateVector> state_c;
  std::optional<double> phase_a;
  std::optional<double> phase_b;
  std::optional<Cmat> unitary;
  std::optional<double> theta1;
  std::optional<double> theta2;
  std::optional<std::string> note;
};

// Violation semantics, uniform across axioms: Pass iff max_violation stays
// below 1e-9. For equality-style axioms (ray, unitary invariance, triangle,
// geodesic additivity) the violation is the defect of the tested relation.
// For positivity-style axioms (superposition, non-degeneracy, entanglement
// awareness) a pair the candidate fails to separate scores the Fubini-Study
// distance between its rays, so failures replay well above threshold.
struct AxiomVerdict {
  Axiom axiom = Axiom::Ray;
  AxiomStatus status = AxiomStatus::NotApplicable;
  long trials = 0;
  double max_violation = 0.0;
  std::optional<Witness> counterexample;
  // Evidence attached to a Pass of the contextuality axiom: a distinct-ray
  // pair the measurement cannot tell apart.
  std::optional<Witness> collapse;
  // "local" / "global" for the doubled unitary-invariance run on bipartite
  // candidates; empty otherwise.
  std::optional<std::string> scope;
};

struct HarnessConfig {
  std::uint64_t seed = 42;
  std::vector<Index> dims{2, 3, 4};
  std::vector<std::pair<Index, Index>> bipartite_dims{{2, 2}};
  long trials = 300;
};

struct ConformanceReport {
  std::string candidate;
  std::uint64_t seed = 0;
  std::vector<Index> dims;
  std::vector<AxiomVerdict> verdicts;
  std::vector<std::string> flags;

  const AxiomVerdict* find(Axiom a, const std::string& scope = "") const;
};

AxiomVerdict check_ray(const DistanceCandidate& c, const std::vector<Index>& dims,
                       long trials, Rng& rng);
AxiomVerdict check_unitary_invariance(const DistanceCandidate& c,
                                      const std::vector<Index>& dims, long trials, Rng& rng);
// Haar unitaries on the full product space; only meaningful for candidates
// with a declared bipartite structure.
AxiomVerdict check_unitary_invariance_global(const DistanceCandidate& c, long trials, Rng& rng);
AxiomVerdict check_superposition(const DistanceCandidate& c, const std::vector<Index>& dims,
                                 long trials, Rng& rng);
AxiomVerdict check_nondegeneracy(const DistanceCandidate& c, const std::vector<Index>& dims,
                                 long trials, Rng& rng);
AxiomVerdict check_triangle(const DistanceCandidate& c, const std::vector<Index>& dims,
                            long trials, Rng& rng);
AxiomVerdict check_geodesic_additivity(const DistanceCandidate& c,
                                       const std::vector<Index>& dims, long trials, Rng& rng);
AxiomVerdict check_entanglement_awareness(const DistanceCandidate& c,
                                          const std::vector<std::pair<Index, Index>>& dims_ab,
                                          long trials, Rng& rng);
AxiomVerdict check_measurement_contextuality(const DistanceCandidate& c,
                                             const std::vector<Povm>& povms, long trials,
                                             Rng& rng);

// Runs all eight checks with per-axiom child seeds and derives the
// classification flags. Deterministic given (candidate, config).
ConformanceReport run_conformance(const DistanceCandidate& c, const HarnessConfig& config);

// Recomputes the violation encoded in a verdict's counterexample.
double violation_from_witness(const DistanceCandidate& c, Axiom axiom, const Witness& w);

// Max |c(a,b) - c(b,a)| over random pairs; candidates are required to be
// symmetric but the harness verifies rather than assumes it.
double max_symmetry_violation(const DistanceCandidate& c, const std::vector<Index>& dims,
                              long trials, Rng& rng);

std::string report_to_json(const ConformanceReport& report);

}  // namespace qmetric
