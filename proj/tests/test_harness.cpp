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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qmetric/bipartite.hpp"
#include "qmetric/distances.hpp"
#include "qmetric/harness.hpp"
#include "qmetric/operational.hpp"
#include "qmetric/profile.hpp"

using namespace qmetric;
using qmetric::testing::plus_state;

namespace {

HarnessConfig small_config() {
  HarnessConfig hc;
  hc.seed = 7;
  hc.dims = {2, 3};
  hc.trials = 120;
  return hc;
}

bool has_flag(const ConformanceReport& r, const std::string& flag) {
  return std::find(r.flags.begin(), r.flags.end(), flag) != r.flags.end();
}

bool is_plus_minus_pair(const Witness& w) {
  const Ray a = canonicalize(*w.state_a);
  const Ray b = canonicalize(*w.state_b);
  const Ray plus = canonicalize(plus_state(+1));
  const Ray minus = canonicalize(plus_state(-1));
  return (approx_equal(a, plus, 1e-6) && approx_equal(b, minus, 1e-6)) ||
         (approx_equal(a, minus, 1e-6) && approx_equal(b, plus, 1e-6));
}

}  // namespace

TEST_CASE("fs passes the intrinsic axioms and classifies as a metric") {
  const ConformanceReport r = run_conformance(make_fs_candidate(), small_config());
  for (Axiom a : {Axiom::Ray, Axiom::UnitaryInvariance, Axiom::Superposition,
                  Axiom::NonDegeneracy, Axiom::Triangle, Axiom::GeodesicAdditivity,
                  Axiom::EntanglementAwareness}) {
    const AxiomVerdict* v = r.find(a);
    REQUIRE(v != nullptr);
    CHECK(v->status == AxiomStatus::Pass);
  }
  CHECK(r.find(Axiom::MeasurementContextuality)->status == AxiomStatus::NotApplicable);
  CHECK(has_flag(r, "QuantumInspiredDistance"));
  CHECK(has_flag(r, "QuantumInspiredMetric"));
  CHECK(!has_flag(r, "EntanglementAware"));  // no declared bipartite structure
  CHECK(!has_flag(r, "MeasurementContextual"));
}

TEST_CASE("bures keeps the metric axioms but loses additivity") {
  const ConformanceReport r = run_conformance(make_bures_candidate(), small_config());
  CHECK(has_flag(r, "QuantumInspiredMetric"));
  const AxiomVerdict* geo = r.find(Axiom::GeodesicAdditivity);
  REQUIRE(geo != nullptr);
  CHECK(geo->status == AxiomStatus::Fail);
  // Worst defect sits at theta1 = theta2 = pi/4: 4 sin(pi/8) - 2 sin(pi/4).
  CHECK(geo->max_violation > 0.1);
  CHECK(geo->max_violation < 0.1166);
  REQUIRE(geo->counterexample.has_value());
  CHECK(*geo->counterexample->theta1 == doctest::Approx(kPi / 4.0));
  CHECK(*geo->counterexample->theta2 == doctest::Approx(kPi / 4.0));
}

TEST_CASE("hilbert distance fails ray well-definedness with the sign-flip witness") {
  const ConformanceReport r = run_conformance(make_hilbert_candidate(), small_config());
  const AxiomVerdict* ray = r.find(Axiom::Ray);
  REQUIRE(ray != nullptr);
  CHECK(ray->status == AxiomStatus::Fail);
  CHECK(std::abs(ray->max_violation - 2.0) < 1e-12);
  REQUIRE(ray->counterexample.has_value());
  CHECK(*ray->counterexample->phase_a == doctest::Approx(kPi));
  CHECK(overlap(*ray->counterexample->state_a, *ray->counterexample->state_b) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!has_flag(r, "QuantumInspiredDistance"));
  CHECK(!has_flag(r, "QuantumInspiredMetric"));
}

TEST_CASE("basis measurement L2 candidate matches its expected verdict row") {
  auto candidate = make_measurement_l2_candidate(Povm::computational_basis(2), "basis2");
  const ConformanceReport r = run_conformance(candidate, small_config());

  CHECK(r.find(Axiom::Ray)->status == AxiomStatus::Pass);
  CHECK(r.find(Axiom::UnitaryInvariance)->status == AxiomStatus::Fail);
  CHECK(r.find(Axiom::Triangle)->status == AxiomStatus::Pass);

  const AxiomVerdict* sup = r.find(Axiom::Superposition);
  REQUIRE(sup != nullptr);
  CHECK(sup->status == AxiomStatus::Fail);
  REQUIRE(sup->counterexample.has_value());
  CHECK(is_plus_minus_pair(*sup->counterexample));

  const AxiomVerdict* nd = r.find(Axiom::NonDegeneracy);
  REQUIRE(nd != nullptr);
  CHECK(nd->status == AxiomStatus::Fail);
  REQUIRE(nd->counterexample.has_value());
  CHECK(is_plus_minus_pair(*nd->counterexample));

  const AxiomVerdict* mc = r.find(Axiom::MeasurementContextuality);
  REQUIRE(mc != nullptr);
  CHECK(mc->status == AxiomStatus::Pass);
  REQUIRE(mc->collapse.has_value());
  CHECK(is_plus_minus_pair(*mc->collapse));

  CHECK(has_flag(r, "MeasurementContextual"));
  CHECK(!has_flag(r, "QuantumInspiredDistance"));

  // The L1 variant with the same context also passes contextuality.
  auto l1 = make_measurement_l1_candidate(Povm::computational_basis(2), "basis2");
  const ConformanceReport r1 = run_conformance(l1, small_config());
  CHECK(r1.find(Axiom::MeasurementContextuality)->status == AxiomStatus::Pass);
}

TEST_CASE("entanglement-aware candidate is local-unitary invariant and aware") {
  auto candidate = make_entanglement_candidate(2, 2);
  HarnessConfig hc = small_config();
  const ConformanceReport r = run_conformance(candidate, hc);

  CHECK(r.find(Axiom::Ray)->status == AxiomStatus::Pass);
  CHECK(r.find(Axiom::UnitaryInvariance, "local")->status == AxiomStatus::Pass);
  const AxiomVerdict* global = r.find(Axiom::UnitaryInvariance, "global");
  REQUIRE(global != nullptr);
  CHECK(global->status == AxiomStatus::Fail);
  // The deterministic probe rotates |00> onto a Bell state: the distance to
  // |01> grows by sqrt((pi/2)^2 + ln(2)^2) - pi/2.
  const double expected = std::sqrt(kPi * kPi / 4.0 + std::log(2.0) * std::log(2.0)) - kPi / 2.0;
  CHECK(global->max_violation >= expected - 1e-9);

  CHECK(r.find(Axiom::Superposition)->status == AxiomStatus::Pass);
  CHECK(r.find(Axiom::NonDegeneracy)->status == AxiomStatus::Pass);
  CHECK(r.find(Axiom::Triangle)->status == AxiomStatus::Pass);
  CHECK(r.find(Axiom::EntanglementAwareness)->status == AxiomStatus::Pass);
  CHECK(has_flag(r, "EntanglementAware"));
  CHECK(has_flag(r, "QuantumInspiredMetric"));
}

TEST_CASE("a marginal-only candidate fails entanglement awareness") {
  DistanceCandidate c;
  c.name = "entropy-gap";
  c.bipartite = std::make_pair<Index, Index>(2, 2);
  c.fixed_dim = 4;
  c.evaluate = [](const StateVector& a, const StateVector& b) {
    return std::abs(entanglement_entropy(BipartiteState(a, 2, 2)) -
                    entanglement_entropy(BipartiteState(b, 2, 2)));
  };
  Rng rng(71);
  const AxiomVerdict v = check_entanglement_awareness(c, {{2, 2}}, 40, rng);
  CHECK(v.status == AxiomStatus::Fail);
  REQUIRE(v.counterexample.has_value());
  CHECK(v.max_violation > 1e-9);
  CHECK(violation_from_witness(c, Axiom::EntanglementAwareness, *v.counterexample) ==
        doctest::Approx(v.max_violation).epsilon(1e-12));
}

TEST_CASE("a constant-zero candidate fails non-degeneracy with a distinct witness") {
  DistanceCandidate c;
  c.name = "zero";
  c.evaluate = [](const StateVector&, const StateVector&) { return 0.0; };
  Rng rng(72);
  const AxiomVerdict v = check_nondegeneracy(c, {2, 3}, 60, rng);
  CHECK(v.status == AxiomStatus::Fail);
  REQUIRE(v.counterexample.has_value());
  // The superposition checker must never flag a pair whose rays coincide.
  CHECK(!approx_equal(canonicalize(*v.counterexample->state_a),
                      canonicalize(*v.counterexample->state_b), 1e-6));
}

TEST_CASE("triangle check finds the quadratic chord profile violation") {
  const OverlapProfile quad{"quad", [](double r) { return (1.0 - r) * (1.0 - r); }};
  const DistanceCandidate c = distance_from_profile_unchecked(quad);
  Rng rng(73);
  const AxiomVerdict v = check_triangle(c, {2, 3}, 200, rng);
  CHECK(v.status == AxiomStatus::Fail);
  CHECK(v.max_violation > 1e-3);
}

TEST_CASE("candidates from strictly decreasing profiles keep superposition sensitivity") {
  const OverlapProfile root{"sqrt-chord", [](double r) { return std::sqrt(1.0 - r); }};
  const DistanceCandidate c = distance_from_profile(root);
  Rng rng(74);
  const AxiomVerdict v = check_superposition(c, {2, 4}, 200, rng);
  CHECK(v.status == AxiomStatus::Pass);
}

TEST_CASE("scaled arcs keep geodesic additivity, the chord does not") {
  Rng rng(76);
  const DistanceCandidate scaled = distance_from_profile(profile_arccos(2.5));
  const AxiomVerdict ok = check_geodesic_additivity(scaled, {2, 3}, 120, rng);
  CHECK(ok.status == AxiomStatus::Pass);

  Rng rng2(77);
  const DistanceCandidate chord = distance_from_profile(profile_bures());
  const AxiomVerdict bad = check_geodesic_additivity(chord, {2, 3}, 120, rng2);
  CHECK(bad.status == AxiomStatus::Fail);
}

TEST_CASE("L1 distance under the optimal POVM of a fixed pair is contextual") {
  Rng rng(78);
  const StateVector a = haar_state(2, rng);
  const StateVector b = haar_state(2, rng);
  const DiscriminationResult h = helstrom(a, b);
  auto candidate = make_measurement_l1_candidate(h.optimal_povm, "helstrom-pair");
  Rng check_rng(79);
  const AxiomVerdict v =
      check_measurement_contextuality(candidate, {h.optimal_povm}, 200, check_rng);
  CHECK(v.status == AxiomStatus::Pass);
  // Two outcomes commute, so a collapse pair must have been constructed.
  CHECK(v.collapse.has_value());
}

TEST_CASE("superposition checker only flags genuinely distinct rays") {
  DistanceCandidate c;
  c.name = "zero";
  c.evaluate = [](const StateVector&, const StateVector&) { return 0.0; };
  Rng rng(80);
  const AxiomVerdict v = check_superposition(c, {2, 3}, 200, rng);
  CHECK(v.status == AxiomStatus::Fail);
  REQUIRE(v.counterexample.has_value());
  CHECK(!approx_equal(canonicalize(*v.counterexample->state_a),
                      canonicalize(*v.counterexample->state_b), 1e-6));
  CHECK(d_fs(*v.counterexample->state_a, *v.counterexample->state_b) > 1e-3);
}

TEST_CASE("failed verdict witnesses replay to the recorded violation") {
  HarnessConfig hc = small_config();
  const std::vector<DistanceCandidate> candidates = {
      make_hilbert_candidate(),
      make_bures_candidate(),
      make_measurement_l2_candidate(Povm::computational_basis(2), "basis2"),
      make_entanglement_candidate(2, 2),
  };
  for (const auto& c : candidates) {
    const ConformanceReport r = run_conformance(c, hc);
    for (const AxiomVerdict& v : r.verdicts) {
      if (v.status != AxiomStatus::Fail) continue;
      REQUIRE(v.counterexample.has_value());
      const double replayed = violation_from_witness(c, v.axiom, *v.counterexample);
      CHECK(replayed == doctest::Approx(v.max_violation).epsilon(1e-12));
      CHECK(replayed > 1e-9);
    }
  }
}

TEST_CASE("reports are deterministic and serialize byte-identically") {
  const ConformanceReport a = run_conformance(make_bures_candidate(), small_config());
  const ConformanceReport b = run_conformance(make_bures_candidate(), small_config());
  CHECK(report_to_json(a) == report_to_json(b));

  HarnessConfig other = small_config();
  other.seed = 8;
  const ConformanceReport c = run_conformance(make_bures_candidate(), other);
  CHECK(report_to_json(a) != report_to_json(c));
}

TEST_CASE("built-in candidates evaluate symmetrically") {
  Rng rng(75);
  for (const auto& c :
       {make_fs_candidate(), make_bures_candidate(), make_hilbert_candidate(),
        make_measurement_l2_candidate(Povm::computational_basis(3), "basis3")}) {
    Rng local = rng.child(std::hash<std::string>{}(c.name));
    CHECK(max_symmetry_violation(c, {2, 3}, 200, local) < 1e-12);
  }
}

TEST_CASE("throwing candidates surface as CandidateError with input echo") {
  DistanceCandidate c;
  c.name = "exploder";
  c.evaluate = [](const StateVector&, const StateVector&) -> double {
    throw std::runtime_error("boom");
  };
  CHECK_THROWS_AS(run_conformance(c, small_config()), CandidateError);
  try {
    run_conformance(c, small_config());
  } catch (const CandidateError& e) {
    CHECK(!e.input_echo.empty());
    CHECK(std::string(e.what()).find("Ray") != std::string::npos);
  }
}
