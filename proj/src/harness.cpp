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

#include "qmetric/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qmetric/bipartite.hpp"
#include "qmetric/distances.hpp"
#include "qmetric/io.hpp"

namespace qmetric {

namespace {

constexpr double kPositivity = 1e-9;  // pass/fail threshold shared by all checks
constexpr double kDistinctFs = 1e-3;  // "distinct rays" gate for non-degeneracy

double guarded_eval(const DistanceCandidate& c, const StateVector& a, const StateVector& b) {
  try {
    return c.evaluate(a, b);
  } catch (const CandidateError&) {
    throw;
  } catch (const std::exception& e) {
    throw CandidateError("candidate '" + c.name + "' failed: " + e.what(),
                         io::state_to_json(a) + " ; " + io::state_to_json(b));
  }
}

std::vector<Index> effective_dims(const DistanceCandidate& c, const std::vector<Index>& dims) {
  if (c.fixed_dim) return {*c.fixed_dim};
  std::vector<Index> out;
  for (Index d : dims) {
    if (d >= 2) out.push_back(d);
  }
  if (out.empty()) throw ConfigError("harness needs at least one dimension >= 2");
  return out;
}

long per_dim_trials(long trials, std::size_t n_dims) {
  return std::max<long>(1, trials / static_cast<long>(n_dims));
}

// Tracks the worst violation seen and the witness that produced it.
struct ViolationTracker {
  double max_violation = 0.0;
  std::optional<Witness> witness;

  void offer(double v, Witness w) {
    if (v > max_violation) {
      max_violation = v;
      witness = std::move(w);
    }
  }
};

// Orthonormal pair spanning a random 2D frame.
std::pair<StateVector, StateVector> haar_frame(Index dim, Rng& rng) {
  const StateVector u = haar_state(dim, rng);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const StateVector w = haar_state(dim, rng);
    Cvec res = w.amplitudes() - u.amplitudes() * u.amplitudes().dot(w.amplitudes());
    if (res.norm() > 1e-6) {
      return {u, StateVector::normalized(std::move(res))};
    }
  }
  throw Error("failed to sample an orthonormal frame");
}

StateVector frame_point(const StateVector& u, const StateVector& v, double theta) {
  return StateVector::normalized(std::cos(theta) * u.amplitudes() +
                                 std::sin(theta) * v.amplitudes());
}

// Unitary whose leading columns are the given orthonormal vectors, completed
// by Gram-Schmidt over the computational basis.
Cmat unitary_with_columns(Index dim, const std::vector<Cvec>& lead) {
  std::vector<Cvec> cols = lead;
  for (Index k = 0; k < dim && static_cast<Index>(cols.size()) < dim; ++k) {
    Cvec e = Cvec::Zero(dim);
    e(k) = Complex(1.0, 0.0);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Cvec& b : cols) {
        e -= b * b.dot(e);
      }
    }
    if (e.norm() > 1e-6) {
      cols.push_back(e.normalized());
    }
  }
  if (static_cast<Index>(cols.size()) != dim) {
    throw Error("failed to complete a unitary from the given columns");
  }
  Cmat u(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    u.col(j) = cols[static_cast<std::size_t>(j)];
  }
  return u;
}

Cmat kron(const Cmat& a, const Cmat& b) {
  Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Uniform-coefficient Schmidt-phase family member sum_i sqrt(1/k) e^{i t_i} |ii>.
StateVector schmidt_phase_state(Index dim_a, Index dim_b, const std::vector<double>& phases) {
  const Index k = std::min(dim_a, dim_b);
  Cvec v = Cvec::Zero(dim_a * dim_b);
  const double coeff = 1.0 / std::sqrt(static_cast<double>(k));
  for (Index i = 0; i < k; ++i) {
    v(i * dim_b + i) = std::polar(coeff, phases[static_cast<std::size_t>(i)]);
  }
  return StateVector::normalized(std::move(v));
}

StateVector embedded_plus(Index dim, int sign) {
  Cvec v = Cvec::Zero(dim);
  const double c = 1.0 / std::sqrt(2.0);
  v(0) = Complex(c, 0.0);
  v(1) = Complex(sign * c, 0.0);
  return StateVector(std::move(v));
}

// Identity with a Hadamard block on the first two coordinates.
Cmat embedded_hadamard(Index dim) {
  Cmat u = Cmat::Identity(dim, dim);
  const double c = 1.0 / std::sqrt(2.0);
  u(0, 0) = Complex(c, 0.0);
  u(0, 1) = Complex(c, 0.0);
  u(1, 0) = Complex(c, 0.0);
  u(1, 1) = Complex(-c, 0.0);
  return u;
}

// Attempts to simultaneously diagonalize the effects; on success returns two
// eigenbasis columns whose balanced superpositions are indistinguishable to
// the measurement.
std::optional<std::pair<StateVector, StateVector>> commuting_collapse_pair(const Povm& p) {
  if (p.dim() < 2) return std::nullopt;
  Cmat w = Cmat::Zero(p.dim(), p.dim());
  for (std::size_t m = 0; m < p.outcomes(); ++m) {
    w += static_cast<double>(m + 1) * p.effects()[m];
  }
  Eigen::SelfAdjointEigenSolver<Cmat> es(w);
  const Cmat& v = es.eigenvectors();
  for (const Cmat& e : p.effects()) {
    Cmat d = v.adjoint() * e * v;
    d.diagonal().setZero();
    if (d.cwiseAbs().maxCoeff() > 1e-8) return std::nullopt;
  }
  const Cvec v0 = v.col(0);
  const Cvec v1 = v.col(1);
  const double c = 1.0 / std::sqrt(2.0);
  return std::make_pair(StateVector::normalized(c * (v0 + v1)),
                        StateVector::normalized(c * (v0 - v1)));
}

}  // namespace

const char* status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass: return "Pass";
    case AxiomStatus::Fail: return "Fail";
    case AxiomStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

const AxiomVerdict* ConformanceReport::find(Axiom a, const std::string& scope) const {
  for (const auto& v : verdicts) {
    if (v.axiom != a) continue;
    if (!scope.empty() && (!v.scope || *v.scope != scope)) continue;
    return &v;
  }
  return nullptr;
}

AxiomVerdict check_ray(const DistanceCandidate& c, const std::vector<Index>& dims,
                       long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::Ray;
  ViolationTracker track;
  const auto eff = effective_dims(c, dims);
  const long per_dim = per_dim_trials(trials, eff.size());
  long done = 0;
  for (Index dim : eff) {
    for (long t = 0; t < per_dim; ++t, ++done) {
      StateVector a = haar_state(dim, rng);
      StateVector b = t == 0 ? a : haar_state(dim, rng);
      // First trial per dimension probes the sign flip (-psi, psi).
      const double th1 = t == 0 ? kPi : rng.uniform(0.0, 2.0 * kPi);
      const double th2 = t == 0 ? 0.0 : rng.uniform(0.0, 2.0 * kPi);
      const double base = guarded_eval(c, a, b);
      const double shifted = guarded_eval(c, apply_phase(a, th1), apply_phase(b, th2));
      Witness w;
      w.state_a = a;
      w.state_b = b;
      w.phase_a = th1;
      w.phase_b = th2;
      track.offer(std::abs(shifted - base), std::move(w));
    }
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.max_violation < kPositivity) {
    verdict.status = AxiomStatus::Pass;
  } else {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  }
  return verdict;
}

AxiomVerdict check_unitary_invariance(const DistanceCandidate& c,
                                      const std::vector<Index>& dims, long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::UnitaryInvariance;
  ViolationTracker track;
  const auto eff = effective_dims(c, dims);
  const long per_dim = per_dim_trials(trials, eff.size());
  long done = 0;
  for (Index dim : eff) {
    for (long t = 0; t < per_dim; ++t, ++done) {
      StateVector a = haar_state(dim, rng);
      StateVector b = haar_state(dim, rng);
      Cmat u;
      if (t == 0 && c.context_povm && dim >= 2) {
        // A fixed measurement basis is blind to the Hadamard-rotated pair.
        a = StateVector::basis(dim, 0);
        b = StateVector::basis(dim, 1);
        u = embedded_hadamard(dim);
      } else if (c.bipartite) {
        u = kron(haar_unitary(c.bipartite->first, rng), haar_unitary(c.bipartite->second, rng));
      } else {
        u = haar_unitary(dim, rng);
      }
      const double base = guarded_eval(c, a, b);
      const double rotated = guarded_eval(c, apply_unitary(u, a), apply_unitary(u, b));
      Witness w;
      w.state_a = a;
      w.state_b = b;
      w.unitary = u;
      track.offer(std::abs(rotated - base), std::move(w));
    }
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.max_violation < kPositivity) {
    verdict.status = AxiomStatus::Pass;
  } else {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  }
  if (c.bipartite) verdict.scope = "local";
  return verdict;
}

AxiomVerdict check_unitary_invariance_global(const DistanceCandidate& c, long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::UnitaryInvariance;
  verdict.scope = "global";
  if (!c.bipartite) {
    verdict.status = AxiomStatus::NotApplicable;
    return verdict;
  }
  const Index da = c.bipartite->first;
  const Index db = c.bipartite->second;
  const Index dim = da * db;
  ViolationTracker track;
  long done = 0;
  for (long t = 0; t < std::max<long>(1, trials); ++t, ++done) {
    StateVector a = haar_state(dim, rng);
    StateVector b = haar_state(dim, rng);
    Cmat u;
    if (t == 0 && db >= 2 && std::min(da, db) >= 2) {
      // Rotate |00> onto a maximally entangled state while fixing |01>.
      const Index k = std::min(da, db);
      Cvec phi = Cvec::Zero(dim);
      for (Index i = 0; i < k; ++i) {
        phi(i * db + i) = Complex(1.0 / std::sqrt(static_cast<double>(k)), 0.0);
      }
      Cvec e01 = Cvec::Zero(dim);
      e01(1) = Complex(1.0, 0.0);
      u = unitary_with_columns(dim, {phi, e01});
      a = StateVector::basis(dim, 0);
      b = StateVector::basis(dim, 1);
    } else {
      u = haar_unitary(dim, rng);
    }
    const double base = guarded_eval(c, a, b);
    const double rotated = guarded_eval(c, apply_unitary(u, a), apply_unitary(u, b));
    Witness w;
    w.state_a = a;
    w.state_b = b;
    w.unitary = u;
    w.note = "global-unitary";
    track.offer(std::abs(rotated - base), std::move(w));
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.max_violation < kPositivity) {
    verdict.status = AxiomStatus::Pass;
  } else {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  }
  return verdict;
}

AxiomVerdict check_superposition(const DistanceCandidate& c, const std::vector<Index>& dims,
                                 long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::Superposition;
  ViolationTracker track;
  const auto eff = effective_dims(c, dims);
  const long per_dim = per_dim_trials(trials, eff.size());
  long done = 0;
  for (Index dim : eff) {
    if (dim < 2) continue;
    for (long t = 0; t < per_dim; ++t, ++done) {
      StateVector phi1 = embedded_plus(dim, +1);
      StateVector phi2 = embedded_plus(dim, -1);
      if (t != 0) {
        // Equal moduli, different relative phase on a random orthonormal pair.
        const auto [u, v] = haar_frame(dim, rng);
        const double m = rng.uniform(0.2, 0.8);
        const double s = std::sqrt(1.0 - m * m);
        const double p1 = rng.uniform(0.0, 2.0 * kPi);
        const double p2 = p1 + rng.uniform(0.3, 2.0 * kPi - 0.3);
        phi1 = StateVector::normalized(m * u.amplitudes() +
                                       std::polar(s, p1) * v.amplitudes());
        phi2 = StateVector::normalized(m * u.amplitudes() +
                                       std::polar(s, p2) * v.amplitudes());
      }
      if (overlap(phi1, phi2) >= 1.0 - 1e-6) continue;  // same ray; nothing to test
      const double value = guarded_eval(c, phi1, phi2);
      if (value <= kPositivity) {
        Witness w;
        w.state_a = phi1;
        w.state_b = phi2;
        w.note = "unseparated-superpositions";
        track.offer(d_fs(phi1, phi2), std::move(w));
      }
    }
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.witness) {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  } else {
    verdict.status = AxiomStatus::Pass;
  }
  return verdict;
}

AxiomVerdict check_nondegeneracy(const DistanceCandidate& c, const std::vector<Index>& dims,
                                 long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::NonDegeneracy;
  ViolationTracker track;
  const auto eff = effective_dims(c, dims);
  const long per_dim = per_dim_trials(trials, eff.size());
  long done = 0;

  auto probe_distinct = [&](const StateVector& a, const StateVector& b) {
    if (d_fs(a, b) <= kDistinctFs) return;
    const double value = guarded_eval(c, a, b);
    if (value <= kPositivity) {
      Witness w;
      w.state_a = a;
      w.state_b = b;
      w.note = "distinct-rays-at-zero-distance";
      track.offer(d_fs(a, b), std::move(w));
    }
  };

  for (Index dim : eff) {
    if (dim >= 2) {
      probe_distinct(embedded_plus(dim, +1), embedded_plus(dim, -1));
      ++done;
    }
    if (c.context_povm) {
      if (auto pair = commuting_collapse_pair(*c.context_povm)) {
        probe_distinct(pair->first, pair->second);
        ++done;
      }
    }
    for (long t = 0; t < per_dim; ++t, ++done) {
      if (t % 2 == 0) {
        // Re-phased identical ray must sit at zero.
        const StateVector a = haar_state(dim, rng);
        const StateVector b = apply_phase(a, rng.uniform(0.0, 2.0 * kPi));
        const double value = guarded_eval(c, a, b);
        if (value >= kPositivity) {
          Witness w;
          w.state_a = a;
          w.state_b = b;
          w.note = "identical-ray";
          track.offer(value, std::move(w));
        }
      } else {
        probe_distinct(haar_state(dim, rng), haar_state(dim, rng));
      }
    }
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.witness) {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  } else {
    verdict.status = AxiomStatus::Pass;
  }
  return verdict;
}

AxiomVerdict check_triangle(const DistanceCandidate& c, const std::vector<Index>& dims,
                            long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::Triangle;
  ViolationTracker track;
  const auto eff = effective_dims(c, dims);
  const long per_dim = per_dim_trials(trials, eff.size());
  long done = 0;
  for (Index dim : eff) {
    for (long t = 0; t < per_dim; ++t, ++done) {
      StateVector a = haar_state(dim, rng);
      StateVector b = haar_state(dim, rng);
      StateVector mid = haar_state(dim, rng);
      if (dim >= 2 && t % 2 == 1) {
        // Near-collinear triples along a geodesic stress subadditivity.
        const auto [u, v] = haar_frame(dim, rng);
        const double t1 = rng.uniform(0.0, kPi / 2.0);
        const double t2 = rng.uniform(0.0, kPi / 2.0 - t1);
        a = frame_point(u, v, 0.0);
        mid = frame_point(u, v, t1);
        b = frame_point(u, v, t1 + t2);
      }
      const double excess =
          guarded_eval(c, a, b) - guarded_eval(c, a, mid) - guarded_eval(c, mid, b);
      if (excess > 0.0) {
        Witness w;
        w.state_a = a;
        w.state_b = b;
        w.state_c = mid;
        track.offer(excess, std::move(w));
      }
    }
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.max_violation < kPositivity) {
    verdict.status = AxiomStatus::Pass;
  } else {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  }
  return verdict;
}

AxiomVerdict check_geodesic_additivity(const DistanceCandidate& c,
                                       const std::vector<Index>& dims, long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::GeodesicAdditivity;
  ViolationTracker track;
  const auto eff = effective_dims(c, dims);
  const long per_dim = per_dim_trials(trials, eff.size());
  long done = 0;
  for (Index dim : eff) {
    if (dim < 2) continue;
    for (long t = 0; t < per_dim; ++t, ++done) {
      StateVector u = StateVector::basis(dim, 0);
      StateVector v = StateVector::basis(dim, 1);
      double t1 = kPi / 4.0;
      double t2 = kPi / 4.0;
      if (t != 0) {
        auto frame = haar_frame(dim, rng);
        u = frame.first;
        v = frame.second;
        t1 = rng.uniform(0.0, kPi / 2.0);
        t2 = rng.uniform(0.0, kPi / 2.0 - t1);
      }
      const StateVector s0 = frame_point(u, v, 0.0);
      const StateVector s1 = frame_point(u, v, t1);
      const StateVector s2 = frame_point(u, v, t1 + t2);
      const double defect = std::abs(guarded_eval(c, s0, s2) - guarded_eval(c, s0, s1) -
                                     guarded_eval(c, s1, s2));
      Witness w;
      w.state_a = u;
      w.state_b = v;
      w.theta1 = t1;
      w.theta2 = t2;
      w.note = "geodesic-frame";
      track.offer(defect, std::move(w));
    }
  }
  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.max_violation < kPositivity) {
    verdict.status = AxiomStatus::Pass;
  } else {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
  }
  return verdict;
}

AxiomVerdict check_entanglement_awareness(const DistanceCandidate& c,
                                          const std::vector<std::pair<Index, Index>>& dims_ab,
                                          long trials, Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::EntanglementAwareness;
  std::vector<std::pair<Index, Index>> usable;
  for (const auto& [da, db] : dims_ab) {
    if (da < 2 || db < 2) continue;
    if (c.fixed_dim && da * db != *c.fixed_dim) continue;
    usable.emplace_back(da, db);
  }
  if (usable.empty()) {
    verdict.status = AxiomStatus::NotApplicable;
    return verdict;
  }

  bool separated = false;
  ViolationTracker track;  // worst unseparated pair, by ray distance
  long done = 0;
  const long per_pair = per_dim_trials(trials, usable.size());
  for (const auto& [da, db] : usable) {
    const Index k = std::min(da, db);
    for (long t = 0; t < per_pair; ++t, ++done) {
      std::vector<double> phases(static_cast<std::size_t>(k), 0.0);
      if (t == 0) {
        phases[1] = kPi;  // the (0, pi, 0, ...) family: Bell pair for k = 2
      } else {
        double spread = 0.0;
        for (int attempt = 0; attempt < 16 && spread < 0.3; ++attempt) {
          for (auto& p : phases) p = rng.uniform(0.0, 2.0 * kPi);
          spread = 0.0;
          for (std::size_t i = 1; i < phases.size(); ++i) {
            double d = std::fmod(std::abs(phases[i] - phases[0]), 2.0 * kPi);
            d = std::min(d, 2.0 * kPi - d);
            spread = std::max(spread, d);
          }
        }
      }
      const StateVector psi =
          schmidt_phase_state(da, db, std::vector<double>(static_cast<std::size_t>(k), 0.0));
      const StateVector phi = schmidt_phase_state(da, db, phases);

      // The family is marginal-preserving by construction; verify anyway.
      const BipartiteState bp(psi, da, db);
      const BipartiteState bq(phi, da, db);
      const double ma = (partial_trace(bp, Keep::A).entries() -
                         partial_trace(bq, Keep::A).entries()).cwiseAbs().maxCoeff();
      const double mb = (partial_trace(bp, Keep::B).entries() -
                         partial_trace(bq, Keep::B).entries()).cwiseAbs().maxCoeff();
      if (ma > 1e-10 || mb > 1e-10) {
        throw Error("Schmidt-phase family failed the identical-marginals check");
      }
      if (overlap(psi, phi) >= 1.0 - 1e-6) continue;
      const double value = guarded_eval(c, psi, phi);
      if (value > kPositivity) {
        separated = true;
      } else {
        Witness w;
        w.state_a = psi;
        w.state_b = phi;
        w.note = "identical-marginals-family";
        track.offer(d_fs(psi, phi), std::move(w));
      }
    }
  }
  verdict.trials = done;
  if (separated) {
    verdict.status = AxiomStatus::Pass;
    verdict.max_violation = 0.0;
  } else {
    verdict.status = AxiomStatus::Fail;
    verdict.max_violation = track.max_violation;
    verdict.counterexample = track.witness;
  }
  return verdict;
}

AxiomVerdict check_measurement_contextuality(const DistanceCandidate& c,
                                             const std::vector<Povm>& povms, long trials,
                                             Rng& rng) {
  AxiomVerdict verdict;
  verdict.axiom = Axiom::MeasurementContextuality;
  if (!c.context_tag || povms.empty()) {
    verdict.status = AxiomStatus::NotApplicable;
    return verdict;
  }
  const Povm& povm = povms.front();
  const Index dim = povm.dim();
  ViolationTracker track;
  long done = 0;

  auto probe = [&](const StateVector& a, const StateVector& b) {
    const double gap = (povm.probabilities(a) - povm.probabilities(b)).cwiseAbs().maxCoeff();
    const double value = guarded_eval(c, a, b);
    if (value <= kPositivity && gap > kPositivity) {
      Witness w;
      w.state_a = a;
      w.state_b = b;
      w.note = "zero-distance-but-distributions-differ";
      track.offer(gap, std::move(w));
    } else if (value > kPositivity && gap <= kPositivity) {
      Witness w;
      w.state_a = a;
      w.state_b = b;
      w.note = "separates-equal-distributions";
      track.offer(value, std::move(w));
    }
  };

  for (long t = 0; t < std::max<long>(1, trials); ++t, ++done) {
    probe(haar_state(dim, rng), haar_state(dim, rng));
  }

  if (auto pair = commuting_collapse_pair(povm)) {
    probe(pair->first, pair->second);
    ++done;
    if (!track.witness && overlap(pair->first, pair->second) < 1.0 - 1e-6) {
      Witness w;
      w.state_a = pair->first;
      w.state_b = pair->second;
      w.note = "collapse";
      verdict.collapse = std::move(w);
    }
  }

  verdict.trials = done;
  verdict.max_violation = track.max_violation;
  if (track.witness) {
    verdict.status = AxiomStatus::Fail;
    verdict.counterexample = track.witness;
    verdict.collapse.reset();
  } else {
    verdict.status = AxiomStatus::Pass;
  }
  return verdict;
}

ConformanceReport run_conformance(const DistanceCandidate& c, const HarnessConfig& config) {
  ConformanceReport report;
  report.candidate = c.name;
  report.seed = config.seed;
  report.dims = effective_dims(c, config.dims);
  const Rng root(config.seed);

  auto with_axiom_context = [&](int ordinal, const char* label, auto&& fn) -> AxiomVerdict {
    Rng rng = root.child(static_cast<std::uint64_t>(ordinal));
    try {
      return fn(rng);
    } catch (const CandidateError& e) {
      throw CandidateError(std::string(label) + " check: " + e.what(), e.input_echo);
    }
  };

  report.verdicts.push_back(with_axiom_context(
      0, "Ray", [&](Rng& r) { return check_ray(c, config.dims, config.trials, r); }));
  report.verdicts.push_back(with_axiom_context(1, "UnitaryInvariance", [&](Rng& r) {
    return check_unitary_invariance(c, config.dims, config.trials, r);
  }));
  if (c.bipartite) {
    // Reported alongside the local run; invariance under structure-preserving
    // unitaries is the claim, invariance under arbitrary ones is informative.
    report.verdicts.push_back(with_axiom_context(8, "UnitaryInvariance(global)", [&](Rng& r) {
      return check_unitary_invariance_global(c, config.trials, r);
    }));
  }
  report.verdicts.push_back(with_axiom_context(2, "Superposition", [&](Rng& r) {
    return check_superposition(c, config.dims, config.trials, r);
  }));
  report.verdicts.push_back(with_axiom_context(3, "NonDegeneracy", [&](Rng& r) {
    return check_nondegeneracy(c, config.dims, config.trials, r);
  }));
  report.verdicts.push_back(with_axiom_context(4, "Triangle", [&](Rng& r) {
    return check_triangle(c, config.dims, config.trials, r);
  }));
  report.verdicts.push_back(with_axiom_context(5, "GeodesicAdditivity", [&](Rng& r) {
    return check_geodesic_additivity(c, config.dims, config.trials, r);
  }));
  report.verdicts.push_back(with_axiom_context(6, "EntanglementAwareness", [&](Rng& r) {
    auto dims_ab = c.bipartite ? std::vector<std::pair<Index, Index>>{*c.bipartite}
                               : config.bipartite_dims;
    return check_entanglement_awareness(c, dims_ab, config.trials, r);
  }));
  report.verdicts.push_back(with_axiom_context(7, "MeasurementContextuality", [&](Rng& r) {
    std::vector<Povm> povms;
    if (c.context_povm) povms.push_back(*c.context_povm);
    return check_measurement_contextuality(c, povms, config.trials, r);
  }));

  auto passed = [&](Axiom a, const std::string& scope = "") {
    const AxiomVerdict* v = report.find(a, scope);
    return v != nullptr && v->status == AxiomStatus::Pass;
  };
  const std::string unitary_scope = c.bipartite ? "local" : "";
  const bool distance = passed(Axiom::Ray) && passed(Axiom::UnitaryInvariance, unitary_scope) &&
                        passed(Axiom::Superposition);
  if (distance) report.flags.push_back("QuantumInspiredDistance");
  if (distance && passed(Axiom::NonDegeneracy) && passed(Axiom::Triangle)) {
    report.flags.push_back("QuantumInspiredMetric");
  }
  // The entanglement-aware classification is reserved for candidates defined
  // over a declared bipartite split; the verdict itself is recorded for all.
  if (c.bipartite && passed(Axiom::EntanglementAwareness)) {
    report.flags.push_back("EntanglementAware");
  }
  if (passed(Axiom::MeasurementContextuality)) {
    report.flags.push_back("MeasurementContextual");
  }
  return report;
}

double violation_from_witness(const DistanceCandidate& c, Axiom axiom, const Witness& w) {
  switch (axiom) {
    case Axiom::Ray: {
      const double base = guarded_eval(c, *w.state_a, *w.state_b);
      const double shifted = guarded_eval(c, apply_phase(*w.state_a, w.phase_a.value_or(0.0)),
                                          apply_phase(*w.state_b, w.phase_b.value_or(0.0)));
      return std::abs(shifted - base);
    }
    case Axiom::UnitaryInvariance: {
      const double base = guarded_eval(c, *w.state_a, *w.state_b);
      const double rotated = guarded_eval(c, apply_unitary(*w.unitary, *w.state_a),
                                          apply_unitary(*w.unitary, *w.state_b));
      return std::abs(rotated - base);
    }
    case Axiom::Superposition:
    case Axiom::EntanglementAwareness: {
      const double value = guarded_eval(c, *w.state_a, *w.state_b);
      return value <= kPositivity ? d_fs(*w.state_a, *w.state_b) : 0.0;
    }
    case Axiom::NonDegeneracy: {
      const double value = guarded_eval(c, *w.state_a, *w.state_b);
      if (w.note && *w.note == "identical-ray") return value;
      return value <= kPositivity ? d_fs(*w.state_a, *w.state_b) : 0.0;
    }
    case Axiom::Triangle: {
      return std::max(0.0, guarded_eval(c, *w.state_a, *w.state_b) -
                               guarded_eval(c, *w.state_a, *w.state_c) -
                               guarded_eval(c, *w.state_c, *w.state_b));
    }
    case Axiom::GeodesicAdditivity: {
      const StateVector s0 = frame_point(*w.state_a, *w.state_b, 0.0);
      const StateVector s1 = frame_point(*w.state_a, *w.state_b, *w.theta1);
      const StateVector s2 = frame_point(*w.state_a, *w.state_b, *w.theta1 + *w.theta2);
      return std::abs(guarded_eval(c, s0, s2) - guarded_eval(c, s0, s1) -
                      guarded_eval(c, s1, s2));
    }
    case Axiom::MeasurementContextuality: {
      if (!c.context_povm) return 0.0;
      const double gap = (c.context_povm->probabilities(*w.state_a) -
                          c.context_povm->probabilities(*w.state_b))
                             .cwiseAbs()
                             .maxCoeff();
      const double value = guarded_eval(c, *w.state_a, *w.state_b);
      if (w.note && *w.note == "separates-equal-distributions") return value;
      return value <= kPositivity ? gap : 0.0;
    }
  }
  return 0.0;
}

double max_symmetry_violation(const DistanceCandidate& c, const std::vector<Index>& dims,
                              long trials, Rng& rng) {
  double worst = 0.0;
  const auto eff = effective_dims(c, dims);
  for (Index dim : eff) {
    for (long t = 0; t < per_dim_trials(trials, eff.size()); ++t) {
      const StateVector a = haar_state(dim, rng);
      const StateVector b = haar_state(dim, rng);
      worst = std::max(worst, std::abs(guarded_eval(c, a, b) - guarded_eval(c, b, a)));
    }
  }
  return worst;
}

namespace {

void append_witness_json(std::ostringstream& out, const char* key, const Witness& w) {
  out << "\"" << key << "\": {";
  bool first = true;
  auto sep = [&] {
    if (!first) out << ", ";
    first = false;
  };
  if (w.state_a) {
    sep();
    out << "\"stateA\": " << io::state_to_json(*w.state_a);
  }
  if (w.state_b) {
    sep();
    out << "\"stateB\": " << io::state_to_json(*w.state_b);
  }
  if (w.state_c) {
    sep();
    out << "\"stateC\": " << io::state_to_json(*w.state_c);
  }
  if (w.phase_a) {
    sep();
    out << "\"phaseA\": " << io::format_double(*w.phase_a);
  }
  if (w.phase_b) {
    sep();
    out << "\"phaseB\": " << io::format_double(*w.phase_b);
  }
  if (w.unitary) {
    sep();
    out << "\"unitary\": " << io::cmat_to_json(*w.unitary);
  }
  if (w.theta1) {
    sep();
    out << "\"theta1\": " << io::format_double(*w.theta1);
  }
  if (w.theta2) {
    sep();
    out << "\"theta2\": " << io::format_double(*w.theta2);
  }
  if (w.note) {
    sep();
    out << "\"note\": \"" << io::escape_json(*w.note) << "\"";
  }
  out << "}";
}

}  // namespace

std::string report_to_json(const ConformanceReport& report) {
  std::ostringstream out;
  out << "{\"candidate\": \"" << io::escape_json(report.candidate) << "\", \"seed\": "
      << report.seed << ", \"dims\": [";
  for (std::size_t i = 0; i < report.dims.size(); ++i) {
    if (i) out << ", ";
    out << report.dims[i];
  }
  out << "], \"verdicts\": [";
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const AxiomVerdict& v = report.verdicts[i];
    if (i) out << ", ";
    out << "{\"axiom\": \"" << axiom_name(v.axiom) << "\"";
    if (v.scope) out << ", \"scope\": \"" << *v.scope << "\"";
    out << ", \"status\": \"" << status_name(v.status) << "\", \"trials\": " << v.trials
        << ", \"maxViolation\": " << io::format_double(v.max_violation);
    if (v.counterexample) {
      out << ", ";
      append_witness_json(out, "counterexample", *v.counterexample);
    }
    if (v.collapse) {
      out << ", ";
      append_witness_json(out, "collapseWitness", *v.collapse);
    }
    out << "}";
  }
  out << "], \"flags\": [";
  for (std::size_t i = 0; i < report.flags.size(); ++i) {
    if (i) out << ", ";
    out << "\"" << report.flags[i] << "\"";
  }
  out << "]}";
  return out.str();
}

}  // namespace qmetric
