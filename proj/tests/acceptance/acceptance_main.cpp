// Copyright 2026 The qzoo Authors
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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qzoo/classify.hpp"
#include "qzoo/measures.hpp"
#include "qzoo/random.hpp"
#include "qzoo/zoo.hpp"
#include "qzoo_cli/app.hpp"

namespace {

using namespace qzoo;

// Tolerances.
constexpr double kPureTol = 1e-4;          // q_rel(Bell) = 1
constexpr double kPureTolLoose = 1e-3;     // log2(3), q_pure vs q_rel
constexpr double kBB84Tol = 1e-3;          // q_rel(rho0) = 0.5, q_schmidt = 0.6009
constexpr double kGridTol = 2e-3;          // grid oracle vs 0.5
constexpr double kBasisOverlap = 1 - 1e-3;  // argmin basis vs candidates
constexpr double kWernerEigTol = 1e-9;
constexpr double kUpbOverlap = 0.999;
constexpr double kClassicalZero = 1e-6;
constexpr double kNonclassicalFloor = 1e-3;
constexpr double kInvariance = 2e-4;
constexpr double kGibbsTol = 1e-9;
constexpr double kForgetTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

DimensionProfile two_qubits() { return DimensionProfile({2, 2}); }

DensityMatrix pure(const DimensionProfile& p, const CVector& v) {
  return PureStateVector(p, v).projector();
}

DensityMatrix param_state(const std::string& name, const std::string& key, const std::string& v) {
  return build(name, {{key, v}}).state;
}

// Columns of `b` each match some column of `candidate` up to phase.
bool same_basis(const CMatrix& b, const CMatrix& candidate, double floor) {
  const Eigen::MatrixXd overlap = (candidate.adjoint() * b).cwiseAbs();
  return overlap.colwise().maxCoeff().minCoeff() >= floor;
}

void ac1(Outcome& o) {
  const double bell = q_rel(build("bell_phi_plus").state).value;
  o.require(std::abs(bell - 1.0) <= kPureTol, "q_rel(Bell)");
  const double me3 = q_rel(param_state("max_entangled", "d", "3")).value;
  o.require(std::abs(me3 - std::log2(3.0)) <= kPureTolLoose, "q_rel(max_entangled(3))");

  Rng rng = make_rng(101);
  double worst = 0.0;
  const auto p = two_qubits();
  for (int i = 0; i < 20; ++i) {
    const CVector v = random_unit_vector(4, rng);
    const double closed = q_pure(PureStateVector(p, v), Bipartition::first_subsystem(p)).value;
    worst = std::max(worst, std::abs(closed - q_rel(pure(p, v)).value));
  }
  o.require(worst <= kPureTolLoose, "q_pure vs q_rel");
  o.detail << "q_rel(Bell)=" << bell << " q_rel(ME3)=" << me3 << " log2(3)=" << std::log2(3.0)
           << " max|q_pure-q_rel| over 20=" << worst;
}

void ac2(Outcome& o) {
  const auto rho0 = build("bb84_rho0").state;
  // Oracle before optimizer.
  const auto grid = testing::grid_minimum(rho0.matrix(), std::numbers::pi / 40,
                                          std::numbers::pi / 400, 16);
  o.require(std::abs(grid.value - 0.5) <= kGridTol, "grid oracle");

  const auto q = q_rel(rho0);
  o.require(std::abs(q.value - 0.5) <= kBB84Tol, "q_rel(rho0)");
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix had(2, 2);
  had << h, h, h, -h;
  const auto p = two_qubits();
  const CMatrix cc = ClassicalBasis::computational(p).product_matrix();
  const CMatrix ch =
      ClassicalBasis(p, {LocalBasis::computational(2), LocalBasis(had)}).product_matrix();
  const CMatrix b = q.argmin_basis.product_matrix();
  const bool basis_ok = same_basis(b, cc, kBasisOverlap) || same_basis(b, ch, kBasisOverlap);
  o.require(basis_ok, "argmin basis");

  const double qs = q_schmidt(rho0, Bipartition::first_subsystem(p));
  o.require(std::abs(qs - 0.6009) <= kBB84Tol, "q_schmidt(rho0)");
  o.require(q.value < qs, "q_rel < q_schmidt");
  o.detail << "grid=" << grid.value << " (" << grid.evaluations << " evals) q_rel=" << q.value
           << " q_schmidt=" << qs << " basis=" << (basis_ok ? "match" : "mismatch");
}

void ac3(Outcome& o) {
  const auto p = two_qubits();
  const auto cut = Bipartition::first_subsystem(p);
  for (const char* eps : {"-1/3", "-0.1", "0.1", "1/3"}) {
    const auto w = param_state("werner", "eps", eps);
    const std::string tag = std::string("eps=") + eps;
    o.require(is_classical(w).decision == Decision::No, tag + " not classical");
    const auto ppt = is_ppt(w, cut);
    o.require(ppt.ppt && ppt.separability == Separability::Separable, tag + " PPT-separable");
    o.require(is_cpb_state(w).decision == Decision::No, tag + " not CPB");
  }
  o.require(is_classical(param_state("werner", "eps", "0")).decision == Decision::Yes,
            "eps=0 classical");
  const auto half = is_ppt(param_state("werner", "eps", "0.5"), cut);
  o.require(!half.ppt && half.separability == Separability::Entangled, "eps=0.5 NPT");
  o.require(std::abs(half.min_eigenvalue - (1.0 - 3.0 * 0.5) / 4.0) <= kWernerEigTol,
            "eps=0.5 min eigenvalue");
  o.detail << "eps=0.5 min PT eigenvalue=" << half.min_eigenvalue;
}

void ac4(Outcome& o) {
  Rng rng = make_rng(404);
  const auto p = two_qubits();
  std::vector<DensityMatrix> states;
  for (int i = 0; i < 10; ++i) states.push_back(testing::random_classical_state(p, rng));
  for (int i = 0; i < 10; ++i) states.push_back(testing::random_state(p, rng));
  int mismatches = 0, classical = 0;
  for (const auto& rho : states) {
    const Decision base = is_classical(rho).decision;
    if (base == Decision::Yes) ++classical;
    for (double eps : {0.01, 0.5})
      if (is_classical(pps(rho, eps)).decision != base) ++mismatches;
  }
  o.require(classical == 10, "10 classical bases recognized");
  o.require(mismatches == 0, "zero mismatches");
  o.detail << "classical=" << classical << "/20 mismatches=" << mismatches << "/40";
}

void ac5(Outcome& o) {
  const auto upb = build("rho_upb").state;
  o.require(is_upb_state(upb).decision == Decision::Yes, "rho_upb is a UPB state");
  o.require(is_classical(upb).decision == Decision::No, "rho_upb not classical");

  const auto shifts = shifts_upb();
  const CMatrix v = shifts.matrix();
  const auto n = static_cast<Eigen::Index>(shifts.profile().total());
  const CMatrix complement = CMatrix::Identity(n, n) - v * v.adjoint();
  ProductSearchConfig config;
  config.restarts = 64;
  config.stop_at_first_hit = false;
  const auto search = subspace_contains_product_state(complement, shifts.profile(), config);
  o.require(search.decision == Decision::No, "no product state in complement");
  o.require(search.best_overlap <= kUpbOverlap, "best overlap");

  const auto be = build("bound_entangled").state;
  bool all_ppt = true;
  for (std::size_t k = 0; k < 3; ++k) all_ppt = all_ppt && is_ppt(be, Bipartition(be.profile(), {k})).ppt;
  o.require(all_ppt, "bound_entangled PPT on all cuts");
  o.require(is_classical(be).decision == Decision::No, "bound_entangled not classical");
  o.detail << "complement best overlap=" << search.best_overlap << " over "
           << search.restarts_used << " restarts";
}

void ac6(Outcome& o) {
  for (const char* name : {"bb84_rho0", "bb84_rho1", "nlwe_state", "qubit_qutrit_cpb"}) {
    const auto e = build(name);
    const auto r = classify_zoo(e.state);
    const bool ok = r.verdict == ZooClass::CPBNonclassical && r.definite && r.cpb &&
                    r.cpb->certified && r.cpb->witness && r.cpb->witness->complete();
    o.require(ok, name);
    o.detail << name << "=" << to_string(r.verdict) << " ";
  }
  const auto qq = build("qubit_qutrit_cpb").state.profile();
  o.require(qq.size() == 2 && qq.dim(0) == 2 && qq.dim(1) == 3, "qubit_qutrit dims [2,3]");
}

// Class within CPB within SEP, checked per state from independent calls.
bool hierarchy_holds(const DensityMatrix& rho, std::string& why) {
  const auto c = is_classical(rho).decision;
  const auto cpb = is_cpb_state(rho).decision;
  bool npt = false;
  const auto& prof = rho.profile();
  if (prof.size() >= 2)
    for (std::size_t k = 0; k < prof.size(); ++k) npt = npt || !is_ppt(rho, Bipartition(prof, {k})).ppt;
  const auto report = classify_zoo(rho);
  if (c == Decision::Yes && cpb == Decision::No) why = "classical but not CPB";
  else if (cpb == Decision::Yes && npt) why = "CPB but NPT";
  else if (report.verdict == ZooClass::Classical && c != Decision::Yes) why = "verdict classical";
  else if (report.verdict == ZooClass::CPBNonclassical && cpb != Decision::Yes) why = "verdict CPB";
  else if (report.verdict == ZooClass::Entangled && (c == Decision::Yes || cpb == Decision::Yes))
    why = "verdict entangled";
  else return true;
  return false;
}

void ac7(Outcome& o) {
  int checked = 0, violations = 0;
  std::string why;
  for (const auto& info : list_catalog()) {
    ++checked;
    if (!hierarchy_holds(build(info.name).state, why)) {
      ++violations;
      o.require(false, info.name + ": " + why);
    }
  }
  Rng rng = make_rng(707);
  const std::vector<DimensionProfile> profiles{DimensionProfile({2, 2}), DimensionProfile({2, 3}),
                                               DimensionProfile({3, 3}), DimensionProfile({2, 2, 2})};
  for (int i = 0; i < 50; ++i) {
    const auto rho = testing::random_classical_state(profiles[static_cast<std::size_t>(i) % 4], rng);
    ++checked;
    if (is_classical(rho).decision != Decision::Yes || !hierarchy_holds(rho, why)) {
      ++violations;
      o.require(false, "random classical #" + std::to_string(i));
    }
  }
  o.detail << checked << " states, " << violations << " violations";
}

void ac8(Outcome& o) {
  double worst_classical = 0.0, least_nonclassical = 1e9;
  for (const auto& info : list_catalog()) {
    const auto e = build(info.name);
    if (!e.expected_verdict) continue;
    const double q = q_rel(e.state).value;
    if (*e.expected_verdict == ZooClass::Classical) {
      worst_classical = std::max(worst_classical, q);
      o.require(q <= kClassicalZero, info.name + " q_rel = 0");
    } else {
      least_nonclassical = std::min(least_nonclassical, q);
      o.require(q > kNonclassicalFloor, info.name + " q_rel > 0");
    }
  }
  Rng rng = make_rng(808);
  double drift = 0.0;
  for (const auto& rho : {build("bb84_rho0").state, param_state("werner", "eps", "0.2")}) {
    const double base = q_rel(rho).value;
    for (int i = 0; i < 20; ++i) {
      const CMatrix u = testing::random_local_unitary(rho.profile(), rng);
      drift = std::max(drift, std::abs(q_rel(testing::conjugate(rho, u)).value - base));
    }
  }
  o.require(drift <= kInvariance, "local unitary invariance");
  o.detail << "max classical q_rel=" << worst_classical
           << " min nonclassical q_rel=" << least_nonclassical << " max LU drift=" << drift;
}

void ac9(Outcome& o) {
  Rng rng = make_rng(909);
  const std::vector<DimensionProfile> profiles{DimensionProfile({2, 2}), DimensionProfile({2, 3})};
  double worst_gap = 0.0, worst_eq = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto& p = profiles[static_cast<std::size_t>(i) % 2];
    const auto rho = testing::random_state(p, rng);
    std::vector<LocalBasis> local;
    for (std::size_t k = 0; k < p.size(); ++k) local.emplace_back(haar_unitary(p.dim(k), rng));
    const ClassicalBasis basis(p, local);
    const CMatrix v = basis.product_matrix();
    const auto probs = random_probabilities(p.total(), rng);
    const auto n = static_cast<Eigen::Index>(p.total());
    Eigen::VectorXd pv(n), gibbs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      pv(k) = probs[static_cast<std::size_t>(k)];
      gibbs(k) = (v.col(k).adjoint() * rho.matrix() * v.col(k))(0).real();
    }
    auto sigma = [&](const Eigen::VectorXd& d) {
      return validate_density(v * d.cast<Complex>().asDiagonal() * v.adjoint(), p);
    };
    const double gap = dephasing_gap(rho, basis);
    const double s = relative_entropy(rho, sigma(pv));
    worst_gap = std::max(worst_gap, gap - s);
    worst_eq = std::max(worst_eq, std::abs(relative_entropy(rho, sigma(gibbs)) - gap));
  }
  o.require(worst_gap <= kGibbsTol, "S(rho||sigma_p) >= gap");
  o.require(worst_eq <= kGibbsTol, "equality at Gibbs weights");
  o.detail << "max(gap - S)=" << worst_gap << " max|S_gibbs - gap|=" << worst_eq;
}

void ac10(Outcome& o) {
  const auto demo = forgetting_demo();
  const double diff =
      (demo.output.matrix() - build("bb84_rho0").state.matrix()).cwiseAbs().maxCoeff();
  o.require(diff <= kForgetTol, "output equals bb84_rho0");
  o.require(is_classical(demo.source.state).decision == Decision::Yes, "source classical");
  o.require(is_classical(demo.output).decision == Decision::No, "output nonclassical");
  o.detail << "max|output - rho0|=" << diff << " channel: " << demo.channel;
}

void ac11(Outcome& o) {
  const std::vector<std::vector<std::string>> commands{
      {"classify", "zoo:bb84_rho0"},
      {"classify", "zoo:rho_upb", "--seed", "9"},
      {"classify", "zoo:werner"},
      {"measure", "zoo:bb84_rho0", "--measure", "qrel"},
      {"measure", "zoo:bb84_rho0", "--measure", "qschmidt"},
      {"measure", "zoo:rho_upb", "--measure", "qschmidt", "--cut", "0"},
      {"zoo", "list"},
      {"zoo", "emit", "nlwe_state"},
  };
  int identical = 0;
  for (const auto& c : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(c, a, ea);
    const int cb = cli::run(c, b, eb);
    const bool same = ca == cb && a.str() == b.str() && ea.str() == eb.str();
    if (same) ++identical;
    std::string joined;
    for (const auto& s : c) joined += s + " ";
    o.require(same, joined);
  }
  o.detail << identical << "/" << commands.size() << " commands byte-identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},  {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %s (%.2fs) %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
