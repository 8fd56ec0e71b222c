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

#include "qzoo/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "qzoo/error.hpp"
#include "qzoo/random.hpp"

namespace qzoo {

namespace {

constexpr std::size_t kScanPoints = 24;
constexpr double kGoldenTol = 1e-10;

double entropy_term(double p) {
  if (p <= 0.0) return 0.0;
  return -p * std::log2(p);
}

double value_from_diagonal(const RVector& diag, double frob2, LocalObjective objective) {
  if (objective == LocalObjective::OffDiagonalMass) {
    return std::sqrt(std::max(0.0, frob2 - diag.squaredNorm()));
  }
  double h = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) h += entropy_term(diag[i]);
  return h;
}

struct RotationPair {
  Eigen::Index a;
  Eigen::Index b;
};

// Index pairs that differ only in subsystem k, with digit p at a and q at b.
std::vector<RotationPair> rotation_pairs(const DimensionProfile& profile, std::size_t k,
                                         std::size_t p, std::size_t q) {
  std::vector<RotationPair> pairs;
  const std::size_t stride = profile.stride(k);
  const std::size_t d = profile.dim(k);
  const std::size_t block = d * stride;
  for (std::size_t hi = 0; hi < profile.total(); hi += block) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t base = hi + lo;
      pairs.push_back({static_cast<Eigen::Index>(base + p * stride),
                       static_cast<Eigen::Index>(base + q * stride)});
    }
  }
  return pairs;
}

class Descent {
 public:
  Descent(const CMatrix& rho, const DimensionProfile& profile, LocalObjective objective,
          std::vector<CMatrix> unitaries)
      : profile_(profile), objective_(objective), unitaries_(std::move(unitaries)) {
    const CMatrix u = kron(std::span<const CMatrix>(unitaries_));
    sigma_ = u.adjoint() * rho * u;
    frob2_ = rho.squaredNorm();
    for (std::size_t k = 0; k < profile_.size(); ++k) {
      for (std::size_t p = 0; p < profile_.dim(k); ++p) {
        for (std::size_t q = p + 1; q < profile_.dim(k); ++q) {
          coords_.push_back({k, p, q, rotation_pairs(profile_, k, p, q)});
        }
      }
    }
  }

  double value() const {
    return value_from_diagonal(sigma_.diagonal().real(), frob2_, objective_);
  }

  // One pass over all coordinates; returns the objective afterwards.
  double sweep() {
    for (const auto& c : coords_) {
      for (double phi : {0.0, std::numbers::pi / 2}) line_search(c, phi);
    }
    return value();
  }

  const std::vector<CMatrix>& unitaries() const { return unitaries_; }

 private:
  struct Coordinate {
    std::size_t k, p, q;
    std::vector<RotationPair> pairs;
  };

  // Contribution of the touched diagonal entries after rotating by theta.
  double trial(const Coordinate& c, const std::vector<double>& x, const std::vector<double>& y,
               const std::vector<double>& z, double theta) const {
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    double acc = 0.0;
    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
      const double cross = 2.0 * cs * sn * z[i];
      const double na = cs * cs * x[i] + sn * sn * y[i] + cross;
      const double nb = sn * sn * x[i] + cs * cs * y[i] - cross;
      if (objective_ == LocalObjective::OffDiagonalMass) {
        acc -= na * na + nb * nb;
      } else {
        acc += entropy_term(na) + entropy_term(nb);
      }
    }
    return acc;
  }

  void line_search(const Coordinate& c, double phi) {
    const Complex phase = std::polar(1.0, phi);
    std::vector<double> x(c.pairs.size()), y(c.pairs.size()), z(c.pairs.size());
    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
      x[i] = sigma_(c.pairs[i].a, c.pairs[i].a).real();
      y[i] = sigma_(c.pairs[i].b, c.pairs[i].b).real();
      z[i] = (phase * sigma_(c.pairs[i].a, c.pairs[i].b)).real();
    }
    auto f = [&](double theta) { return trial(c, x, y, z, theta); };

    const double pi = std::numbers::pi;
    const double step = pi / static_cast<double>(kScanPoints);
    const double f0 = f(0.0);
    double best_theta = 0.0;
    double best = f0;
    for (std::size_t j = 0; j < kScanPoints; ++j) {
      const double theta = -pi / 2 + static_cast<double>(j) * step;
      const double v = f(theta);
      if (v < best) {
        best = v;
        best_theta = theta;
      }
    }

    // Golden-section on [best - step, best + step].
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_theta - step;
    double hi = best_theta + step;
    double m1 = hi - inv_phi * (hi - lo);
    double m2 = lo + inv_phi * (hi - lo);
    double f1 = f(m1);
    double f2 = f(m2);
    while (hi - lo > kGoldenTol) {
      if (f1 < f2) {
        hi = m2;
        m2 = m1;
        f2 = f1;
        m1 = hi - inv_phi * (hi - lo);
        f1 = f(m1);
      } else {
        lo = m1;
        m1 = m2;
        f1 = f2;
        m2 = lo + inv_phi * (hi - lo);
        f2 = f(m2);
      }
    }
    const double theta = f1 < f2 ? m1 : m2;
    const double ft = std::min(f1, f2);
    const double chosen = ft < best ? theta : best_theta;
    if (std::min(ft, best) < f0 - 1e-15) rotate(c, chosen, phase);
  }

  void rotate(const Coordinate& c, double theta, Complex phase) {
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    const Complex g_qp = sn * phase;             // G(q,p)
    const Complex g_pq = -sn * std::conj(phase);  // G(p,q)
    for (const auto& pr : c.pairs) {
      const CVector ca = sigma_.col(pr.a);
      const CVector cb = sigma_.col(pr.b);
      sigma_.col(pr.a) = cs * ca + g_qp * cb;
      sigma_.col(pr.b) = g_pq * ca + cs * cb;
    }
    for (const auto& pr : c.pairs) {
      const Eigen::RowVectorXcd ra = sigma_.row(pr.a);
      const Eigen::RowVectorXcd rb = sigma_.row(pr.b);
      sigma_.row(pr.a) = cs * ra + std::conj(g_qp) * rb;
      sigma_.row(pr.b) = std::conj(g_pq) * ra + cs * rb;
    }
    CMatrix& u = unitaries_[c.k];
    const auto p = static_cast<Eigen::Index>(c.p);
    const auto q = static_cast<Eigen::Index>(c.q);
    const CVector up = u.col(p);
    const CVector uq = u.col(q);
    u.col(p) = cs * up + g_qp * uq;
    u.col(q) = g_pq * up + cs * uq;
  }

  const DimensionProfile& profile_;
  LocalObjective objective_;
  std::vector<CMatrix> unitaries_;
  CMatrix sigma_;
  double frob2_ = 0.0;
  std::vector<Coordinate> coords_;
};

struct RestartOutcome {
  std::vector<CMatrix> unitaries;
  double objective = 0.0;
  bool converged = false;
  std::size_t sweeps = 0;
};

RestartOutcome run_restart(const CMatrix& rho, const DimensionProfile& profile,
                           LocalObjective objective, const SearchConfig& config,
                           std::vector<CMatrix> start) {
  Descent descent(rho, profile, objective, std::move(start));
  RestartOutcome out;
  double current = descent.value();
  for (std::size_t s = 0; s < config.max_sweeps; ++s) {
    const double next = descent.sweep();
    ++out.sweeps;
    const bool small_step = current - next < config.sweep_tol;
    current = next;
    if (small_step) {
      out.converged = true;
      break;
    }
  }
  // Re-evaluate from scratch so accumulated rounding does not leak out.
  out.unitaries = descent.unitaries();
  out.objective = local_objective(rho, profile, out.unitaries, objective);
  return out;
}

}  // namespace

double local_objective(const CMatrix& rho, const DimensionProfile& profile,
                       std::span<const CMatrix> unitaries, LocalObjective objective) {
  if (unitaries.size() != profile.size()) {
    throw Error(ErrorCode::ProfileMismatch, "need one unitary per subsystem");
  }
  const CMatrix u = kron(unitaries);
  const CMatrix sigma = u.adjoint() * rho * u;
  return value_from_diagonal(sigma.diagonal().real(), rho.squaredNorm(), objective);
}

SearchResult minimize_over_local_unitaries(const CMatrix& rho, const DimensionProfile& profile,
                                           LocalObjective objective, const SearchConfig& config,
                                           std::span<const std::vector<CMatrix>> starts) {
  if (rho.rows() != static_cast<Eigen::Index>(profile.total()) || rho.cols() != rho.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix does not match profile");
  }
  for (const auto& s : starts) {
    if (s.size() != profile.size()) {
      throw Error(ErrorCode::ProfileMismatch, "start needs one unitary per subsystem");
    }
  }
  const std::size_t total = std::max<std::size_t>(config.restarts, starts.size());
  if (total == 0) throw Error(ErrorCode::InvalidArgument, "at least one restart is needed");

  auto start_for = [&](std::size_t r) {
    if (r < starts.size()) return starts[r];
    Rng rng = make_rng(config.seed, r);
    std::vector<CMatrix> us;
    for (std::size_t d : profile.dims()) us.push_back(haar_unitary(d, rng));
    return us;
  };

  std::vector<RestartOutcome> outcomes(total);
  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads,
                                                           static_cast<unsigned>(total)));
  if (workers == 1) {
    for (std::size_t r = 0; r < total; ++r) {
      outcomes[r] = run_restart(rho, profile, objective, config, start_for(r));
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < total; r += workers) {
          outcomes[r] = run_restart(rho, profile, objective, config, start_for(r));
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < total; ++r) {
    if (outcomes[r].objective < outcomes[best].objective) best = r;
  }
  SearchResult result;
  result.unitaries = std::move(outcomes[best].unitaries);
  result.objective = outcomes[best].objective;
  result.converged = outcomes[best].converged;
  result.best_restart = best;
  result.sweeps = outcomes[best].sweeps;
  result.restarts = total;
  return result;
}

}  // namespace qzoo
