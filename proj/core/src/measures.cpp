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

#include "qzoo/measures.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "qzoo/error.hpp"

namespace qzoo {

namespace {

constexpr double kSupportCutoff = 1e-12;

double shannon(const RVector& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) h -= p[i] * std::log2(p[i]);
  }
  return h;
}

RVector eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

void require_same_profile(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.profile() != b.profile()) {
    throw Error(ErrorCode::ProfileMismatch, "states have different dimension profiles");
  }
}

CMatrix psd_sqrt(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (h + h.adjoint()));
  const RVector roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double entropy(const DensityMatrix& rho) { return shannon(eigenvalues(rho.matrix())); }

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_profile(rho, sigma);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sigma.matrix());
  const RVector& s = solver.eigenvalues();
  const CMatrix& v = solver.eigenvectors();
  // tr rho log sigma = sum_k <v_k|rho|v_k> log s_k.
  double cross = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double weight = (v.col(k).adjoint() * rho.matrix() * v.col(k))(0).real();
    if (s[k] <= kSupportCutoff) {
      if (weight > kSupportCutoff) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(s[k]);
  }
  return std::max(0.0, -entropy(rho) - cross);
}

double dephasing_gap(const DensityMatrix& rho, const ClassicalBasis& basis) {
  if (rho.profile() != basis.profile()) {
    throw Error(ErrorCode::ProfileMismatch, "basis and state have different profiles");
  }
  return shannon(diagonal_in(rho, basis)) - entropy(rho);
}

QuantumnessResult q_rel(const DensityMatrix& rho, const SearchConfig& config) {
  const DimensionProfile& profile = rho.profile();
  std::vector<std::vector<CMatrix>> starts;
  {
    std::vector<CMatrix> marginal;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      const std::size_t keep[] = {k};
      marginal.push_back(eig_hermitian(partial_trace_matrix(rho.matrix(), profile, keep)).vectors);
    }
    starts.push_back(std::move(marginal));
    std::vector<CMatrix> ident;
    for (std::size_t d : profile.dims()) {
      ident.push_back(CMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    }
    starts.push_back(std::move(ident));
  }
  const SearchResult sr = minimize_over_local_unitaries(
      rho.matrix(), profile, LocalObjective::DiagonalEntropy, config, starts);

  std::vector<LocalBasis> local;
  for (const auto& u : sr.unitaries) local.emplace_back(u);
  ClassicalBasis basis(profile, std::move(local));
  DensityMatrix closest = dephase(rho, basis);
  const double value = std::max(0.0, dephasing_gap(rho, basis));
  return QuantumnessResult{value, std::move(closest), std::move(basis), sr.restarts,
                           sr.best_restart, sr.converged};
}

double distance(const DensityMatrix& rho, const DensityMatrix& sigma, DistanceKind kind) {
  require_same_profile(rho, sigma);
  switch (kind) {
    case DistanceKind::RelativeEntropy:
      return relative_entropy(rho, sigma);
    case DistanceKind::TraceDistance:
      return 0.5 * eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
    case DistanceKind::FidelityBased: {
      const CMatrix r = psd_sqrt(rho.matrix());
      const double f = eigenvalues(r * sigma.matrix() * r).cwiseMax(0.0).cwiseSqrt().sum();
      return std::max(0.0, 1.0 - f * f);
    }
  }
  return 0.0;
}

double q_schmidt(const DensityMatrix& rho, const Bipartition& cut, DistanceKind kind) {
  if (kind == DistanceKind::RelativeEntropy) {
    // Dephasing identity; avoids logs of near-zero eigenvalues of the target.
    const DensityMatrix view = bipartite_view(rho, cut);
    return std::max(0.0, dephasing_gap(view, schmidt_basis(rho, cut).basis));
  }
  return distance(rho, schmidt_state(rho, cut), kind);
}

PureQuantumness q_pure(const PureStateVector& psi, const Bipartition& cut) {
  if (cut.subsystem_count() != psi.profile().size()) {
    throw Error(ErrorCode::InvalidCut, "cut does not match the state's profile");
  }
  SchmidtData data = schmidt_decompose_pure(psi, cut);
  double value = 0.0;
  const auto n = static_cast<Eigen::Index>(psi.profile().total());
  CMatrix view = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < data.coefficients.size(); ++i) {
    const double p = data.coefficients[i] * data.coefficients[i];
    if (p > 0.0) value -= p * std::log2(p);
    const CVector v = kron(data.left.vector(i), data.right.vector(i));
    view += p * v * v.adjoint();
  }
  const auto order = cut.order();
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) inverse[order[j]] = j;
  const DimensionProfile permuted = psi.profile().select(order);
  DensityMatrix closest = DensityMatrix::assume_valid(
      psi.profile(), permute_subsystems(view, permuted, inverse));
  return PureQuantumness{value, std::move(closest), std::move(data)};
}

}  // namespace qzoo
