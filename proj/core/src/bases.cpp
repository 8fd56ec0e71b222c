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

#include "qzoo/bases.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qzoo/error.hpp"

namespace qzoo {

// ---------------------------------------------------------------------------
// Basis types

LocalBasis::LocalBasis(CMatrix columns, bool canonical_phases) : vectors_(std::move(columns)) {
  if (vectors_.rows() != vectors_.cols() || vectors_.rows() == 0) {
    throw Error(ErrorCode::InvalidBasis, "a local basis needs d vectors of length d");
  }
  const double err =
      (vectors_.adjoint() * vectors_ - CMatrix::Identity(vectors_.cols(), vectors_.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (err > tol::kOrtho) {
    throw Error(ErrorCode::InvalidBasis,
                "local basis is not orthonormal (Gram error " + std::to_string(err) + ")",
                err);
  }
  if (canonical_phases) {
    for (Eigen::Index i = 0; i < vectors_.cols(); ++i) canonicalize_phase(vectors_.col(i));
  }
}

LocalBasis LocalBasis::computational(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return LocalBasis(CMatrix::Identity(n, n));
}

ClassicalBasis::ClassicalBasis(DimensionProfile profile, std::vector<LocalBasis> local)
    : profile_(std::move(profile)), local_(std::move(local)) {
  if (local_.size() != profile_.size()) {
    throw Error(ErrorCode::ProfileMismatch, "need one local basis per subsystem");
  }
  for (std::size_t k = 0; k < local_.size(); ++k) {
    if (local_[k].dim() != profile_.dim(k)) {
      throw Error(ErrorCode::ProfileMismatch,
                  "local basis " + std::to_string(k) + " has the wrong dimension");
    }
  }
}

ClassicalBasis ClassicalBasis::computational(const DimensionProfile& profile) {
  std::vector<LocalBasis> local;
  for (std::size_t d : profile.dims()) local.push_back(LocalBasis::computational(d));
  return ClassicalBasis(profile, std::move(local));
}

CMatrix ClassicalBasis::product_matrix() const {
  std::vector<CMatrix> mats;
  mats.reserve(local_.size());
  for (const auto& b : local_) mats.push_back(b.vectors());
  return kron(std::span<const CMatrix>(mats));
}

ProductBasisSet::ProductBasisSet(DimensionProfile profile, std::vector<ProductVector> elements,
                                 double tol)
    : profile_(std::move(profile)), elements_(std::move(elements)) {
  if (elements_.size() > profile_.total()) {
    throw Error(ErrorCode::InvalidBasis, "more product vectors than the dimension");
  }
  for (auto& e : elements_) {
    if (e.factors.size() != profile_.size()) {
      throw Error(ErrorCode::ProfileMismatch, "product vector has the wrong number of factors");
    }
    for (std::size_t k = 0; k < e.factors.size(); ++k) {
      if (e.factors[k].size() != static_cast<Eigen::Index>(profile_.dim(k))) {
        throw Error(ErrorCode::ProfileMismatch, "local factor has the wrong dimension");
      }
      const double norm = e.factors[k].norm();
      if (std::abs(norm - 1.0) > tol) {
        throw Error(ErrorCode::InvalidBasis, "local factor is not normalized", norm);
      }
    }
  }
  const CMatrix m = matrix();
  const double err =
      (m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw Error(ErrorCode::InvalidBasis,
                "product vectors are not orthonormal (Gram error " + std::to_string(err) + ")",
                err);
  }
}

CMatrix ProductBasisSet::matrix() const {
  CMatrix m(static_cast<Eigen::Index>(profile_.total()),
            static_cast<Eigen::Index>(elements_.size()));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = elements_[i].vector();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Product vectors

ProductTest is_product_vector(const PureStateVector& psi, double tol) {
  return is_product_vector(psi.amplitudes(), psi.profile(), tol);
}

ProductTest is_product_vector(const CVector& amplitudes, const DimensionProfile& profile,
                              double tol) {
  if (amplitudes.size() != static_cast<Eigen::Index>(profile.total())) {
    throw Error(ErrorCode::DimensionMismatch, "vector does not match profile");
  }
  ProductTest out;
  std::vector<CVector> factors;
  CVector rest = amplitudes;
  for (std::size_t k = 0; k + 1 < profile.size(); ++k) {
    const auto d = static_cast<Eigen::Index>(profile.dim(k));
    const Eigen::Index r = rest.size() / d;
    CMatrix m(d, r);
    for (Eigen::Index i = 0; i < d; ++i) m.row(i) = rest.segment(i * r, r).transpose();
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVector& s = svd.singularValues();
    const double second = s.size() > 1 ? s[1] : 0.0;
    out.residual = std::max(out.residual, second);
    if (second > tol) return out;

    CVector u = svd.matrixU().col(0);
    CVector v = svd.matrixV().col(0).conjugate() * s[0];
    // Move u's phase convention onto the remainder.
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double mag = std::abs(u[i]);
      if (mag > tol::kPhaseComponent) {
        const Complex phase = std::conj(u[i]) / mag;
        u *= phase;
        v /= phase;
        break;
      }
    }
    factors.push_back(u);
    rest = v;
  }
  const double norm = rest.norm();
  if (norm == 0.0) return out;
  factors.push_back(canonical_phase(rest / norm));
  out.is_product = true;
  out.factors = std::move(factors);
  return out;
}

// ---------------------------------------------------------------------------
// Classical basis recognition

namespace {

enum class OverlapClass { Same, Orthogonal, Ambiguous, Overlapping };

OverlapClass classify_overlap(double ov) {
  if (ov >= 1.0 - tol::kCluster) return OverlapClass::Same;
  if (ov <= tol::kCluster) return OverlapClass::Orthogonal;
  if (ov < tol::kAmbiguousBand || ov > 1.0 - tol::kAmbiguousBand) {
    return OverlapClass::Ambiguous;
  }
  return OverlapClass::Overlapping;
}

BasisFailure failure(BasisFailureKind kind, std::string message) {
  BasisFailure f{};
  f.kind = kind;
  f.message = std::move(message);
  return f;
}

}  // namespace

ClassicalBasisCheck classical_basis_from_vectors(std::span<const CVector> vectors,
                                                 const DimensionProfile& profile) {
  ClassicalBasisCheck out;
  if (vectors.size() != profile.total()) {
    out.failure = failure(BasisFailureKind::WrongCount,
                          "expected " + std::to_string(profile.total()) + " vectors, got " +
                              std::to_string(vectors.size()));
    return out;
  }

  std::vector<std::vector<CVector>> factors(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto test = is_product_vector(vectors[i], profile);
    if (!test.is_product) {
      auto f = failure(BasisFailureKind::NotProductVector,
                       "vector " + std::to_string(i) + " is not a product vector");
      f.pair = {i, i};
      f.overlap = test.residual;
      out.failure = std::move(f);
      return out;
    }
    factors[i] = std::move(test.factors);
  }

  const std::size_t n = profile.size();
  std::vector<LocalBasis> local;
  // labels[i][k]: cluster of vector i's factor on subsystem k.
  std::vector<std::vector<std::size_t>> labels(vectors.size(), std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> reps;  // vector index that founded each cluster
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      std::optional<std::size_t> home;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        const double ov =
            std::abs(factors[reps[c]][k].dot(factors[i][k]));  // dot conjugates lhs
        switch (classify_overlap(ov)) {
          case OverlapClass::Same:
            home = c;
            break;
          case OverlapClass::Orthogonal:
            break;
          case OverlapClass::Ambiguous: {
            auto f = failure(BasisFailureKind::AmbiguousClustering,
                             "subsystem " + std::to_string(k) + ": factors of vectors " +
                                 std::to_string(reps[c]) + " and " + std::to_string(i) +
                                 " have near-tie overlap " + std::to_string(ov));
            f.subsystem = k;
            f.pair = {reps[c], i};
            f.overlap = ov;
            out.failure = std::move(f);
            return out;
          }
          case OverlapClass::Overlapping: {
            auto f = failure(BasisFailureKind::LocalFactorsNotOrthonormal,
                             "subsystem " + std::to_string(k) + ": factors of vectors " +
                                 std::to_string(reps[c]) + " and " + std::to_string(i) +
                                 " are neither equal nor orthogonal (overlap " +
                                 std::to_string(ov) + ")");
            f.subsystem = k;
            f.pair = {reps[c], i};
            f.overlap = ov;
            out.failure = std::move(f);
            return out;
          }
        }
      }
      if (!home) {
        home = reps.size();
        reps.push_back(i);
      }
      labels[i][k] = *home;
    }
    if (reps.size() != profile.dim(k)) {
      auto f = failure(BasisFailureKind::MissingCombination,
                       "subsystem " + std::to_string(k) + " has " + std::to_string(reps.size()) +
                           " distinct local factors, expected " +
                           std::to_string(profile.dim(k)));
      f.subsystem = k;
      out.failure = std::move(f);
      return out;
    }
    CMatrix cols(static_cast<Eigen::Index>(profile.dim(k)),
                 static_cast<Eigen::Index>(profile.dim(k)));
    for (std::size_t c = 0; c < reps.size(); ++c) {
      cols.col(static_cast<Eigen::Index>(c)) = factors[reps[c]][k];
    }
    // Orthogonality holds to kCluster; re-orthonormalize so LocalBasis accepts it.
    Eigen::HouseholderQR<CMatrix> qr(cols);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
      const double mag = std::abs(r(c, c));
      if (mag > 0.0) q.col(c) *= r(c, c) / mag;
    }
    local.emplace_back(std::move(q));
  }

  std::set<std::vector<std::size_t>> combos(labels.begin(), labels.end());
  if (combos.size() != vectors.size()) {
    out.failure = failure(BasisFailureKind::MissingCombination,
                          "local factors repeat a combination, so some product is missing");
    return out;
  }
  out.basis.emplace(profile, std::move(local));
  return out;
}

ClassicalBasisCheck classical_basis_from_vectors(std::span<const PureStateVector> vectors,
                                                 const DimensionProfile& profile) {
  std::vector<CVector> raw;
  raw.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.profile() != profile) {
      throw Error(ErrorCode::ProfileMismatch, "vector profile differs from target profile");
    }
    raw.push_back(v.amplitudes());
  }
  return classical_basis_from_vectors(std::span<const CVector>(raw), profile);
}

// ---------------------------------------------------------------------------
// Dephasing

RVector diagonal_in(const DensityMatrix& rho, const ClassicalBasis& basis) {
  if (rho.profile() != basis.profile()) {
    throw Error(ErrorCode::ProfileMismatch, "basis profile differs from state profile");
  }
  const CMatrix u = basis.product_matrix();
  return (u.adjoint() * rho.matrix() * u).diagonal().real();
}

DensityMatrix dephase(const DensityMatrix& rho, const ClassicalBasis& basis) {
  const RVector p = diagonal_in(rho, basis);
  const CMatrix u = basis.product_matrix();
  CMatrix out = u * p.cast<Complex>().asDiagonal() * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix::assume_valid(rho.profile(), std::move(out));
}

double off_diagonal_mass(const CMatrix& rho, const CMatrix& unitary) {
  CMatrix rotated = unitary.adjoint() * rho * unitary;
  rotated.diagonal().setZero();
  return rotated.norm();
}

// ---------------------------------------------------------------------------
// Schmidt machinery

SchmidtData schmidt_decompose_pure(const PureStateVector& psi, const Bipartition& cut) {
  const auto& profile = psi.profile();
  if (cut.subsystem_count() != profile.size()) {
    throw Error(ErrorCode::InvalidCut, "cut does not match the state's profile");
  }
  const auto order = cut.order();
  const CVector v = permute_subsystems(psi.amplitudes(), profile, order);
  const auto da = static_cast<Eigen::Index>(cut.dim_a());
  const auto db = static_cast<Eigen::Index>(cut.dim_b());
  CMatrix m(da, db);
  for (Eigen::Index i = 0; i < da; ++i) m.row(i) = v.segment(i * db, db).transpose();

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMatrix left = svd.matrixU();
  CMatrix right = svd.matrixV().conjugate();
  const RVector& s = svd.singularValues();
  const Eigen::Index r = s.size();
  for (Eigen::Index i = 0; i < left.cols(); ++i) {
    for (Eigen::Index j = 0; j < left.rows(); ++j) {
      const double mag = std::abs(left(j, i));
      if (mag > tol::kPhaseComponent) {
        const Complex phase = std::conj(left(j, i)) / mag;
        left.col(i) *= phase;
        if (i < r) right.col(i) /= phase;
        break;
      }
    }
  }
  for (Eigen::Index i = r; i < right.cols(); ++i) canonicalize_phase(right.col(i));

  SchmidtData out{{}, LocalBasis(std::move(left), false), LocalBasis(std::move(right), false)};
  out.coefficients.assign(s.data(), s.data() + r);
  return out;
}

DensityMatrix bipartite_view(const DensityMatrix& rho, const Bipartition& cut) {
  if (cut.subsystem_count() != rho.profile().size()) {
    throw Error(ErrorCode::InvalidCut, "cut does not match the state's profile");
  }
  const auto order = cut.order();
  return DensityMatrix::assume_valid(DimensionProfile({cut.dim_a(), cut.dim_b()}),
                                     permute_subsystems(rho.matrix(), rho.profile(), order));
}

SchmidtBasis schmidt_basis(const DensityMatrix& rho, const Bipartition& cut) {
  const DensityMatrix view = bipartite_view(rho, cut);
  const std::size_t keep_a[] = {0};
  const std::size_t keep_b[] = {1};
  const Spectrum sa = eig_hermitian(partial_trace_matrix(view.matrix(), view.profile(), keep_a));
  const Spectrum sb = eig_hermitian(partial_trace_matrix(view.matrix(), view.profile(), keep_b));
  std::vector<LocalBasis> local{LocalBasis(sa.vectors), LocalBasis(sb.vectors)};
  return SchmidtBasis{ClassicalBasis(view.profile(), std::move(local)),
                      sa.tie_break_applied || sb.tie_break_applied};
}

DensityMatrix schmidt_state(const DensityMatrix& rho, const Bipartition& cut) {
  const DensityMatrix view = bipartite_view(rho, cut);
  const SchmidtBasis sb = schmidt_basis(rho, cut);
  const DensityMatrix dephased = dephase(view, sb.basis);

  const auto order = cut.order();
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) inverse[order[j]] = j;
  const DimensionProfile permuted = rho.profile().select(order);
  return DensityMatrix::assume_valid(rho.profile(),
                                     permute_subsystems(dephased.matrix(), permuted, inverse));
}

}  // namespace qzoo
