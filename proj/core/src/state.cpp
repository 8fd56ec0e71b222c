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

#include "qzoo/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qzoo/error.hpp"

namespace qzoo {

namespace {

std::string dims_string(std::span<const std::size_t> dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + "]";
}

// perm[old_index] = new_index when new subsystem j is old subsystem order[j].
std::vector<std::size_t> permutation_map(const DimensionProfile& profile,
                                         std::span<const std::size_t> order) {
  const std::size_t n = profile.size();
  if (order.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation has wrong length");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t k : order) {
    if (k >= n || seen[k]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation of subsystems");
    }
    seen[k] = true;
  }
  std::vector<std::size_t> new_dims(n);
  for (std::size_t j = 0; j < n; ++j) new_dims[j] = profile.dim(order[j]);
  const DimensionProfile permuted(new_dims);

  std::vector<std::size_t> perm(profile.total());
  std::vector<std::size_t> new_digits(n);
  for (std::size_t i = 0; i < profile.total(); ++i) {
    const auto old_digits = profile.digits(i);
    for (std::size_t j = 0; j < n; ++j) new_digits[j] = old_digits[order[j]];
    perm[i] = permuted.index(new_digits);
  }
  return perm;
}

std::vector<std::size_t> sorted_unique_subsystems(std::span<const std::size_t> subs,
                                                  std::size_t n) {
  std::vector<std::size_t> out(subs.begin(), subs.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "duplicate subsystem index");
  }
  for (std::size_t k : out) {
    if (k >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "subsystem index " + std::to_string(k) + " out of range");
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DimensionProfile

DimensionProfile::DimensionProfile(std::vector<std::size_t> dims)
    : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "profile needs at least one subsystem");
  }
  for (std::size_t d : dims_) {
    if (d < 2) {
      throw Error(ErrorCode::DimensionMismatch,
                  "subsystem dimensions must be >= 2, got " + dims_string(dims_));
    }
    total_ *= d;
  }
}

std::size_t DimensionProfile::stride(std::size_t k) const {
  std::size_t s = 1;
  for (std::size_t j = k + 1; j < dims_.size(); ++j) s *= dims_[j];
  return s;
}

std::vector<std::size_t> DimensionProfile::digits(std::size_t index) const {
  std::vector<std::size_t> out(dims_.size());
  for (std::size_t j = dims_.size(); j-- > 0;) {
    out[j] = index % dims_[j];
    index /= dims_[j];
  }
  return out;
}

std::size_t DimensionProfile::index(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < dims_.size(); ++j) idx = idx * dims_[j] + digits[j];
  return idx;
}

DimensionProfile DimensionProfile::concat(const DimensionProfile& other) const {
  std::vector<std::size_t> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return DimensionProfile(std::move(dims));
}

DimensionProfile DimensionProfile::select(std::span<const std::size_t> subsystems) const {
  std::vector<std::size_t> dims;
  dims.reserve(subsystems.size());
  for (std::size_t k : subsystems) dims.push_back(dim(k));
  return DimensionProfile(std::move(dims));
}

// ---------------------------------------------------------------------------
// Bipartition

Bipartition::Bipartition(const DimensionProfile& profile, std::vector<std::size_t> side_a)
    : side_a_(std::move(side_a)) {
  const std::size_t n = profile.size();
  std::sort(side_a_.begin(), side_a_.end());
  if (side_a_.empty()) throw Error(ErrorCode::InvalidCut, "side A of the cut is empty");
  if (std::adjacent_find(side_a_.begin(), side_a_.end()) != side_a_.end()) {
    throw Error(ErrorCode::InvalidCut, "duplicate subsystem in cut");
  }
  if (side_a_.back() >= n) {
    throw Error(ErrorCode::InvalidCut, "cut names subsystem " +
                                           std::to_string(side_a_.back()) +
                                           " but the profile has " + std::to_string(n));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::binary_search(side_a_.begin(), side_a_.end(), k)) side_b_.push_back(k);
  }
  if (side_b_.empty()) throw Error(ErrorCode::InvalidCut, "side B of the cut is empty");
  for (std::size_t k : side_a_) dim_a_ *= profile.dim(k);
  for (std::size_t k : side_b_) dim_b_ *= profile.dim(k);
}

Bipartition Bipartition::first_subsystem(const DimensionProfile& profile) {
  return Bipartition(profile, {0});
}

std::vector<std::size_t> Bipartition::order() const {
  std::vector<std::size_t> out = side_a_;
  out.insert(out.end(), side_b_.begin(), side_b_.end());
  return out;
}

std::vector<Bipartition> all_bipartitions(const DimensionProfile& profile) {
  const std::size_t n = profile.size();
  std::vector<Bipartition> cuts;
  if (n < 2) return cuts;
  const std::size_t rest = n - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest); ++mask) {
    std::vector<std::size_t> side_a{0};
    for (std::size_t j = 0; j < rest; ++j) {
      if (mask & (std::size_t{1} << j)) side_a.push_back(j + 1);
    }
    cuts.emplace_back(profile, std::move(side_a));
  }
  return cuts;
}

// ---------------------------------------------------------------------------
// States

DensityMatrix DensityMatrix::assume_valid(DimensionProfile profile, CMatrix matrix) {
  const auto n = static_cast<Eigen::Index>(profile.total());
  if (matrix.rows() != n || matrix.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "matrix does not match profile");
  }
  return DensityMatrix(std::move(profile), std::move(matrix));
}

PureStateVector::PureStateVector(DimensionProfile profile, CVector amplitudes)
    : profile_(std::move(profile)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(profile_.total())) {
    throw Error(ErrorCode::DimensionMismatch,
                "amplitude vector length " + std::to_string(amplitudes_.size()) +
                    " does not match profile total " + std::to_string(profile_.total()));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kNorm) {
    throw Error(ErrorCode::NotNormalized, "state vector norm is " + std::to_string(norm),
                norm);
  }
}

DensityMatrix PureStateVector::projector() const {
  return DensityMatrix::assume_valid(profile_, amplitudes_ * amplitudes_.adjoint());
}

DensityMatrix validate_density(const CMatrix& raw, const DimensionProfile& profile) {
  const auto n = static_cast<Eigen::Index>(profile.total());
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  if (raw.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(raw.rows()) + "x" +
                    std::to_string(raw.cols()) + " but profile total is " +
                    std::to_string(n));
  }
  const double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kHermitian) {
    throw Error(ErrorCode::NotHermitian,
                "max |rho - rho^dagger| entry is " + std::to_string(asym), asym);
  }
  CMatrix h = 0.5 * (raw + raw.adjoint());

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const RVector& values = solver.eigenvalues();
  const double lowest = values.minCoeff();
  if (lowest < -tol::kPsd) {
    throw Error(ErrorCode::NotPositive,
                "most negative eigenvalue is " + std::to_string(lowest), lowest);
  }
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    throw Error(ErrorCode::TraceNotOne, "trace is " + std::to_string(trace), trace);
  }
  if (lowest < 0.0) {
    const RVector clamped = values.cwiseMax(0.0);
    h = solver.eigenvectors() * clamped.cast<Complex>().asDiagonal() *
        solver.eigenvectors().adjoint();
    h /= h.trace().real();
    h = 0.5 * (h + h.adjoint()).eval();
  }
  return DensityMatrix::assume_valid(profile, std::move(h));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::assume_valid(a.profile().concat(b.profile()),
                                     kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, "nothing to keep");
  const auto kept = sorted_unique_subsystems(keep, rho.profile().size());
  return DensityMatrix::assume_valid(rho.profile().select(kept),
                                     partial_trace_matrix(rho.matrix(), rho.profile(), kept));
}

// ---------------------------------------------------------------------------
// Spectra

void canonicalize_phase(Eigen::Ref<CVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > tol::kPhaseComponent) {
      v *= std::conj(v[i]) / mag;
      v[i] = Complex(std::abs(v[i]), 0.0);
      return;
    }
  }
}

CVector canonical_phase(CVector v) {
  canonicalize_phase(v);
  return v;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_gap(const RVector& values) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    gap = std::min(gap, std::abs(values[i - 1] - values[i]));
  }
  return gap;
}

namespace {

// Canonical orthonormal basis of span(block): computational vectors projected
// in index order, kept when the residual after Gram-Schmidt is not negligible.
CMatrix canonical_subspace_basis(const CMatrix& block) {
  const Eigen::Index n = block.rows();
  const Eigen::Index m = block.cols();
  const CMatrix projector = block * block.adjoint();
  CMatrix out(n, m);
  Eigen::Index found = 0;
  for (Eigen::Index j = 0; j < n && found < m; ++j) {
    CVector w = projector.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < found; ++k) {
        w -= out.col(k) * (out.col(k).adjoint() * w)(0);
      }
    }
    const double norm = w.norm();
    if (norm > 1e-6) out.col(found++) = w / norm;
  }
  if (found < m) return block;
  return out;
}

}  // namespace

Spectrum eig_hermitian(const CMatrix& h) {
  if (!is_hermitian(h)) {
    throw Error(ErrorCode::NotHermitian, "eig_hermitian needs a Hermitian matrix");
  }
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  const Eigen::Index n = sym.rows();

  Spectrum out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && out.values[end - 1] - out.values[end] <= tol::kDegenerate) ++end;
    if (end - start > 1) {
      out.vectors.middleCols(start, end - start) =
          canonical_subspace_basis(out.vectors.middleCols(start, end - start));
      out.tie_break_applied = true;
    }
    start = end;
  }
  for (Eigen::Index i = 0; i < n; ++i) canonicalize_phase(out.vectors.col(i));
  return out;
}

std::vector<Eigenspace> eigenspaces(const Spectrum& spectrum, double tol) {
  std::vector<Eigenspace> out;
  const Eigen::Index n = spectrum.values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && spectrum.values[end - 1] - spectrum.values[end] <= tol) ++end;
    Eigenspace space;
    space.value = spectrum.values.segment(start, end - start).mean();
    space.basis = spectrum.vectors.middleCols(start, end - start);
    out.push_back(std::move(space));
    start = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Index gymnastics

CMatrix permute_subsystems(const CMatrix& m, const DimensionProfile& profile,
                           std::span<const std::size_t> order) {
  const auto perm = permutation_map(profile, order);
  const auto n = static_cast<Eigen::Index>(profile.total());
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j])) = m(i, j);
    }
  }
  return out;
}

CVector permute_subsystems(const CVector& v, const DimensionProfile& profile,
                           std::span<const std::size_t> order) {
  const auto perm = permutation_map(profile, order);
  CVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(perm[i])] = v[i];
  return out;
}

CMatrix partial_trace_matrix(const CMatrix& m, const DimensionProfile& profile,
                             std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, "nothing to keep");
  const auto kept = sorted_unique_subsystems(keep, profile.size());
  std::vector<std::size_t> order = kept;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (!std::binary_search(kept.begin(), kept.end(), k)) order.push_back(k);
  }
  const CMatrix permuted = permute_subsystems(m, profile, order);
  std::size_t keep_dim = 1;
  for (std::size_t k : kept) keep_dim *= profile.dim(k);
  const auto a = static_cast<Eigen::Index>(keep_dim);
  const auto t = static_cast<Eigen::Index>(profile.total() / keep_dim);
  CMatrix out = CMatrix::Zero(a, a);
  for (Eigen::Index i = 0; i < a; ++i) {
    for (Eigen::Index j = 0; j < a; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index s = 0; s < t; ++s) sum += permuted(i * t + s, j * t + s);
      out(i, j) = sum;
    }
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const DimensionProfile& profile,
                          std::span<const std::size_t> subsystems) {
  const auto subs = sorted_unique_subsystems(subsystems, profile.size());
  const auto n = static_cast<Eigen::Index>(profile.total());
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto di = profile.digits(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < n; ++j) {
      auto a = di;
      auto b = profile.digits(static_cast<std::size_t>(j));
      for (std::size_t k : subs) std::swap(a[k], b[k]);
      out(static_cast<Eigen::Index>(profile.index(a)),
          static_cast<Eigen::Index>(profile.index(b))) = m(i, j);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix kron(std::span<const CMatrix> factors) {
  CMatrix out = CMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CVector kron(std::span<const CVector> factors) {
  CVector out = CVector::Ones(1);
  for (const auto& f : factors) {
    CVector next(out.size() * f.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * f.size(), f.size()) = out[i] * f;
    out = std::move(next);
  }
  return out;
}

}  // namespace qzoo
