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

#pragma once

// Dense complex linear algebra for small multipartite density matrices.
//
// Index convention: subsystem 0 is the most significant digit, so the
// amplitude of |i0 i1 ... i_{n-1}> sits at ((i0 * d1 + i1) * d2 + ...) and
// tensor products are ordinary Kronecker products in profile order.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qzoo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kEig = 1e-9;
inline constexpr double kNorm = 1e-9;
// Eigenvalues closer than this are one eigenspace.
inline constexpr double kDegenerate = 1e-8;
// Threshold for the "first nonzero component" in the phase convention.
inline constexpr double kPhaseComponent = 1e-9;
}  // namespace tol

class DimensionProfile {
 public:
  explicit DimensionProfile(std::vector<std::size_t> dims);

  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t dim(std::size_t k) const { return dims_.at(k); }
  std::size_t total() const { return total_; }

  // Product of the dimensions of subsystems after k.
  std::size_t stride(std::size_t k) const;
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  DimensionProfile concat(const DimensionProfile& other) const;
  DimensionProfile select(std::span<const std::size_t> subsystems) const;

  bool operator==(const DimensionProfile&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// A split of the subsystems into two nonempty groups, each kept in
/// ascending order.
class Bipartition {
 public:
  Bipartition(const DimensionProfile& profile, std::vector<std::size_t> side_a);

  // {0} | rest; the natural cut for two-party profiles.
  static Bipartition first_subsystem(const DimensionProfile& profile);

  std::span<const std::size_t> side_a() const { return side_a_; }
  std::span<const std::size_t> side_b() const { return side_b_; }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  // side_a followed by side_b.
  std::vector<std::size_t> order() const;
  std::size_t subsystem_count() const { return side_a_.size() + side_b_.size(); }

  bool operator==(const Bipartition&) const = default;

 private:
  std::vector<std::size_t> side_a_;
  std::vector<std::size_t> side_b_;
  std::size_t dim_a_ = 1;
  std::size_t dim_b_ = 1;
};

/// Every inequivalent bipartition (side A always contains subsystem 0).
std::vector<Bipartition> all_bipartitions(const DimensionProfile& profile);

class DensityMatrix {
 public:
  const DimensionProfile& profile() const { return profile_; }
  const CMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return profile_.total(); }

  // For results the caller has already proven valid (products, marginals,
  // dephasings of valid states). No checks beyond shape.
  static DensityMatrix assume_valid(DimensionProfile profile, CMatrix matrix);

 private:
  DensityMatrix(DimensionProfile profile, CMatrix matrix)
      : profile_(std::move(profile)), matrix_(std::move(matrix)) {}

  DimensionProfile profile_;
  CMatrix matrix_;
};

class PureStateVector {
 public:
  PureStateVector(DimensionProfile profile, CVector amplitudes);

  const DimensionProfile& profile() const { return profile_; }
  const CVector& amplitudes() const { return amplitudes_; }
  DensityMatrix projector() const;

 private:
  DimensionProfile profile_;
  CVector amplitudes_;
};

struct Spectrum {
  RVector values;   // descending
  CMatrix vectors;  // column i pairs with values[i]
  bool tie_break_applied = false;
};

struct Eigenspace {
  double value = 0.0;
  CMatrix basis;  // orthonormal columns
};

/// Checks Hermiticity, positivity and unit trace. Tiny asymmetry is
/// symmetrized away; eigenvalues in [-tol_psd, 0) are clamped and the
/// result renormalized.
DensityMatrix validate_density(const CMatrix& raw, const DimensionProfile& profile);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

/// Descending eigenvalues. Eigenvectors inside a degenerate cluster are
/// replaced by the canonical basis: computational vectors projected onto the
/// eigenspace in index order, Gram-Schmidt orthonormalized. Every vector gets
/// the phase convention of `canonicalize_phase`.
Spectrum eig_hermitian(const CMatrix& h);

std::vector<Eigenspace> eigenspaces(const Spectrum& spectrum,
                                    double tol = tol::kDegenerate);

// Smallest gap between consecutive distinct eigenvalues; +inf for 1x1.
double min_gap(const RVector& descending_values);

// Raw-matrix helpers shared by the other modules.
bool is_hermitian(const CMatrix& m, double tol = tol::kHermitian);
CMatrix partial_trace_matrix(const CMatrix& m, const DimensionProfile& profile,
                             std::span<const std::size_t> keep);
CMatrix permute_subsystems(const CMatrix& m, const DimensionProfile& profile,
                           std::span<const std::size_t> order);
CVector permute_subsystems(const CVector& v, const DimensionProfile& profile,
                           std::span<const std::size_t> order);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(std::span<const CMatrix> factors);
CVector kron(std::span<const CVector> factors);
CMatrix partial_transpose(const CMatrix& m, const DimensionProfile& profile,
                          std::span<const std::size_t> subsystems);

// First component with magnitude above tol::kPhaseComponent made real positive.
void canonicalize_phase(Eigen::Ref<CVector> v);
CVector canonical_phase(CVector v);

}  // namespace qzoo
