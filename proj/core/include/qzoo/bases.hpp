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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qzoo/state.hpp"

namespace qzoo {

namespace tol {
inline constexpr double kOrtho = 1e-8;
inline constexpr double kProduct = 1e-7;
inline constexpr double kCluster = 1e-6;
// Overlaps this close to 0 or 1 (but outside kCluster) are ambiguous.
inline constexpr double kAmbiguousBand = 1e-3;
}  // namespace tol

/// Orthonormal basis of one subsystem, stored as the columns of a square
/// matrix.
class LocalBasis {
 public:
  explicit LocalBasis(CMatrix columns, bool canonical_phases = true);

  static LocalBasis computational(std::size_t d);

  std::size_t dim() const { return static_cast<std::size_t>(vectors_.cols()); }
  const CMatrix& vectors() const { return vectors_; }
  CVector vector(std::size_t i) const { return vectors_.col(static_cast<Eigen::Index>(i)); }

 private:
  CMatrix vectors_;
};

/// One local basis per subsystem; the induced product basis is enumerated in
/// the profile's index order.
class ClassicalBasis {
 public:
  ClassicalBasis(DimensionProfile profile, std::vector<LocalBasis> local);

  static ClassicalBasis computational(const DimensionProfile& profile);

  const DimensionProfile& profile() const { return profile_; }
  const std::vector<LocalBasis>& local() const { return local_; }
  const LocalBasis& local(std::size_t k) const { return local_.at(k); }

  // N x N unitary whose columns are the induced product vectors.
  CMatrix product_matrix() const;

 private:
  DimensionProfile profile_;
  std::vector<LocalBasis> local_;
};

struct ProductVector {
  std::vector<CVector> factors;
  CVector vector() const { return kron(std::span<const CVector>(factors)); }
};

/// Orthonormal set of product vectors. Complete when it spans the space.
class ProductBasisSet {
 public:
  ProductBasisSet(DimensionProfile profile, std::vector<ProductVector> elements,
                  double tol = tol::kOrtho);

  const DimensionProfile& profile() const { return profile_; }
  const std::vector<ProductVector>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool complete() const { return elements_.size() == profile_.total(); }
  // N x size matrix of the product vectors.
  CMatrix matrix() const;

 private:
  DimensionProfile profile_;
  std::vector<ProductVector> elements_;
};

struct ProductTest {
  bool is_product = false;
  std::vector<CVector> factors;  // only when is_product
  double residual = 0.0;         // largest second singular value met
};

/// Peels subsystems left to right; each peel is a rank test on the reshaped
/// amplitudes (second singular value <= tol means the cut factorizes).
ProductTest is_product_vector(const PureStateVector& psi, double tol = tol::kProduct);
ProductTest is_product_vector(const CVector& amplitudes, const DimensionProfile& profile,
                              double tol = tol::kProduct);

enum class BasisFailureKind {
  WrongCount,
  NotProductVector,
  LocalFactorsNotOrthonormal,
  AmbiguousClustering,
  MissingCombination,
};

struct BasisFailure {
  BasisFailureKind kind;
  std::size_t subsystem = 0;
  std::pair<std::size_t, std::size_t> pair{0, 0};  // vector indices
  double overlap = 0.0;
  std::string message;
};

struct ClassicalBasisCheck {
  std::optional<ClassicalBasis> basis;
  std::optional<BasisFailure> failure;
  explicit operator bool() const { return basis.has_value(); }
};

ClassicalBasisCheck classical_basis_from_vectors(std::span<const CVector> vectors,
                                                 const DimensionProfile& profile);
ClassicalBasisCheck classical_basis_from_vectors(std::span<const PureStateVector> vectors,
                                                 const DimensionProfile& profile);

/// sum_k <v_k|rho|v_k> |v_k><v_k| over the induced product basis.
DensityMatrix dephase(const DensityMatrix& rho, const ClassicalBasis& basis);
RVector diagonal_in(const DensityMatrix& rho, const ClassicalBasis& basis);
// Frobenius norm of the off-diagonal part of U^dagger rho U.
double off_diagonal_mass(const CMatrix& rho, const CMatrix& unitary);

struct SchmidtData {
  std::vector<double> coefficients;  // descending, length min(d_A, d_B)
  LocalBasis left;
  LocalBasis right;
  // psi = sum_i c_i left_i (x) right_i in the cut's A-then-B ordering.
};

SchmidtData schmidt_decompose_pure(const PureStateVector& psi, const Bipartition& cut);

/// rho reordered so side A comes first, on the two-party profile [d_A, d_B].
DensityMatrix bipartite_view(const DensityMatrix& rho, const Bipartition& cut);

struct SchmidtBasis {
  ClassicalBasis basis;  // over [d_A, d_B]
  bool tie_break_applied = false;
};

/// Eigenbases of the two marginals across the cut.
SchmidtBasis schmidt_basis(const DensityMatrix& rho, const Bipartition& cut);

/// rho dephased in its Schmidt basis, returned in rho's own subsystem order.
DensityMatrix schmidt_state(const DensityMatrix& rho, const Bipartition& cut);

}  // namespace qzoo
