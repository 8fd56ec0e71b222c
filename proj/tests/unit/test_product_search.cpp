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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qzoo/product_search.hpp"
#include "qzoo/zoo.hpp"

namespace qzoo {
namespace {

CMatrix span_projector(const std::vector<CVector>& vs) {
  CMatrix q(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = vs[i];
  Eigen::HouseholderQR<CMatrix> qr(q);
  const CMatrix basis = qr.householderQ() * CMatrix::Identity(q.rows(), q.cols());
  return basis * basis.adjoint();
}

CVector e(std::size_t n, std::size_t i) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(n));
  v[static_cast<Eigen::Index>(i)] = 1.0;
  return v;
}

TEST(MaximizeProductOverlap, IdentityHasOverlapOne) {
  const auto r = maximize_product_overlap(CMatrix::Identity(8, 8), DimensionProfile({2, 2, 2}), {});
  EXPECT_NEAR(r.best_overlap, 1.0, 1e-12);
  EXPECT_EQ(r.restarts_used, 1u);
}

TEST(MaximizeProductOverlap, ProductSpannedSubspace) {
  const CMatrix p = span_projector({e(4, 0), e(4, 1)});
  const auto r = maximize_product_overlap(p, DimensionProfile({2, 2}), {});
  EXPECT_GE(r.best_overlap, 1.0 - 1e-7);
  const CVector v = r.best.vector();
  EXPECT_NEAR((v.adjoint() * p * v)(0).real(), 1.0, 1e-7);
}

TEST(MaximizeProductOverlap, ShiftsComplementHasNoProductVector) {
  const CMatrix span = shifts_upb().matrix();
  const CMatrix kernel = CMatrix::Identity(8, 8) - span * span.adjoint();
  const auto r = maximize_product_overlap(kernel, DimensionProfile({2, 2, 2}), {});
  EXPECT_EQ(r.restarts_used, 64u);
  EXPECT_LE(r.best_overlap, 0.999);
}

TEST(MaximizeProductOverlap, BellSpanBestIsOneHalf) {
  CVector phi = e(4, 0) + e(4, 3);
  phi /= std::numbers::sqrt2;
  const auto r = maximize_product_overlap(phi * phi.adjoint(), DimensionProfile({2, 2}), {});
  EXPECT_NEAR(r.best_overlap, 0.5, 1e-9);
}

TEST(FindProductBasis, BB84HalfSpace) {
  const double s = 1.0 / std::numbers::sqrt2;
  CVector one_plus(4);
  one_plus << 0, 0, s, s;
  CMatrix sub(4, 2);
  sub.col(0) = e(4, 0);
  sub.col(1) = one_plus;
  const auto r = find_product_basis(sub, DimensionProfile({2, 2}), {});
  ASSERT_TRUE(r.found);
  ASSERT_EQ(r.vectors.size(), 2u);
  const CVector a = r.vectors[0].vector(), b = r.vectors[1].vector();
  EXPECT_NEAR(std::abs(a.dot(b)), 0.0, 1e-8);
  const CMatrix p = sub * sub.adjoint();
  EXPECT_NEAR((a.adjoint() * p * a)(0).real(), 1.0, 1e-7);
  EXPECT_NEAR((b.adjoint() * p * b)(0).real(), 1.0, 1e-7);
}

TEST(FindProductBasis, EntangledSpaceIsEmpty) {
  const CMatrix span = shifts_upb().matrix();
  const CMatrix kernel = CMatrix::Identity(8, 8) - span * span.adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(kernel);
  const CMatrix sub = es.eigenvectors().rightCols(4);
  const auto r = find_product_basis(sub, DimensionProfile({2, 2, 2}), {});
  EXPECT_FALSE(r.found);
  EXPECT_TRUE(r.empty_of_products);
  EXPECT_LE(r.overlap, 0.999);
}

TEST(FindProductBasis, SymmetricSubspaceDeadEnds) {
  // Triplet space: product vectors exist (|aa>) but no orthonormal basis of them.
  const double s = 1.0 / std::numbers::sqrt2;
  CVector t(4);
  t << 0, s, s, 0;
  CMatrix sub(4, 3);
  sub.col(0) = e(4, 0);
  sub.col(1) = t;
  sub.col(2) = e(4, 3);
  const auto r = find_product_basis(sub, DimensionProfile({2, 2}), {});
  EXPECT_FALSE(r.found);
  EXPECT_FALSE(r.empty_of_products);
}

}  // namespace
}  // namespace qzoo
