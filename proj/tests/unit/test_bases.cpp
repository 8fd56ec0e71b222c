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

#include "oracles.hpp"
#include "qzoo/bases.hpp"
#include "qzoo/error.hpp"
#include "qzoo/zoo.hpp"

namespace qzoo {
namespace {

const double kR = 1.0 / std::numbers::sqrt2;

CVector q(double a, double b) {
  CVector v(2);
  v << a, b;
  return v;
}
CVector k0() { return q(1, 0); }
CVector k1() { return q(0, 1); }
CVector kp() { return q(kR, kR); }
CVector km() { return q(kR, -kR); }

CVector prod(std::vector<CVector> fs) { return kron(std::span<const CVector>(fs)); }

// |<u|v>| close to 1.
bool same_ray(const CVector& u, const CVector& v, double tol = 1e-10) {
  return std::abs(std::abs(u.dot(v)) - 1.0) < tol;
}

TEST(IsProductVector, Examples) {
  const DimensionProfile two({2, 2});
  const ProductTest t = is_product_vector(prod({k0(), k0()}), two);
  ASSERT_TRUE(t.is_product);
  EXPECT_TRUE(same_ray(t.factors[0], k0()));
  EXPECT_TRUE(same_ray(t.factors[1], k0()));

  CVector phi(4);
  phi << kR, 0, 0, kR;
  EXPECT_FALSE(is_product_vector(phi, two).is_product);
  EXPECT_NEAR(is_product_vector(phi, two).residual, kR, 1e-12);

  const ProductTest t3 = is_product_vector(prod({k0(), k1(), kp()}), DimensionProfile({2, 2, 2}));
  ASSERT_TRUE(t3.is_product);
  EXPECT_TRUE(same_ray(t3.factors[0], k0()));
  EXPECT_TRUE(same_ray(t3.factors[1], k1()));
  EXPECT_TRUE(same_ray(t3.factors[2], kp()));
}

TEST(IsProductVector, RandomProductsRecovered) {
  Rng rng = make_rng(11);
  const DimensionProfile p({2, 3, 2});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CVector> fs;
    for (std::size_t d : p.dims()) fs.push_back(random_unit_vector(d, rng));
    const CVector v = prod(fs);
    const ProductTest t = is_product_vector(v, p);
    ASSERT_TRUE(t.is_product);
    EXPECT_TRUE(same_ray(prod(t.factors), v));
  }
}

TEST(ClassicalBasisFromVectors, Computational) {
  const std::vector<CVector> vs{prod({k0(), k0()}), prod({k0(), k1()}), prod({k1(), k0()}),
                                prod({k1(), k1()})};
  const auto check = classical_basis_from_vectors(std::span<const CVector>(vs), DimensionProfile({2, 2}));
  ASSERT_TRUE(check);
  EXPECT_LT((check.basis->product_matrix() - CMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(ClassicalBasisFromVectors, BB84BasisIsNotClassical) {
  const std::vector<CVector> vs{prod({k0(), k0()}), prod({k0(), k1()}), prod({k1(), kp()}),
                                prod({k1(), km()})};
  const auto check = classical_basis_from_vectors(std::span<const CVector>(vs), DimensionProfile({2, 2}));
  ASSERT_FALSE(check);
  EXPECT_EQ(check.failure->kind, BasisFailureKind::LocalFactorsNotOrthonormal);
  EXPECT_EQ(check.failure->subsystem, 1u);
  EXPECT_NEAR(check.failure->overlap, kR, 1e-9);
}

TEST(ClassicalBasisFromVectors, Hadamard) {
  const std::vector<CVector> vs{prod({kp(), kp()}), prod({kp(), km()}), prod({km(), kp()}),
                                prod({km(), km()})};
  const auto check = classical_basis_from_vectors(std::span<const CVector>(vs), DimensionProfile({2, 2}));
  ASSERT_TRUE(check);
  EXPECT_TRUE(same_ray(check.basis->local(0).vector(0), kp()));
  EXPECT_TRUE(same_ray(check.basis->local(1).vector(1), km()));
}

TEST(ClassicalBasisFromVectors, FailureKinds) {
  const DimensionProfile p({2, 2});
  const std::vector<CVector> three{prod({k0(), k0()}), prod({k0(), k1()}), prod({k1(), k0()})};
  EXPECT_EQ(classical_basis_from_vectors(std::span<const CVector>(three), p).failure->kind,
            BasisFailureKind::WrongCount);

  CVector phi(4);
  phi << kR, 0, 0, kR;
  const std::vector<CVector> entangled{phi, prod({k0(), k1()}), prod({k1(), k0()}),
                                       prod({k1(), k1()})};
  EXPECT_EQ(classical_basis_from_vectors(std::span<const CVector>(entangled), p).failure->kind,
            BasisFailureKind::NotProductVector);

  // Factor overlap 1e-4: neither identical nor orthogonal.
  const double t = 1e-4;
  const CVector tilted = q(std::cos(t), std::sin(t));
  const std::vector<CVector> near{prod({k0(), k0()}), prod({k0(), k1()}), prod({k1(), tilted}),
                                  prod({k1(), q(-std::sin(t), std::cos(t))})};
  EXPECT_EQ(classical_basis_from_vectors(std::span<const CVector>(near), p).failure->kind,
            BasisFailureKind::AmbiguousClustering);
}

TEST(ClassicalBasisFromVectors, RoundTripsRandomBases) {
  Rng rng = make_rng(12);
  const DimensionProfile p({2, 3});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<LocalBasis> local{LocalBasis(haar_unitary(2, rng)), LocalBasis(haar_unitary(3, rng))};
    const ClassicalBasis b(p, local);
    const CMatrix m = b.product_matrix();
    std::vector<CVector> vs;
    for (Eigen::Index i = 0; i < m.cols(); ++i) vs.push_back(m.col(i));
    const auto check = classical_basis_from_vectors(std::span<const CVector>(vs), p);
    ASSERT_TRUE(check);
    const Eigen::MatrixXd overlap = (check.basis->product_matrix().adjoint() * m).cwiseAbs();
    EXPECT_NEAR(overlap.rowwise().maxCoeff().minCoeff(), 1.0, 1e-9);
  }
}

TEST(LocalBasis, RejectsNonOrthonormal) {
  CMatrix m(2, 2);
  m << 1, kR, 0, kR;
  try {
    LocalBasis b(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidBasis);
  }
}

TEST(Dephase, Examples) {
  const auto comp = ClassicalBasis::computational(DimensionProfile({2, 2}));
  const auto bell = build("bell_phi_plus").state;
  const RVector d = diagonal_in(bell, comp);
  EXPECT_NEAR(d[0], 0.5, 1e-15);
  EXPECT_NEAR(d[1], 0.0, 1e-15);
  EXPECT_NEAR(d[3], 0.5, 1e-15);

  const auto rho0 = build("bb84_rho0").state;
  const auto dr = dephase(rho0, comp).matrix();
  EXPECT_NEAR(dr(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(dr(1, 1).real(), 0.0, 1e-15);
  EXPECT_NEAR(dr(2, 2).real(), 0.25, 1e-15);
  EXPECT_NEAR(dr(3, 3).real(), 0.25, 1e-15);
  EXPECT_NEAR(off_diagonal_mass(dr, CMatrix::Identity(4, 4)), 0.0, 1e-15);

  const auto a = build("closest_to_rho0_a").state;
  EXPECT_LT((dephase(a, comp).matrix() - a.matrix()).norm(), 1e-15);
}

TEST(Dephase, IdempotentAndTracePreserving) {
  Rng rng = make_rng(13);
  const DimensionProfile p({2, 2, 2});
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testing::random_state(p, rng);
    std::vector<LocalBasis> local;
    for (int k = 0; k < 3; ++k) local.emplace_back(haar_unitary(2, rng));
    const ClassicalBasis b(p, local);
    const auto once = dephase(rho, b);
    const auto twice = dephase(once, b);
    EXPECT_LT((once.matrix() - twice.matrix()).norm(), 1e-12);
    EXPECT_NEAR(once.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(testing::hermitian_eigenvalues_via_real(once.matrix()).front(), -1e-12);
  }
}

TEST(SchmidtDecompose, Examples) {
  const DimensionProfile p({2, 2});
  const Bipartition cut = Bipartition::first_subsystem(p);
  CVector phi(4);
  phi << kR, 0, 0, kR;
  auto c = schmidt_decompose_pure(PureStateVector(p, phi), cut).coefficients;
  EXPECT_NEAR(c[0], kR, 1e-12);
  EXPECT_NEAR(c[1], kR, 1e-12);

  c = schmidt_decompose_pure(PureStateVector(p, prod({k0(), kp()})), cut).coefficients;
  EXPECT_NEAR(c[0], 1.0, 1e-12);
  EXPECT_NEAR(c[1], 0.0, 1e-12);

  CVector v(4);
  v << std::sqrt(1.0 / 3), 0, 0, std::sqrt(2.0 / 3);
  c = schmidt_decompose_pure(PureStateVector(p, v), cut).coefficients;
  EXPECT_NEAR(c[0], std::sqrt(2.0 / 3), 1e-12);
  EXPECT_NEAR(c[1], std::sqrt(1.0 / 3), 1e-12);
}

TEST(SchmidtDecompose, ReconstructsAndMatchesMarginal) {
  Rng rng = make_rng(14);
  const DimensionProfile p({2, 3, 2});
  const Bipartition cut(p, {0, 2});
  for (int trial = 0; trial < 10; ++trial) {
    const PureStateVector psi(p, random_unit_vector(p.total(), rng));
    const SchmidtData s = schmidt_decompose_pure(psi, cut);
    CVector back = CVector::Zero(static_cast<Eigen::Index>(p.total()));
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
      back += s.coefficients[i] * kron(s.left.vector(i), s.right.vector(i));
    }
    const CVector view = permute_subsystems(psi.amplitudes(), p, cut.order());
    EXPECT_LT((back - view).norm(), 1e-10);
    const std::size_t keep[] = {0, 2};
    const auto ev = testing::hermitian_eigenvalues_via_real(
        partial_trace_matrix(psi.projector().matrix(), p, keep));
    // Largest min(d_A, d_B) eigenvalues of the marginal are the squared coefficients.
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
      EXPECT_NEAR(s.coefficients[i] * s.coefficients[i], ev[ev.size() - 1 - i], 1e-9);
    }
  }
}

TEST(SchmidtBasis, BB84UsesMarginalEigenbasis) {
  const auto rho0 = build("bb84_rho0").state;
  const auto sb = schmidt_basis(rho0, Bipartition::first_subsystem(rho0.profile()));
  EXPECT_TRUE(sb.tie_break_applied);
  EXPECT_LT((sb.basis.local(0).vectors() - CMatrix::Identity(2, 2)).norm(), 1e-12);
  // Closed-form eigenvectors of (|0><0| + |+><+|)/2.
  const double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
  EXPECT_TRUE(same_ray(sb.basis.local(1).vector(0), q(c, s)));
  EXPECT_TRUE(same_ray(sb.basis.local(1).vector(1), q(s, -c)));
}

TEST(SchmidtState, BB84Diagonal) {
  const auto rho0 = build("bb84_rho0").state;
  const auto cut = Bipartition::first_subsystem(rho0.profile());
  const auto sigma = schmidt_state(rho0, cut);
  const auto basis = schmidt_basis(rho0, cut).basis;
  const RVector d = diagonal_in(sigma, basis);
  const double hi = 0.5 * std::pow(std::cos(std::numbers::pi / 8), 2);
  const double lo = 0.5 * std::pow(std::sin(std::numbers::pi / 8), 2);
  EXPECT_NEAR(d[0], hi, 1e-12);
  EXPECT_NEAR(d[1], lo, 1e-12);
  EXPECT_NEAR(d[2], hi, 1e-12);
  EXPECT_NEAR(d[3], lo, 1e-12);
  EXPECT_NEAR(hi, 0.4268, 1e-4);
  EXPECT_NEAR(lo, 0.0732, 1e-4);
  // Same diagonal as rho itself in that basis.
  EXPECT_LT((diagonal_in(rho0, basis) - d).norm(), 1e-12);
}

TEST(SchmidtState, PureStateGivesSigmaCl) {
  const DimensionProfile p({2, 2});
  CVector v(4);
  v << std::sqrt(0.9), 0, 0, std::sqrt(0.1);
  const auto psi = PureStateVector(p, v).projector();
  const auto sigma = schmidt_state(psi, Bipartition::first_subsystem(p));
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = 0.9;
  expected(3, 3) = 0.1;
  EXPECT_LT((sigma.matrix() - expected).norm(), 1e-12);
}

TEST(SchmidtState, ClassicalProductIsFixed) {
  Rng rng = make_rng(15);
  const auto a = testing::random_classical_state(DimensionProfile({2}), rng);
  const auto b = testing::random_classical_state(DimensionProfile({3}), rng);
  const auto ab = tensor_product(a, b);
  EXPECT_LT((schmidt_state(ab, Bipartition::first_subsystem(ab.profile())).matrix() - ab.matrix()).norm(),
            1e-12);
}

TEST(SchmidtState, MultipartiteCutKeepsOriginalOrder) {
  // |0>|+>|1> cut {0,2}|{1}: already product, so unchanged.
  const DimensionProfile p({2, 2, 2});
  const auto rho = PureStateVector(p, prod({k0(), kp(), k1()})).projector();
  const auto sigma = schmidt_state(rho, Bipartition(p, {0, 2}));
  EXPECT_EQ(sigma.profile(), p);
  EXPECT_LT((sigma.matrix() - rho.matrix()).norm(), 1e-12);
}

}  // namespace
}  // namespace qzoo
