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

#include "qzoo/product_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qzoo/random.hpp"

namespace qzoo {

namespace {

// Column q is the product vector with factor k replaced by e_q.
CMatrix slot_matrix(const std::vector<CVector>& factors, std::size_t k) {
  const auto d = factors[k].size();
  std::vector<CVector> fs = factors;
  CMatrix out;
  for (Eigen::Index q = 0; q < d; ++q) {
    fs[k] = CVector::Unit(d, q);
    const CVector v = kron(std::span<const CVector>(fs));
    if (q == 0) out.resize(v.size(), d);
    out.col(q) = v;
  }
  return out;
}

struct Climb {
  std::vector<CVector> factors;
  double overlap = 0.0;
};

Climb climb(const CMatrix& projector, std::vector<CVector> factors, std::size_t max_iterations) {
  double previous = -1.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    double value = 0.0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const CMatrix b = slot_matrix(factors, k);
      const CMatrix m = b.adjoint() * projector * b;
      Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()));
      const Eigen::Index top = m.rows() - 1;
      factors[k] = solver.eigenvectors().col(top);
      value = solver.eigenvalues()[top];
    }
    if (value - previous < 1e-16 || value >= 1.0 - 1e-16) break;
    previous = value;
  }
  for (auto& f : factors) f = canonical_phase(f / f.norm());
  const CVector v = kron(std::span<const CVector>(factors));
  return {std::move(factors), (v.adjoint() * projector * v)(0).real()};
}

std::vector<std::vector<CVector>> computational_starts(const CMatrix& projector,
                                                       const DimensionProfile& profile,
                                                       std::size_t limit) {
  std::vector<std::size_t> order(profile.total());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return projector(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real() >
           projector(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)).real() + 1e-12;
  });
  std::vector<std::vector<CVector>> starts;
  for (std::size_t idx : order) {
    if (starts.size() >= limit) break;
    if (projector(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)).real() < 1e-12) {
      break;
    }
    const auto digits = profile.digits(idx);
    std::vector<CVector> fs;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      fs.push_back(CVector::Unit(static_cast<Eigen::Index>(profile.dim(k)),
                                 static_cast<Eigen::Index>(digits[k])));
    }
    starts.push_back(std::move(fs));
  }
  return starts;
}

}  // namespace

SeesawResult maximize_product_overlap(const CMatrix& projector, const DimensionProfile& profile,
                                      const ProductSearchConfig& config) {
  const auto fixed = computational_starts(projector, profile, config.restarts / 4);
  SeesawResult out;
  out.best_overlap = -1.0;
  const CMatrix complement =
      CMatrix::Identity(projector.rows(), projector.cols()) - projector;
  for (std::size_t r = 0; r < config.restarts; ++r) {
    std::vector<CVector> start;
    if (r < fixed.size()) {
      start = fixed[r];
    } else {
      Rng rng = make_rng(config.seed, r);
      for (std::size_t d : profile.dims()) start.push_back(random_unit_vector(d, rng));
    }
    Climb c = climb(projector, std::move(start), config.max_iterations);
    ++out.restarts_used;
    if (c.overlap > out.best_overlap + 1e-15) {
      out.best_overlap = c.overlap;
      out.best.factors = std::move(c.factors);
      out.best_restart = r;
    }
    if (config.stop_at_first_hit && out.best_overlap >= 1.0 - config.tol_prod) break;
  }
  out.best_overlap = std::clamp(out.best_overlap, 0.0, 1.0);
  if (!out.best.factors.empty()) out.best_residual = (complement * out.best.vector()).norm();
  return out;
}

ProductBasisSearch find_product_basis(const CMatrix& subspace, const DimensionProfile& profile,
                                      const ProductSearchConfig& config, std::size_t attempts) {
  ProductBasisSearch best_failure;
  best_failure.overlap = 0.0;
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(attempts, 1); ++attempt) {
    ProductSearchConfig cfg = config;
    cfg.stop_at_first_hit = true;
    cfg.seed = config.seed + 0x9e3779b97f4a7c15ULL * attempt;

    CMatrix q = subspace;
    std::vector<ProductVector> found;
    double weakest = 1.0;
    bool ok = true;
    while (q.cols() > 0) {
      const CMatrix projector = q * q.adjoint();
      SeesawResult s = maximize_product_overlap(projector, profile, cfg);
      if (s.best_overlap < 1.0 - cfg.tol_prod) {
        if (found.empty()) {
          ProductBasisSearch none;
          none.overlap = s.best_overlap;
          none.empty_of_products = true;
          return none;
        }
        best_failure.overlap = std::max(best_failure.overlap, s.best_overlap);
        ok = false;
        break;
      }
      weakest = std::min(weakest, s.best_overlap);
      const CVector v = s.best.vector();
      found.push_back(std::move(s.best));

      // Deflate: keep the part of span(q) orthogonal to v.
      const CVector w = q.adjoint() * v;
      if (q.cols() == 1) {
        q.resize(q.rows(), 0);
        break;
      }
      Eigen::HouseholderQR<CMatrix> qr(w);
      const CMatrix full = qr.householderQ();
      q = q * full.rightCols(q.cols() - 1);
      // Restore exact orthonormality of the remaining columns.
      Eigen::HouseholderQR<CMatrix> re(q);
      q = re.householderQ() * CMatrix::Identity(q.rows(), q.cols());
      // Gram-Schmidt of product vectors already found keeps later ones orthogonal.
      for (const auto& pv : found) {
        const CVector u = pv.vector();
        q -= u * (u.adjoint() * q);
      }
      Eigen::HouseholderQR<CMatrix> again(q);
      q = again.householderQ() * CMatrix::Identity(q.rows(), q.cols());
    }
    if (ok) {
      ProductBasisSearch out;
      out.found = true;
      out.vectors = std::move(found);
      out.overlap = weakest;
      return out;
    }
  }
  return best_failure;
}

}  // namespace qzoo
