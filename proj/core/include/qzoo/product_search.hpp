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

// Seesaw search for product vectors inside a subspace: maximize
// <a (x) b (x) ...| P |a (x) b (x) ...> by updating one factor at a time to
// the top eigenvector of the projector compressed onto that subsystem.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qzoo/bases.hpp"

namespace qzoo {

struct ProductSearchConfig {
  std::size_t restarts = 64;
  std::uint64_t seed = 42;
  std::size_t max_iterations = 5000;
  double tol_prod = 1e-7;
  double margin_prod = 1e-3;
  // Stop after the first restart that reaches 1 - tol_prod.
  bool stop_at_first_hit = true;
};

struct SeesawResult {
  double best_overlap = 0.0;
  ProductVector best;
  double best_residual = 1.0;  // || (1 - P) v || for the best vector
  std::size_t restarts_used = 0;
  std::size_t best_restart = 0;
};

/// Computational product vectors with the largest weight in P are tried
/// first, then random product vectors drawn from (config.seed, restart).
SeesawResult maximize_product_overlap(const CMatrix& projector, const DimensionProfile& profile,
                                      const ProductSearchConfig& config);

struct ProductBasisSearch {
  bool found = false;
  std::vector<ProductVector> vectors;
  // Overlap reached by the weakest accepted vector, or the best overlap of
  // the search that failed.
  double overlap = 0.0;
  // True when the very first search in the subspace already failed, so no
  // product vector was found anywhere in it.
  bool empty_of_products = false;
};

/// Orthonormal product basis of span(columns) by greedy seesaw + deflation,
/// retried from fresh random streams when the greedy choice dead-ends.
ProductBasisSearch find_product_basis(const CMatrix& subspace, const DimensionProfile& profile,
                                      const ProductSearchConfig& config,
                                      std::size_t attempts = 8);

}  // namespace qzoo
