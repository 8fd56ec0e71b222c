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

#include <vector>

#include "qzoo/bases.hpp"
#include "qzoo/local_search.hpp"
#include "qzoo/state.hpp"

namespace qzoo {

// All entropies are in bits.

double entropy(const DensityMatrix& rho);

/// tr rho log rho - tr rho log sigma; +infinity when supp(rho) is not inside
/// supp(sigma) (eigenvalues <= 1e-12 count as outside the support).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(dephase(rho, basis)) - S(rho): the relative entropy to the nearest state
/// diagonal in `basis`.
double dephasing_gap(const DensityMatrix& rho, const ClassicalBasis& basis);

struct QuantumnessResult {
  double value = 0.0;
  DensityMatrix argmin_state;
  ClassicalBasis argmin_basis;
  std::size_t restarts = 0;
  std::size_t best_restart = 0;
  bool converged = false;
};

/// Relative entropy of quantumness: the smallest dephasing gap over product
/// bases. An upper bound on the true minimum; seeded with the marginal
/// eigenbases, so it never exceeds the Schmidt-state value.
QuantumnessResult q_rel(const DensityMatrix& rho, const SearchConfig& config = {});

enum class DistanceKind { RelativeEntropy, TraceDistance, FidelityBased };

/// RelativeEntropy is not symmetric; the other two are.
double distance(const DensityMatrix& rho, const DensityMatrix& sigma, DistanceKind kind);

double q_schmidt(const DensityMatrix& rho, const Bipartition& cut,
                 DistanceKind kind = DistanceKind::RelativeEntropy);

struct PureQuantumness {
  double value = 0.0;
  DensityMatrix closest;  // sum_i c_i^2 |ii><ii| in the Schmidt basis, original order
  SchmidtData schmidt;
};

PureQuantumness q_pure(const PureStateVector& psi, const Bipartition& cut);

}  // namespace qzoo
