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

// Minimization of basis-dependent objectives over products of local
// unitaries U = U_0 (x) U_1 (x) ... The search is derivative-free coordinate
// descent: each coordinate is a complex Givens rotation between two local
// basis vectors, and each line search is a coarse scan followed by
// golden-section refinement. Both objectives depend only on the diagonal of
// U^dagger rho U, so a trial rotation costs O(N).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qzoo/state.hpp"

namespace qzoo {

enum class LocalObjective {
  // Frobenius norm of the off-diagonal part of U^dagger rho U.
  OffDiagonalMass,
  // Shannon entropy (bits) of the diagonal of U^dagger rho U.
  DiagonalEntropy,
};

struct SearchConfig {
  std::size_t restarts = 32;
  std::uint64_t seed = 42;
  std::size_t max_sweeps = 500;
  double sweep_tol = 1e-12;
  // Restarts are independent; results are merged by best objective, then
  // lowest restart index, so the answer does not depend on this.
  unsigned threads = 1;
};

struct SearchResult {
  std::vector<CMatrix> unitaries;  // columns are the local basis vectors
  double objective = 0.0;
  bool converged = false;
  std::size_t best_restart = 0;
  std::size_t sweeps = 0;  // of the winning restart
  std::size_t restarts = 0;
};

double local_objective(const CMatrix& rho, const DimensionProfile& profile,
                       std::span<const CMatrix> unitaries, LocalObjective objective);

/// Restart i starts from starts[i] when given, otherwise from independent
/// Haar-random local unitaries drawn from (config.seed, i).
SearchResult minimize_over_local_unitaries(const CMatrix& rho, const DimensionProfile& profile,
                                           LocalObjective objective, const SearchConfig& config,
                                           std::span<const std::vector<CMatrix>> starts = {});

}  // namespace qzoo
