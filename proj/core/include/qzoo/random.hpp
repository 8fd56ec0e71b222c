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

#include <cstdint>
#include <random>
#include <vector>

#include "qzoo/state.hpp"

namespace qzoo {

using Rng = std::mt19937_64;

// Independent stream per (seed, stream) pair; restarts use their index.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

CMatrix haar_unitary(std::size_t d, Rng& rng);
CVector random_unit_vector(std::size_t d, Rng& rng);
// Hilbert-Schmidt (Ginibre) measure, full rank almost surely.
CMatrix random_density_matrix(std::size_t n, Rng& rng);
// Uniform on the simplex.
std::vector<double> random_probabilities(std::size_t n, Rng& rng);

}  // namespace qzoo
