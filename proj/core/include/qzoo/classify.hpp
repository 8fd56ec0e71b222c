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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qzoo/bases.hpp"
#include "qzoo/local_search.hpp"
#include "qzoo/product_search.hpp"
#include "qzoo/state.hpp"

namespace qzoo {

enum class Decision { Yes, No, Inconclusive };
std::string_view to_string(Decision d);

struct ClassifyOptions {
  double tol_diag = 1e-8;   // off-diagonal Frobenius mass accepted as diagonal
  double tol_gray = 1e-4;   // optimizer residuals below this are inconclusive
  SearchConfig search{};
  ProductSearchConfig product{};
};

enum class ClassicalityStage {
  MarginalEigenbasis,  // all marginals nondegenerate: the basis is forced
  Spectral,            // nondegenerate spectrum: the eigenbasis is forced
  CommutingBlocks,     // exact test on the per-subsystem operator blocks
  LocalUnitarySearch,  // numerical fallback
};
std::string_view to_string(ClassicalityStage s);

struct ClassicalityResult {
  Decision decision = Decision::Inconclusive;
  // False when the answer rests on an optimizer residual.
  bool certified = false;
  ClassicalityStage stage = ClassicalityStage::MarginalEigenbasis;
  std::optional<ClassicalBasis> witness;
  // Why no classical basis exists, when decision is No.
  std::string obstruction;
  // Off-diagonal mass in the witness (Yes) or best basis found (search).
  double residual = 0.0;
};

/// Def.-level classicality: does some classical basis diagonalize rho?
///
/// A product basis (x)_k B_k diagonalizes rho iff for every subsystem k all
/// blocks rho^{(k)}_{rs} = <., r| rho |., s> (r, s running over the other
/// subsystems) are diagonal in B_k, i.e. the blocks form a commuting family.
/// The fast paths handle the cases where the basis is forced outright.
ClassicalityResult is_classical(const DensityMatrix& rho, const ClassifyOptions& options = {});

/// One classical basis diagonalizing every member of the set.
ClassicalityResult is_classical_set(std::span<const DensityMatrix> states,
                                    const ClassifyOptions& options = {});

struct CpbResult {
  Decision decision = Decision::Inconclusive;
  bool certified = false;
  std::optional<ProductBasisSet> witness;
  std::string note;
  double overlap = 1.0;  // worst seesaw overlap involved in the answer
};

CpbResult is_cpb_state(const DensityMatrix& rho, const ClassifyOptions& options = {});

struct ProductStateSearch {
  Decision decision = Decision::Inconclusive;
  std::optional<ProductVector> witness;
  double best_overlap = 0.0;
  std::size_t restarts_used = 0;
};

ProductStateSearch subspace_contains_product_state(const CMatrix& projector,
                                                   const DimensionProfile& profile,
                                                   const ProductSearchConfig& config = {});

struct UpbResult {
  Decision decision = Decision::Inconclusive;
  bool certified = false;
  std::optional<ProductBasisSet> witness;  // product basis of the support
  double kernel_best_overlap = 0.0;
  std::string note;
};

UpbResult is_upb_state(const DensityMatrix& rho, const ClassifyOptions& options = {});

enum class Separability { Separable, Entangled, Undetermined };
std::string_view to_string(Separability s);

struct PptResult {
  Bipartition cut;
  bool ppt = false;
  double min_eigenvalue = 0.0;
  Separability separability = Separability::Undetermined;
};

/// Partial transpose over side B of the cut. PPT decides separability for
/// 2x2 and 2x3; otherwise PPT is only necessary.
PptResult is_ppt(const DensityMatrix& rho, const Bipartition& cut);

enum class ZooClass {
  Classical,
  CPBNonclassical,
  UPBState,
  EntangledBasisSeparable,
  Entangled,
  UndeterminedSeparability,
};
std::string_view to_string(ZooClass c);
std::optional<ZooClass> zoo_class_from_string(std::string_view s);

struct ObstructionNote {
  std::string text;
};

using Witness =
    std::variant<std::monostate, ClassicalBasis, ProductBasisSet, ObstructionNote, PptResult>;

struct ClassificationReport {
  ZooClass verdict = ZooClass::UndeterminedSeparability;
  // False when any step that shaped the verdict was inconclusive.
  bool definite = true;
  Witness witness;
  std::vector<std::string> diagnostics;
  ClassicalityResult classical;
  std::optional<CpbResult> cpb;
  std::optional<UpbResult> upb;
  std::vector<PptResult> ppt;
};

/// is_classical -> PPT on every cut -> is_cpb_state -> is_upb_state; the most
/// specific class established wins.
ClassificationReport classify_zoo(const DensityMatrix& rho, const ClassifyOptions& options = {});

}  // namespace qzoo
