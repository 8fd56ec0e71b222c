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

#include "qzoo/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qzoo/error.hpp"
#include "qzoo/random.hpp"

namespace qzoo {

namespace {

// Eigenvalue gap needed before a basis counts as forced by a spectrum.
constexpr double kForcingGap = 1e-6;
// Violations above this are decisive at the exact stages; smaller ones are
// left to the next stage.
constexpr double kClearViolation = 1e-6;
// Eigenvalues at or below this are outside the support.
constexpr double kSupportCutoff = 1e-9;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << (std::abs(x) < 1e-12 ? 0.0 : x);
  return os.str();
}

std::string subsystem_index_string(const DimensionProfile& profile, std::size_t k,
                                   std::size_t rest_index) {
  // Digits of the complement of subsystem k, joined without separators.
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j != k) dims.push_back(profile.dim(j));
  }
  std::string out;
  if (dims.empty()) return out;
  const auto digits = DimensionProfile(dims).digits(rest_index);
  for (std::size_t d : digits) out += std::to_string(d);
  return out;
}

// d_k x d_k blocks <., r| m |., s> for all complement indices r, s.
struct Block {
  std::size_t member;
  std::size_t r;
  std::size_t s;
  CMatrix m;
};

std::vector<Block> subsystem_blocks(const CMatrix& m, const DimensionProfile& profile,
                                    std::size_t k, std::size_t member) {
  std::vector<std::size_t> order{k};
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j != k) order.push_back(j);
  }
  const CMatrix p = permute_subsystems(m, profile, order);
  const auto d = static_cast<Eigen::Index>(profile.dim(k));
  const auto rest = static_cast<Eigen::Index>(profile.total()) / d;
  std::vector<Block> out;
  for (Eigen::Index r = 0; r < rest; ++r) {
    for (Eigen::Index s = 0; s < rest; ++s) {
      CMatrix b(d, d);
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) b(i, j) = p(i * rest + r, j * rest + s);
      }
      if (b.norm() > 1e-14) {
        out.push_back({member, static_cast<std::size_t>(r), static_cast<std::size_t>(s), b});
      }
    }
  }
  return out;
}

struct CommutatorCheck {
  double worst = 0.0;
  std::string description;
};

CommutatorCheck check_commuting(const std::vector<Block>& blocks, const DimensionProfile& profile,
                                std::size_t k, bool several_members) {
  CommutatorCheck out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const double c = (blocks[i].m * blocks[j].m - blocks[j].m * blocks[i].m).norm();
      if (c > out.worst) {
        out.worst = c;
        auto name = [&](const Block& b) {
          std::string s = "<." + subsystem_index_string(profile, k, b.r) + "|rho";
          if (several_members) s += "_" + std::to_string(b.member);
          return s + "|." + subsystem_index_string(profile, k, b.s) + ">";
        };
        out.description = "subsystem " + std::to_string(k) + ": blocks " + name(blocks[i]) +
                          " and " + name(blocks[j]) + " do not commute (||[A,B]||_F = " +
                          fmt(c) + ")";
      }
    }
  }
  return out;
}

// Common eigenbasis of a commuting Hermitian family via a generic combination.
CMatrix joint_eigenbasis(const std::vector<Block>& blocks, std::size_t d, std::size_t k,
                         const CMatrix& marginal) {
  Rng rng = make_rng(0x5eedULL, k);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix h = CMatrix::Zero(n, n);
  for (const auto& b : blocks) {
    const double w1 = weight(rng);
    const double w2 = weight(rng);
    h += w1 * (b.m + b.m.adjoint()) + Complex(0.0, w2) * (b.m - b.m.adjoint());
  }
  const Spectrum spec = eig_hermitian(0.5 * (h + h.adjoint()));
  // Present the basis ordered by weight in the marginal.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::vector<double> weights(static_cast<std::size_t>(n));
  // Equal weights fall back to the position of the dominant component.
  std::vector<Eigen::Index> lead(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    order[static_cast<std::size_t>(i)] = i;
    weights[static_cast<std::size_t>(i)] =
        (spec.vectors.col(i).adjoint() * marginal * spec.vectors.col(i))(0).real();
    const auto mags = spec.vectors.col(i).cwiseAbs().eval();
    Eigen::Index best = 0;
    for (Eigen::Index r = 1; r < n; ++r)
      if (mags(r) > mags(best) + 1e-9) best = r;
    lead[static_cast<std::size_t>(i)] = best;
  }
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double wa = weights[static_cast<std::size_t>(a)];
    const double wb = weights[static_cast<std::size_t>(b)];
    if (std::abs(wa - wb) > 1e-12) return wa > wb;
    return lead[static_cast<std::size_t>(a)] < lead[static_cast<std::size_t>(b)];
  });
  CMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out.col(i) = spec.vectors.col(order[static_cast<std::size_t>(i)]);
  return out;
}

double max_mass(std::span<const CMatrix> members, const CMatrix& u) {
  double worst = 0.0;
  for (const auto& m : members) worst = std::max(worst, off_diagonal_mass(m, u));
  return worst;
}

ClassicalBasis basis_from_unitaries(const DimensionProfile& profile,
                                    const std::vector<CMatrix>& unitaries) {
  std::vector<LocalBasis> local;
  for (const auto& u : unitaries) {
    // Re-orthonormalize: Givens products drift by rounding only.
    Eigen::HouseholderQR<CMatrix> qr(u);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR();
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
      const double mag = std::abs(r(c, c));
      if (mag > 0.0) q.col(c) *= r(c, c) / mag;
    }
    local.emplace_back(std::move(q));
  }
  return ClassicalBasis(profile, std::move(local));
}

std::vector<CMatrix> marginal_eigenbases(const CMatrix& m, const DimensionProfile& profile,
                                         double* smallest_gap = nullptr) {
  std::vector<CMatrix> out;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const std::size_t keep[] = {k};
    const Spectrum s = eig_hermitian(partial_trace_matrix(m, profile, keep));
    gap = std::min(gap, min_gap(s.values));
    out.push_back(s.vectors);
  }
  if (smallest_gap) *smallest_gap = gap;
  return out;
}

ClassicalityResult decide_classicality(std::span<const CMatrix> members,
                                       const DimensionProfile& profile,
                                       const ClassifyOptions& options) {
  ClassicalityResult out;
  const bool single = members.size() == 1;

  if (single) {
    const CMatrix& rho = members[0];
    // Forced by the marginals.
    double gap = 0.0;
    const auto bases = marginal_eigenbases(rho, profile, &gap);
    if (gap >= kForcingGap) {
      const ClassicalBasis basis = basis_from_unitaries(profile, bases);
      const double mass = off_diagonal_mass(rho, basis.product_matrix());
      out.stage = ClassicalityStage::MarginalEigenbasis;
      out.residual = mass;
      if (mass <= options.tol_diag) {
        out.decision = Decision::Yes;
        out.certified = true;
        out.witness = basis;
        return out;
      }
      if (mass > kClearViolation) {
        out.decision = Decision::No;
        out.certified = true;
        out.obstruction = "all marginals are nondegenerate, so the only candidate basis is "
                          "the product of their eigenbases, which leaves off-diagonal mass " +
                          fmt(mass);
        return out;
      }
    }

    // Forced by the spectrum.
    const Spectrum spec = eig_hermitian(rho);
    if (min_gap(spec.values) >= kForcingGap) {
      out.stage = ClassicalityStage::Spectral;
      std::vector<CVector> vectors;
      bool decisive_no = false;
      for (Eigen::Index i = 0; i < spec.vectors.cols(); ++i) {
        const ProductTest t = is_product_vector(spec.vectors.col(i), profile);
        if (!t.is_product) {
          if (t.residual > kClearViolation) {
            out.decision = Decision::No;
            out.certified = true;
            out.residual = t.residual;
            out.obstruction = "eigenvector " + std::to_string(i) + " (nondegenerate eigenvalue " +
                              fmt(spec.values[i]) + ") is entangled (Schmidt residual " +
                              fmt(t.residual) + ")";
            return out;
          }
          decisive_no = false;
          vectors.clear();
          break;
        }
        vectors.push_back(spec.vectors.col(i));
      }
      (void)decisive_no;
      if (vectors.size() == profile.total()) {
        const auto check = classical_basis_from_vectors(std::span<const CVector>(vectors), profile);
        if (check) {
          const double mass = off_diagonal_mass(rho, check.basis->product_matrix());
          if (mass <= options.tol_diag) {
            out.decision = Decision::Yes;
            out.certified = true;
            out.residual = mass;
            out.witness = *check.basis;
            return out;
          }
        } else if (check.failure->kind == BasisFailureKind::LocalFactorsNotOrthonormal ||
                   check.failure->kind == BasisFailureKind::MissingCombination) {
          out.decision = Decision::No;
          out.certified = true;
          out.obstruction = "the eigenbasis is forced and is a non-classical product basis: " +
                            check.failure->message;
          return out;
        }
      }
    }
  }

  // Exact algebraic test.
  out.stage = ClassicalityStage::CommutingBlocks;
  std::vector<LocalBasis> local;
  bool gray = false;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    std::vector<Block> blocks;
    for (std::size_t m = 0; m < members.size(); ++m) {
      auto b = subsystem_blocks(members[m], profile, k, m);
      blocks.insert(blocks.end(), std::make_move_iterator(b.begin()),
                    std::make_move_iterator(b.end()));
    }
    const CommutatorCheck c = check_commuting(blocks, profile, k, !single);
    if (c.worst > kClearViolation) {
      out.decision = Decision::No;
      out.certified = true;
      out.residual = c.worst;
      out.obstruction = c.description;
      return out;
    }
    if (c.worst > options.tol_diag) gray = true;
    CMatrix marginal = CMatrix::Zero(static_cast<Eigen::Index>(profile.dim(k)),
                                     static_cast<Eigen::Index>(profile.dim(k)));
    const std::size_t keep[] = {k};
    for (const auto& m : members) marginal += partial_trace_matrix(m, profile, keep);
    local.emplace_back(joint_eigenbasis(blocks, profile.dim(k), k, marginal));
  }
  {
    ClassicalBasis basis(profile, std::move(local));
    const double mass = max_mass(members, basis.product_matrix());
    out.residual = mass;
    if (mass <= options.tol_diag) {
      out.decision = Decision::Yes;
      out.certified = true;
      out.witness = std::move(basis);
      return out;
    }
  }
  (void)gray;

  // Numerical fallback on a generic mixture of the members.
  out.stage = ClassicalityStage::LocalUnitarySearch;
  CMatrix target = members[0];
  if (!single) {
    const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    target = CMatrix::Zero(members[0].rows(), members[0].cols());
    double total = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const double w = i < std::size(primes) ? primes[i] : 53.0 + 2.0 * static_cast<double>(i);
      target += w * members[i];
      total += w;
    }
    target /= total;
  }
  std::vector<std::vector<CMatrix>> starts;
  starts.push_back(marginal_eigenbases(target, profile));
  {
    std::vector<CMatrix> ident;
    for (std::size_t d : profile.dims()) {
      ident.push_back(CMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    }
    starts.push_back(std::move(ident));
  }
  const SearchResult sr = minimize_over_local_unitaries(
      target, profile, LocalObjective::OffDiagonalMass, options.search, starts);
  const ClassicalBasis basis = basis_from_unitaries(profile, sr.unitaries);
  const double mass = max_mass(members, basis.product_matrix());
  out.residual = mass;
  if (mass <= options.tol_diag) {
    out.decision = Decision::Yes;
    out.certified = true;  // the witness itself is checked
    out.witness = basis;
  } else if (sr.objective >= options.tol_gray) {
    out.decision = Decision::No;
    out.certified = false;
    out.obstruction = "local-unitary search over " + std::to_string(sr.restarts) +
                      " restarts left off-diagonal mass " + fmt(sr.objective);
  } else {
    out.decision = Decision::Inconclusive;
    out.certified = false;
    out.obstruction = "local-unitary search stalled at off-diagonal mass " + fmt(sr.objective) +
                      ", between tolerance and the gray-zone bound";
  }
  return out;
}

std::string describe(Decision d, bool certified) {
  std::string s(to_string(d));
  if (d == Decision::No && !certified) s += " (numerical)";
  return s;
}

}  // namespace

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(ClassicalityStage s) {
  switch (s) {
    case ClassicalityStage::MarginalEigenbasis: return "marginal-eigenbasis";
    case ClassicalityStage::Spectral: return "spectral";
    case ClassicalityStage::CommutingBlocks: return "commuting-blocks";
    case ClassicalityStage::LocalUnitarySearch: return "local-unitary-search";
  }
  return "?";
}

std::string_view to_string(Separability s) {
  switch (s) {
    case Separability::Separable: return "separable";
    case Separability::Entangled: return "entangled";
    case Separability::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(ZooClass c) {
  switch (c) {
    case ZooClass::Classical: return "classical";
    case ZooClass::CPBNonclassical: return "cpb-nonclassical";
    case ZooClass::UPBState: return "upb-state";
    case ZooClass::EntangledBasisSeparable: return "entangled-basis-separable";
    case ZooClass::Entangled: return "entangled";
    case ZooClass::UndeterminedSeparability: return "undetermined-separability";
  }
  return "?";
}

std::optional<ZooClass> zoo_class_from_string(std::string_view s) {
  for (ZooClass c : {ZooClass::Classical, ZooClass::CPBNonclassical, ZooClass::UPBState,
                     ZooClass::EntangledBasisSeparable, ZooClass::Entangled,
                     ZooClass::UndeterminedSeparability}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

ClassicalityResult is_classical(const DensityMatrix& rho, const ClassifyOptions& options) {
  const CMatrix m = rho.matrix();
  return decide_classicality(std::span<const CMatrix>(&m, 1), rho.profile(), options);
}

ClassicalityResult is_classical_set(std::span<const DensityMatrix> states,
                                    const ClassifyOptions& options) {
  if (states.empty()) throw Error(ErrorCode::InvalidArgument, "empty set of states");
  std::vector<CMatrix> members;
  for (const auto& s : states) {
    if (s.profile() != states[0].profile()) {
      throw Error(ErrorCode::ProfileMismatch, "states in a set must share one profile");
    }
    members.push_back(s.matrix());
  }
  if (members.size() == 1) return is_classical(states[0], options);
  return decide_classicality(members, states[0].profile(), options);
}

// ---------------------------------------------------------------------------
// Product-basis classes

ProductStateSearch subspace_contains_product_state(const CMatrix& projector,
                                                   const DimensionProfile& profile,
                                                   const ProductSearchConfig& config) {
  const auto n = static_cast<Eigen::Index>(profile.total());
  if (projector.rows() != n || projector.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "projector does not match profile");
  }
  if (!is_hermitian(projector, 1e-8) ||
      (projector * projector - projector).cwiseAbs().maxCoeff() > 1e-8) {
    throw Error(ErrorCode::NotAProjector, "operator is not a Hermitian idempotent");
  }
  ProductStateSearch out;
  const SeesawResult s = maximize_product_overlap(projector, profile, config);
  out.best_overlap = s.best_overlap;
  out.restarts_used = s.restarts_used;
  if (s.best_overlap >= 1.0 - config.tol_prod) {
    out.decision = Decision::Yes;
    out.witness = s.best;
  } else if (s.best_overlap <= 1.0 - config.margin_prod) {
    out.decision = Decision::No;
  } else {
    out.decision = Decision::Inconclusive;
  }
  return out;
}

namespace {

struct SpaceBasisOutcome {
  Decision decision = Decision::Yes;
  bool certified = true;
  std::vector<ProductVector> vectors;
  double overlap = 1.0;
  std::string note;
};

// Product basis for each eigenspace in turn; nondegenerate ones first since
// they decide exactly.
SpaceBasisOutcome product_basis_for_spaces(const std::vector<Eigenspace>& spaces,
                                           const DimensionProfile& profile,
                                           const ClassifyOptions& options) {
  SpaceBasisOutcome out;
  std::vector<std::vector<ProductVector>> per_space(spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (spaces[i].basis.cols() != 1) continue;
    const ProductTest t = is_product_vector(spaces[i].basis.col(0), profile);
    if (!t.is_product) {
      out.decision = Decision::No;
      out.certified = true;
      out.note = "the eigenvector of the nondegenerate eigenvalue " + fmt(spaces[i].value) +
                 " is entangled (Schmidt residual " + fmt(t.residual) + ")";
      return out;
    }
    per_space[i].push_back({t.factors});
  }
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (spaces[i].basis.cols() == 1) continue;
    ProductSearchConfig cfg = options.product;
    cfg.seed = options.product.seed + i;
    const ProductBasisSearch s = find_product_basis(spaces[i].basis, profile, cfg);
    if (!s.found) {
      out.overlap = s.overlap;
      out.certified = false;
      if (s.empty_of_products && s.overlap > 1.0 - options.product.margin_prod) {
        out.decision = Decision::Inconclusive;
        out.note = "seesaw in the " + std::to_string(spaces[i].basis.cols()) +
                   "-dimensional eigenspace of " + fmt(spaces[i].value) +
                   " stalled at overlap " + fmt(s.overlap);
      } else {
        out.decision = Decision::No;
        out.note = s.empty_of_products
                       ? "no product vector found in the " +
                             std::to_string(spaces[i].basis.cols()) +
                             "-dimensional eigenspace of " + fmt(spaces[i].value) +
                             " (best overlap " + fmt(s.overlap) + ")"
                       : "greedy product-basis deflation dead-ended in the eigenspace of " +
                             fmt(spaces[i].value);
      }
      return out;
    }
    out.overlap = std::min(out.overlap, s.overlap);
    per_space[i] = s.vectors;
  }
  for (auto& v : per_space) {
    out.vectors.insert(out.vectors.end(), std::make_move_iterator(v.begin()),
                       std::make_move_iterator(v.end()));
  }
  return out;
}

}  // namespace

CpbResult is_cpb_state(const DensityMatrix& rho, const ClassifyOptions& options) {
  CpbResult out;
  const Spectrum spec = eig_hermitian(rho.matrix());
  const auto spaces = eigenspaces(spec);
  SpaceBasisOutcome s = product_basis_for_spaces(spaces, rho.profile(), options);
  out.overlap = s.overlap;
  out.note = s.note;
  if (s.decision != Decision::Yes) {
    out.decision = s.decision;
    out.certified = s.certified;
    return out;
  }
  try {
    ProductBasisSet witness(rho.profile(), std::move(s.vectors));
    const double mass = off_diagonal_mass(rho.matrix(), witness.matrix());
    if (mass > options.tol_diag) {
      out.decision = Decision::Inconclusive;
      out.note = "product basis found but leaves off-diagonal mass " + fmt(mass);
      return out;
    }
    out.decision = Decision::Yes;
    out.certified = true;
    out.witness = std::move(witness);
  } catch (const Error& e) {
    out.decision = Decision::Inconclusive;
    out.note = std::string("product basis failed verification: ") + e.what();
  }
  return out;
}

UpbResult is_upb_state(const DensityMatrix& rho, const ClassifyOptions& options) {
  UpbResult out;
  const Spectrum spec = eig_hermitian(rho.matrix());
  const auto all = eigenspaces(spec);
  std::vector<Eigenspace> support;
  Eigen::Index rank = 0;
  for (const auto& e : all) {
    if (e.value > kSupportCutoff) {
      support.push_back(e);
      rank += e.basis.cols();
    }
  }
  if (rank == static_cast<Eigen::Index>(rho.dim())) {
    out.decision = Decision::No;
    out.certified = true;
    out.note = "full rank: the support leaves no room for an unextendible set";
    return out;
  }

  SpaceBasisOutcome s = product_basis_for_spaces(support, rho.profile(), options);
  if (s.decision != Decision::Yes) {
    out.decision = s.decision;
    out.certified = s.certified;
    out.note = "support: " + s.note;
    return out;
  }
  std::optional<ProductBasisSet> witness;
  try {
    witness.emplace(rho.profile(), std::move(s.vectors));
  } catch (const Error& e) {
    out.decision = Decision::Inconclusive;
    out.note = std::string("support product basis failed verification: ") + e.what();
    return out;
  }
  const double mass = off_diagonal_mass(rho.matrix(), witness->matrix());
  if (mass > options.tol_diag) {
    out.decision = Decision::Inconclusive;
    out.note = "support product basis leaves off-diagonal mass " + fmt(mass);
    return out;
  }

  const CMatrix support_matrix = witness->matrix();
  CMatrix kernel = CMatrix::Identity(support_matrix.rows(), support_matrix.rows()) -
                   support_matrix * support_matrix.adjoint();
  kernel = 0.5 * (kernel + kernel.adjoint()).eval();
  const ProductStateSearch k = subspace_contains_product_state(kernel, rho.profile(),
                                                               options.product);
  out.kernel_best_overlap = k.best_overlap;
  out.witness = std::move(witness);
  switch (k.decision) {
    case Decision::Yes:
      out.decision = Decision::No;
      out.certified = true;
      out.note = "the orthocomplement of the support contains a product vector, so the "
                 "support's product basis is extendible";
      break;
    case Decision::No:
      out.decision = Decision::Yes;
      out.certified = false;
      out.note = "no product vector in the orthocomplement over " +
                 std::to_string(k.restarts_used) + " seesaw restarts (best overlap " +
                 fmt(k.best_overlap) + ")";
      break;
    case Decision::Inconclusive:
      out.decision = Decision::Inconclusive;
      out.note = "seesaw in the orthocomplement stalled at overlap " + fmt(k.best_overlap);
      break;
  }
  return out;
}

PptResult is_ppt(const DensityMatrix& rho, const Bipartition& cut) {
  if (cut.subsystem_count() != rho.profile().size()) {
    throw Error(ErrorCode::InvalidCut, "cut does not match the state's profile");
  }
  const CMatrix pt = partial_transpose(rho.matrix(), rho.profile(), cut.side_b());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  PptResult out{cut};
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.ppt = out.min_eigenvalue >= -tol::kPsd;
  const std::size_t lo = std::min(cut.dim_a(), cut.dim_b());
  const std::size_t hi = std::max(cut.dim_a(), cut.dim_b());
  const bool exact = lo == 2 && (hi == 2 || hi == 3);
  if (!out.ppt) {
    out.separability = Separability::Entangled;
  } else {
    out.separability = exact ? Separability::Separable : Separability::Undetermined;
  }
  return out;
}

// ---------------------------------------------------------------------------

ClassificationReport classify_zoo(const DensityMatrix& rho, const ClassifyOptions& options) {
  ClassificationReport report;
  report.classical = is_classical(rho, options);
  const auto& cls = report.classical;
  report.diagnostics.push_back("is_classical: " + describe(cls.decision, cls.certified) +
                               " [" + std::string(to_string(cls.stage)) + "]");
  if (cls.decision == Decision::Yes) {
    report.verdict = ZooClass::Classical;
    report.witness = *cls.witness;
    return report;
  }
  if (!cls.obstruction.empty()) report.diagnostics.push_back(cls.obstruction);
  bool definite = cls.decision != Decision::Inconclusive;

  for (const auto& cut : all_bipartitions(rho.profile())) {
    report.ppt.push_back(is_ppt(rho, cut));
  }
  for (const auto& p : report.ppt) {
    if (!p.ppt) {
      // NPT settles it: product-diagonal states are all PPT.
      report.verdict = ZooClass::Entangled;
      report.witness = p;
      report.definite = true;
      report.diagnostics.push_back("partial transpose has eigenvalue " + fmt(p.min_eigenvalue));
      return report;
    }
  }

  report.cpb = is_cpb_state(rho, options);
  report.diagnostics.push_back("is_cpb_state: " +
                               describe(report.cpb->decision, report.cpb->certified));
  if (!report.cpb->note.empty()) report.diagnostics.push_back(report.cpb->note);
  if (report.cpb->decision == Decision::Yes) {
    report.verdict = ZooClass::CPBNonclassical;
    report.witness = *report.cpb->witness;
    report.definite = definite;
    return report;
  }
  definite = definite && report.cpb->decision != Decision::Inconclusive;

  report.upb = is_upb_state(rho, options);
  report.diagnostics.push_back("is_upb_state: " +
                               describe(report.upb->decision, report.upb->certified));
  if (!report.upb->note.empty()) report.diagnostics.push_back(report.upb->note);
  if (report.upb->decision == Decision::Yes) {
    report.verdict = ZooClass::UPBState;
    report.witness = *report.upb->witness;
    report.definite = definite;
    return report;
  }
  definite = definite && report.upb->decision != Decision::Inconclusive;

  const bool separable =
      !report.ppt.empty() &&
      std::all_of(report.ppt.begin(), report.ppt.end(),
                  [](const PptResult& p) { return p.separability == Separability::Separable; });
  report.verdict = separable ? ZooClass::EntangledBasisSeparable
                             : ZooClass::UndeterminedSeparability;
  if (!cls.obstruction.empty()) report.witness = ObstructionNote{cls.obstruction};
  report.definite = definite;
  return report;
}

}  // namespace qzoo
