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

#include "qzoo/zoo.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>

#include "qzoo/error.hpp"

namespace qzoo {

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

CVector ket(std::initializer_list<Complex> amps) {
  CVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (Complex a : amps) v[i++] = a;
  return v;
}

CVector k0() { return ket({1.0, 0.0}); }
CVector k1() { return ket({0.0, 1.0}); }
CVector kp() { return ket({kR, kR}); }
CVector km() { return ket({kR, -kR}); }

CVector basis_ket(std::size_t d, std::size_t i) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d));
  v[static_cast<Eigen::Index>(i)] = 1.0;
  return v;
}

ProductVector pv(std::vector<CVector> factors) { return ProductVector{std::move(factors)}; }

CMatrix projector(const CVector& v) { return v * v.adjoint(); }
CMatrix projector(const ProductVector& p) { return projector(p.vector()); }

double parse_number(const std::string& key, const std::string& text) {
  auto parse = [&](std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "parameter " + key + ": cannot parse '" + text + "' as a number");
    }
    return x;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse(text);
  const double den = parse(std::string_view(text).substr(slash + 1));
  if (den == 0.0) throw Error(ErrorCode::InvalidArgument, "parameter " + key + ": zero denominator");
  return parse(std::string_view(text).substr(0, slash)) / den;
}

struct Recipe {
  CMatrix matrix;
  std::vector<std::size_t> dims;
  std::optional<ZooClass> expected;
};

using Builder = std::function<Recipe(const Params&)>;

struct Definition {
  CatalogInfo info;
  Builder builder;
};

double numeric(const Params& p, const std::string& key) { return parse_number(key, p.at(key)); }

void out_of_range(const std::string& key, double value, const std::string& range) {
  throw Error(ErrorCode::ParamOutOfRange,
              "parameter " + key + " = " + std::to_string(value) + " outside " + range, value);
}

Recipe fixed(std::vector<std::size_t> dims, CMatrix m, std::optional<ZooClass> expected) {
  return Recipe{std::move(m), std::move(dims), expected};
}

CMatrix bb84(const CVector& b0, const CVector& b1) {
  return 0.5 * (projector(kron(k0(), b0)) + projector(kron(k1(), b1)));
}

CMatrix pure(const CVector& v) { return projector(v); }

CVector bell(int which) {
  switch (which) {
    case 0: return ket({kR, 0.0, 0.0, kR});
    case 1: return ket({kR, 0.0, 0.0, -kR});
    case 2: return ket({0.0, kR, kR, 0.0});
    default: return ket({0.0, kR, -kR, 0.0});
  }
}

std::vector<double> nlwe_default() {
  std::vector<double> p(8);
  for (std::size_t k = 0; k < 8; ++k) p[k] = static_cast<double>(k + 1) / 36.0;
  return p;
}

CMatrix mixture(const std::vector<ProductVector>& elements, const std::vector<double>& weights) {
  const auto n = static_cast<Eigen::Index>(elements.front().vector().size());
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < elements.size(); ++i) m += weights[i] * projector(elements[i]);
  return m;
}

const std::vector<Definition>& registry();

Recipe build_werner(const Params& p) {
  const double eps = numeric(p, "eps");
  if (eps < -1.0 / 3.0 - 1e-12 || eps > 1.0 + 1e-12) out_of_range("eps", eps, "[-1/3, 1]");
  const CMatrix m =
      eps * projector(bell(3)) + (1.0 - eps) / 4.0 * CMatrix::Identity(4, 4);
  std::optional<ZooClass> expected;
  if (eps == 0.0) {
    expected = ZooClass::Classical;
  } else if (eps <= 1.0 / 3.0 + 1e-12) {
    expected = ZooClass::EntangledBasisSeparable;
  } else {
    expected = ZooClass::Entangled;
  }
  return {m, {2, 2}, expected};
}

Recipe build_pps(const Params& p) {
  const double eps = numeric(p, "eps");
  if (eps < 0.0 || eps > 1.0) out_of_range("eps", eps, "[0, 1]");
  const std::string& base = p.at("base");
  if (base == "pps") throw Error(ErrorCode::InvalidArgument, "pps cannot wrap itself");
  const DensityMatrix mixed = pps(build(base).state, eps);
  const auto dims = mixed.profile().dims();
  return {mixed.matrix(), {dims.begin(), dims.end()}, std::nullopt};
}

Recipe build_nlwe(const Params& p) {
  std::vector<double> w(8);
  double total = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    const std::string key = "p" + std::to_string(k + 1);
    w[k] = numeric(p, key);
    if (w[k] < 0.0) out_of_range(key, w[k], "[0, inf)");
    total += w[k];
  }
  if (total <= 0.0) throw Error(ErrorCode::ParamOutOfRange, "nlwe weights sum to zero", total);
  for (double& x : w) x /= total;

  auto all_close = [&](const std::vector<double>& ref) {
    for (std::size_t k = 0; k < 8; ++k) {
      if (std::abs(w[k] - ref[k]) > 1e-12) return false;
    }
    return true;
  };
  std::optional<ZooClass> expected;
  if (all_close(std::vector<double>(8, 0.125))) {
    expected = ZooClass::Classical;
  } else if (all_close(nlwe_default())) {
    expected = ZooClass::CPBNonclassical;
  }
  return {mixture(nlwe_basis().elements(), w), {2, 2, 2}, expected};
}

Recipe build_eps_upb(const Params& p) {
  const double eps = numeric(p, "eps");
  if (eps <= 0.0 || eps >= 1.0 / 6.0) out_of_range("eps", eps, "(0, 1/6)");
  const auto set = shifts_upb_minus();
  return {mixture(set.elements(), {1.0 - 6.0 * eps, eps, 2.0 * eps, 3.0 * eps}),
          {2, 2, 2},
          ZooClass::UPBState};
}

Recipe build_max_entangled(const Params& p) {
  const double raw = numeric(p, "d");
  if (raw != std::floor(raw) || raw < 2.0 || raw > 16.0) out_of_range("d", raw, "{2, ..., 16}");
  const auto d = static_cast<std::size_t>(raw);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t i = 0; i < d; ++i) v[static_cast<Eigen::Index>(i * d + i)] = 1.0;
  v /= std::sqrt(static_cast<double>(d));
  return {pure(v), {d, d}, ZooClass::Entangled};
}

const std::vector<Definition>& registry() {
  static const std::vector<Definition> defs = [] {
    std::vector<Definition> d;
    auto add = [&](std::string name, std::vector<std::size_t> dims, std::vector<ParamSpec> params,
                   std::vector<std::string> annotations, std::string origin, Builder b) {
      d.push_back({CatalogInfo{std::move(name), std::move(dims), std::move(params),
                               std::move(annotations), std::move(origin)},
                   std::move(b)});
    };

    add("werner", {2, 2}, {{"eps", "0.2", "[-1/3, 1]"}}, {},
        "singlet mixed with white noise; separable for eps <= 1/3", build_werner);
    add("pps", {}, {{"base", "bell_phi_plus", "catalog name"}, {"eps", "0.1", "[0, 1]"}}, {},
        "pseudo-pure state: a catalog state mixed with white noise", build_pps);
    add("bb84_rho0", {2, 2}, {}, {"unidirectional CPB-state"},
        "BB84 bit 0 with the basis choice kept as a qubit",
        [](const Params&) { return fixed({2, 2}, bb84(k0(), kp()), ZooClass::CPBNonclassical); });
    add("bb84_rho1", {2, 2}, {}, {"unidirectional CPB-state"},
        "BB84 bit 1 with the basis choice kept as a qubit",
        [](const Params&) { return fixed({2, 2}, bb84(k1(), km()), ZooClass::CPBNonclassical); });
    {
      std::vector<ParamSpec> ps;
      const auto def = nlwe_default();
      for (std::size_t k = 0; k < 8; ++k) {
        ps.push_back({"p" + std::to_string(k + 1), std::to_string(k + 1) + "/36", ">= 0, normalized"});
      }
      add("nlwe_state", {2, 2, 2}, std::move(ps), {"Q-convertible CPB-state"},
          "mixture over a three-qubit product basis that is not classical", build_nlwe);
    }
    add("rho_upb", {2, 2, 2}, {}, {},
        "uniform mixture of the SHIFTS unextendible product basis",
        [](const Params&) {
          return fixed({2, 2, 2}, mixture(shifts_upb().elements(), std::vector<double>(4, 0.25)),
                       ZooClass::UPBState);
        });
    add("bound_entangled", {2, 2, 2}, {}, {},
        "normalized projector onto the complement of the SHIFTS span",
        [](const Params&) {
          const CMatrix pi = shifts_upb().matrix() * shifts_upb().matrix().adjoint();
          return fixed({2, 2, 2}, 0.25 * (CMatrix::Identity(8, 8) - pi),
                       ZooClass::UndeterminedSeparability);
        });
    add("eps_upb", {2, 2, 2}, {{"eps", "0.05", "(0, 1/6)"}}, {},
        "UPB-diagonal state that approaches a classical state as eps -> 0", build_eps_upb);
    add("qubit_qutrit_cpb", {2, 3}, {}, {"multi-directional CPB-state"},
        "qubit-qutrit mixture of three orthogonal product states",
        [](const Params&) {
          const CVector qp = (basis_ket(3, 0) + basis_ket(3, 1)) * kR;
          const CMatrix m = (projector(kron(k0(), basis_ket(3, 0))) + projector(kron(k1(), qp)) +
                             projector(kron(kp(), basis_ket(3, 2)))) /
                            3.0;
          return fixed({2, 3}, m, ZooClass::CPBNonclassical);
        });
    add("forgetting_source", {2, 4}, {}, {},
        "classical qubit-ququart state that forgets into bb84_rho0",
        [](const Params&) {
          const CMatrix m =
              0.5 * (projector(kron(k0(), basis_ket(4, 0))) + projector(kron(k0(), basis_ket(4, 3))));
          return fixed({2, 4}, m, ZooClass::Classical);
        });
    add("closest_to_rho0_a", {2, 2}, {}, {}, "nearest classical state to bb84_rho0, first of two",
        [](const Params&) {
          const CMatrix m = 0.5 * projector(kron(k0(), k0())) + 0.25 * projector(kron(k1(), k0())) +
                            0.25 * projector(kron(k1(), k1()));
          return fixed({2, 2}, m, ZooClass::Classical);
        });
    add("closest_to_rho0_b", {2, 2}, {}, {}, "nearest classical state to bb84_rho0, second of two",
        [](const Params&) {
          const CMatrix m = 0.25 * projector(kron(k0(), kp())) + 0.25 * projector(kron(k0(), km())) +
                            0.5 * projector(kron(k1(), kp()));
          return fixed({2, 2}, m, ZooClass::Classical);
        });
    add("max_entangled", {}, {{"d", "3", "{2, ..., 16}"}}, {},
        "maximally entangled pure state of two d-level systems", build_max_entangled);
    const char* bells[] = {"bell_phi_plus", "bell_phi_minus", "bell_psi_plus", "bell_psi_minus"};
    for (int i = 0; i < 4; ++i) {
      add(bells[i], {2, 2}, {}, {}, "Bell state", [i](const Params&) {
        return fixed({2, 2}, pure(bell(i)), ZooClass::Entangled);
      });
    }
    add("classical_demo", {2, 2, 2}, {}, {}, "the product pure state |-0+>",
        [](const Params&) {
          const CVector v = kron(std::vector<CVector>{km(), k0(), kp()});
          return fixed({2, 2, 2}, pure(v), ZooClass::Classical);
        });
    return d;
  }();
  return defs;
}

}  // namespace

DensityMatrix pps(const DensityMatrix& rho, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) out_of_range("eps", eps, "[0, 1]");
  const auto n = static_cast<Eigen::Index>(rho.dim());
  CMatrix m = eps * rho.matrix() + (1.0 - eps) / static_cast<double>(n) * CMatrix::Identity(n, n);
  return DensityMatrix::assume_valid(rho.profile(), std::move(m));
}

CatalogEntry build(const std::string& name, const Params& params) {
  for (const auto& def : registry()) {
    if (def.info.name != name) continue;
    Params resolved;
    for (const auto& spec : def.info.params) resolved[spec.name] = spec.default_value;
    for (const auto& [key, value] : params) {
      if (!resolved.contains(key)) {
        throw Error(ErrorCode::InvalidArgument, name + " has no parameter '" + key + "'");
      }
      resolved[key] = value;
    }
    Recipe r = def.builder(resolved);
    DensityMatrix state = validate_density(r.matrix, DimensionProfile(r.dims));
    return CatalogEntry{name,        std::move(resolved),    std::move(state), r.expected,
                        def.info.annotations, def.info.origin};
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
}

std::vector<CatalogInfo> list_catalog() {
  std::vector<CatalogInfo> out;
  for (const auto& def : registry()) out.push_back(def.info);
  return out;
}

ForgettingDemo forgetting_demo() {
  CatalogEntry source = build("forgetting_source");
  CMatrix v(4, 4);
  v.col(0) = kron(k0(), k0());
  v.col(1) = kron(k0(), k1());
  v.col(2) = kron(k1(), km());
  v.col(3) = kron(k1(), kp());
  const CMatrix u = kron(CMatrix::Identity(2, 2), v);
  const CMatrix relabeled = u * source.state.matrix() * u.adjoint();
  const std::size_t keep[] = {1, 2};
  const CMatrix out = partial_trace_matrix(relabeled, DimensionProfile({2, 2, 2}), keep);
  return ForgettingDemo{std::move(source),
                        "relabel |0>,|1>,|2>,|3> of the ququart as |00>,|01>,|1->,|1+>, "
                        "then discard the original qubit",
                        v, validate_density(out, DimensionProfile({2, 2}))};
}

LocalBasis breidbart_basis() {
  const double c = std::cos(std::numbers::pi / 8.0);
  const double s = std::sin(std::numbers::pi / 8.0);
  CMatrix m(2, 2);
  m << c, s, -s, c;
  return LocalBasis(m);
}

ProductBasisSet nlwe_basis() {
  return ProductBasisSet(DimensionProfile({2, 2, 2}),
                         {pv({k0(), k1(), kp()}), pv({k0(), k1(), km()}), pv({k1(), kp(), k0()}),
                          pv({k1(), km(), k0()}), pv({kp(), k0(), k1()}), pv({km(), k0(), k1()}),
                          pv({k0(), k0(), k0()}), pv({k1(), k1(), k1()})});
}

ProductBasisSet shifts_upb() {
  return ProductBasisSet(DimensionProfile({2, 2, 2}),
                         {pv({k0(), k1(), kp()}), pv({k1(), kp(), k0()}), pv({kp(), k0(), k1()}),
                          pv({km(), km(), km()})});
}

ProductBasisSet shifts_upb_minus() {
  return ProductBasisSet(DimensionProfile({2, 2, 2}),
                         {pv({k0(), k1(), km()}), pv({k1(), km(), k0()}), pv({km(), k0(), k1()}),
                          pv({kp(), kp(), kp()})});
}

}  // namespace qzoo
