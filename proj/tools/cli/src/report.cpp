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

#include "qzoo_cli/report.hpp"

#include <cmath>

namespace qzoo::cli {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v[i]));
  return out;
}

json number_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json classical_basis_json(const ClassicalBasis& basis) {
  json local = json::array();
  for (const auto& b : basis.local()) {
    json vectors = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) vectors.push_back(vector_json(b.vector(i)));
    local.push_back(std::move(vectors));
  }
  return {{"kind", "classical-basis"}, {"local", std::move(local)}};
}

json product_basis_json(const ProductBasisSet& set) {
  json elements = json::array();
  for (const auto& e : set.elements()) {
    json factors = json::array();
    for (const auto& f : e.factors) factors.push_back(vector_json(f));
    elements.push_back(std::move(factors));
  }
  return {{"kind", "product-basis"}, {"elements", std::move(elements)}};
}

json witness_json(const Witness& w) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const ClassicalBasis& b) const { return classical_basis_json(b); }
    json operator()(const ProductBasisSet& s) const { return product_basis_json(s); }
    json operator()(const ObstructionNote& n) const {
      return {{"kind", "obstruction"}, {"text", n.text}};
    }
    json operator()(const PptResult& p) const {
      json side_a = json::array();
      for (std::size_t k : p.cut.side_a()) side_a.push_back(k);
      return {{"kind", "npt"}, {"cut", std::move(side_a)}, {"min_eigenvalue", p.min_eigenvalue}};
    }
  };
  return std::visit(Visitor{}, w);
}

}  // namespace qzoo::cli
