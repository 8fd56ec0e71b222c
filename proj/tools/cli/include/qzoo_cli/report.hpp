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

#include <string>

#include "json.hpp"
#include "qzoo/bases.hpp"
#include "qzoo/classify.hpp"
#include "qzoo/measures.hpp"

namespace qzoo::cli {

inline constexpr const char* kToolName = "qzoo";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json complex_json(Complex z);
nlohmann::json vector_json(const CVector& v);
// +infinity becomes the string "inf".
nlohmann::json number_json(double x);

nlohmann::json witness_json(const Witness& w);
nlohmann::json classical_basis_json(const ClassicalBasis& basis);
nlohmann::json product_basis_json(const ProductBasisSet& set);

}  // namespace qzoo::cli
