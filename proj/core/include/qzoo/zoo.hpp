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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qzoo/bases.hpp"
#include "qzoo/classify.hpp"
#include "qzoo/state.hpp"

namespace qzoo {

// Parameter values are kept as text so that non-numeric ones (the base
// state of `pps`) share the same path as numbers.
using Params = std::map<std::string, std::string>;

struct ParamSpec {
  std::string name;
  std::string default_value;
  std::string range;  // human-readable, e.g. "[-1/3, 1]"
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, std::string> params;  // resolved values, defaults included
  DensityMatrix state;
  std::optional<ZooClass> expected_verdict;
  std::vector<std::string> annotations;
  std::string origin;
};

struct CatalogInfo {
  std::string name;
  std::vector<std::size_t> dims;  // empty when parameter-dependent
  std::vector<ParamSpec> params;
  std::vector<std::string> annotations;
  std::string origin;
};

CatalogEntry build(const std::string& name, const Params& params = {});

/// Catalog order is fixed.
std::vector<CatalogInfo> list_catalog();

struct ForgettingDemo {
  CatalogEntry source;
  std::string channel;
  CMatrix relabeling;  // unitary on the 4-level subsystem
  DensityMatrix output;
};

/// A classical [2,4] state whose 4-level part is relabeled as two qubits,
/// after which the original qubit is discarded: the output is bb84_rho0.
ForgettingDemo forgetting_demo();

// eps rho + (1 - eps) I / N.
DensityMatrix pps(const DensityMatrix& rho, double eps);

/// {cos(pi/8)|0> - sin(pi/8)|1>, sin(pi/8)|0> + cos(pi/8)|1>}.
LocalBasis breidbart_basis();
/// {|01+>, |01->, |1+0>, |1-0>, |+01>, |-01>, |000>, |111>}.
ProductBasisSet nlwe_basis();
/// {|01+>, |1+0>, |+01>, |--->}.
ProductBasisSet shifts_upb();
/// {|01->, |1-0>, |-01>, |+++>}: the same set with + and - exchanged.
ProductBasisSet shifts_upb_minus();

}  // namespace qzoo
