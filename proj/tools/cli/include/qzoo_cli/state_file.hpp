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
#include <string>

#include "json.hpp"
#include "qzoo/state.hpp"
#include "qzoo/zoo.hpp"

namespace qzoo::cli {

struct LoadedState {
  std::string source;
  DensityMatrix state;
  std::string digest;  // "sha256:<hex>"
  std::optional<CatalogEntry> entry;  // set for "zoo:" sources
};

/// Accepts a file path or "zoo:<name>". Throws qzoo::Error (ParseError for
/// malformed JSON, validation codes for unphysical matrices).
LoadedState load_state(const std::string& source);

DensityMatrix parse_state_file(const nlohmann::json& doc);
nlohmann::json to_state_file(const DensityMatrix& rho);

std::string sha256_hex(const std::string& bytes);

}  // namespace qzoo::cli
