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
#include <stdexcept>
#include <string>
#include <string_view>

namespace qzoo {

enum class ErrorCode {
  DimensionMismatch,
  NotHermitian,
  NotPositive,
  TraceNotOne,
  NotNormalized,
  EmptyKeepSet,
  IndexOutOfRange,
  ProfileMismatch,
  InvalidCut,
  InvalidBasis,
  NotAProjector,
  UnknownName,
  ParamOutOfRange,
  ParseError,
  MissingCut,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code and, where one exists, the
/// offending numeric value (most negative eigenvalue, trace, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<double> value_;
};

}  // namespace qzoo
