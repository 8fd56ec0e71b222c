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

#include "qzoo_cli/state_file.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qzoo/error.hpp"

namespace qzoo::cli {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::ParseError, "state file: " + what);
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector parse_vector(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    malformed("factor of length " + std::to_string(j.is_array() ? j.size() : 0) +
              " where " + std::to_string(expected) + " was expected");
  }
  CVector v(static_cast<Eigen::Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) v[static_cast<Eigen::Index>(i)] = parse_complex(j[i]);
  return v;
}

DimensionProfile parse_dims(const json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    malformed("missing or empty 'dims'");
  }
  std::vector<std::size_t> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 2) {
      malformed("'dims' entries must be integers >= 2");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return DimensionProfile(std::move(dims));
}

}  // namespace

DensityMatrix parse_state_file(const json& doc) {
  if (!doc.is_object()) malformed("top level must be an object");
  const DimensionProfile profile = parse_dims(doc);
  const auto n = static_cast<Eigen::Index>(profile.total());
  const bool has_matrix = doc.contains("matrix");
  const bool has_ensemble = doc.contains("ensemble");
  if (has_matrix == has_ensemble) malformed("exactly one of 'matrix' or 'ensemble' is required");

  CMatrix m = CMatrix::Zero(n, n);
  if (has_matrix) {
    const json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix has " + std::to_string(rows.is_array() ? rows.size() : 0) +
                      " rows; dims imply " + std::to_string(n));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::DimensionMismatch, "matrix row " + std::to_string(i) +
                                                      " does not have " + std::to_string(n) +
                                                      " entries");
      }
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_complex(row[static_cast<std::size_t>(j)]);
    }
  } else {
    const json& items = doc["ensemble"];
    if (!items.is_array() || items.empty()) malformed("'ensemble' must be a non-empty array");
    double total = 0.0;
    for (const auto& item : items) {
      if (!item.is_object() || !item.contains("weight") || !item["weight"].is_number() ||
          !item.contains("factors") || !item["factors"].is_array()) {
        malformed("ensemble items need a numeric 'weight' and a 'factors' array");
      }
      const double w = item["weight"].get<double>();
      if (w < 0.0) malformed("negative ensemble weight");
      const json& factors = item["factors"];
      if (factors.size() != profile.size()) malformed("one factor per subsystem is required");
      std::vector<CVector> vs;
      for (std::size_t k = 0; k < profile.size(); ++k) {
        CVector v = parse_vector(factors[k], profile.dim(k));
        if (std::abs(v.norm() - 1.0) > tol::kNorm) {
          throw Error(ErrorCode::NotNormalized,
                      "ensemble factor " + std::to_string(k) + " has norm " +
                          std::to_string(v.norm()),
                      v.norm());
        }
        vs.push_back(std::move(v));
      }
      const CVector psi = kron(std::span<const CVector>(vs));
      m += w * psi * psi.adjoint();
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorCode::TraceNotOne, "ensemble weights sum to " + std::to_string(total),
                  total);
    }
  }
  return validate_density(m, profile);
}

json to_state_file(const DensityMatrix& rho) {
  json doc;
  doc["dims"] = json::array();
  for (std::size_t d : rho.profile().dims()) doc["dims"].push_back(d);
  json rows = json::array();
  const CMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, "sha256 failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

LoadedState load_state(const std::string& source) {
  constexpr std::string_view kPrefix = "zoo:";
  if (source.starts_with(kPrefix)) {
    CatalogEntry entry = build(source.substr(kPrefix.size()));
    const std::string canonical = to_state_file(entry.state).dump();
    DensityMatrix state = entry.state;
    return LoadedState{source, std::move(state), "sha256:" + sha256_hex(canonical),
                       std::move(entry)};
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  json doc = json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "'" + source + "' is not valid JSON");
  DensityMatrix state = parse_state_file(doc);
  return LoadedState{source, std::move(state), "sha256:" + sha256_hex(bytes), std::nullopt};
}

}  // namespace qzoo::cli
