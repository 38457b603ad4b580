/*
 * Copyright 2026 The isodual Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file certificate.hpp
 * @brief JSON certificate documents (schema "isodual-cert/1") and scaled-code
 *        documents ("isodual-scaled/1"): serialization, parsing, and
 *        verification from the document alone.
 */

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "construction.hpp"

namespace isodual::cert {

inline constexpr const char* kCertSchema = "isodual-cert/1";
inline constexpr const char* kScaledSchema = "isodual-scaled/1";
inline constexpr const char* kToolName = "isodual";
extern const char* const kToolVersion;

/// Pretty-printed JSON, keys sorted, trailing newline. Deterministic.
std::string serialize(const iso::IsoDualCertificate& c);

/// Raw content of a certificate file. Values are schema-checked (types,
/// ranges, nonzero v) but not verified.
struct Document {
  gf::FieldPtr field;
  std::optional<ec::Curve> curve;
  iso::ConstructionInput config() const;

  int k = 0;
  int construction = 0;
  std::pair<int, int> torsion_choice{1, 2};
  iso::PairMode pair_mode = iso::PairMode::Canonical;
  std::vector<std::uint32_t> pair_x;
  bool brute_force_distance = true;

  std::uint64_t curve_order = 0, d1 = 0, d2 = 0;
  ec::Point q_a, q_b;
  std::vector<std::uint32_t> selected_odd_x;
  std::vector<ec::Point> points;
  std::vector<std::pair<ec::Point, std::int64_t>> divisor_g;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> generator;  // row-major, as recorded
  std::vector<std::uint32_t> v;
  std::size_t n = 0, dim = 0, d = 0, hull = 0;
  bool iso_dual = false;
  std::uint64_t mds_witness = 0;
  bool mds_witness_saturated = false;
  std::string distance_method;
  std::string tool_version;

  /// Re-serialization of the parsed document.
  std::string text;
};

/// Throws ParseError on malformed JSON or schema violations.
Document parse(const std::string& text);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  /// Name of the first failed check, empty when all pass.
  std::string first_failure() const;
};

/// Recomputes the points, generator, v, iso-dual identity, MDS witness, hull
/// and distance claim from the document and compares with what it records.
VerifyReport verify(const Document& doc);

/// Certificate object built from the recorded data (generator and v as
/// stored). Intended for documents that verified.
iso::IsoDualCertificate to_certificate(const Document& doc);

/// Transformed-code document.
struct ScaledDocument {
  std::string kind;  // "selfdual", "lcd" or "hull-sample"
  std::optional<std::uint64_t> seed;
  std::string field;
  std::string curve;
  std::vector<std::uint32_t> u;
  std::size_t n = 0, k = 0, d = 0, hull = 0;
  std::vector<std::vector<std::uint32_t>> generator;  // RREF of the scaled code
};

ScaledDocument make_scaled(const iso::IsoDualCertificate& c, const iso::ScaledCode& s, const std::string& kind,
                           std::optional<std::uint64_t> seed);
std::string serialize(const ScaledDocument& s);
ScaledDocument parse_scaled(const std::string& text);

/// Write via a temporary file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace isodual::cert
