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
 * @file search.hpp
 * @brief Curve enumeration, length-bound tables, the maximal-length probe and
 *        the exhaustive searcher for the sumset lemma on small abelian groups.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "code.hpp"
#include "construction.hpp"
#include "curve.hpp"
#include "gf.hpp"

namespace isodual::search {

/// Desk-scale cap for curve enumeration.
inline constexpr std::uint64_t kMaxEnumerationQ = 512;

/// Curve families scanned by enumerate_curves.
enum class Family {
  Canonical,   // char 2: y^2+xy=x^3+a2x^2+a6 and y^2+a3y=x^3+a4x+a6;
               // char 3: y^2=x^3+a2x^2+a4x+a6; p > 3: y^2=x^3+a4x+a6
  Ordinary2,   // char 2: y^2+xy=x^3+a2x^2+a6 only
  SplitTwoTorsion,  // odd char: y^2 = x(x-a)(x-b), 0 < a < b by encoding
  General,     // all five coefficients
};

/// Lexicographically first primitive modulus of degree m over GF(p).
gf::FieldSpec default_field_spec(std::uint64_t q);

struct CurveRecord {
  ec::Curve curve;
  std::uint64_t order = 0;
  std::optional<ec::GroupStructure> structure;
};

using CurvePredicate = std::function<bool(const ec::Curve&, std::uint64_t order)>;

/// Nonsingular curves of the family in lexicographic coefficient order,
/// filtered by the predicate (null accepts all). Group structures are
/// computed for accepted curves when with_structure is set.
std::vector<CurveRecord> enumerate_curves(const gf::FieldPtr& field, const CurvePredicate& pred = nullptr,
                                          Family family = Family::Canonical, bool with_structure = true);

/// Largest even k usable by a construction on a curve of this order
/// (0 when none): construction 1 needs 2k <= odd(N) - 1, construction 2
/// needs k <= odd(N) - 1.
int max_even_k(int construction, std::uint64_t order);

struct BoundWitness {
  std::string field;
  std::string curve;
  int construction = 0;
  int k = 0;
  std::size_t hull = 0;
};

struct BoundTableRow {
  std::uint64_t q = 0;
  std::string parity_case;  // "even-square", "even-nonsquare", "odd"
  std::uint64_t bound_n = 0;
  std::optional<std::uint64_t> achieved_n;
  std::optional<BoundWitness> witness;
};

/// Length bound only.
BoundTableRow bound_for(std::uint64_t q);
/// One row per q; with fill_achieved, scans curves and runs the construction
/// on the first curve of maximal length.
std::vector<BoundTableRow> bound_table(const std::vector<std::uint64_t>& qs, bool fill_achieved = true);

struct CensusRow {
  std::uint64_t order = 0;
  std::uint64_t d1 = 0, d2 = 0;
  std::uint64_t curves = 0;
  int construction = 0;  // applicable construction, 0 if none
  std::uint64_t max_n = 0;
};

/// Curves of the canonical families grouped by (order, d1, d2). q <= 64.
std::vector<CensusRow> census(std::uint64_t q);

struct ProbeRow {
  std::string curve;
  std::uint64_t order = 0;
  int construction = 0;  // 0: not applicable
  std::uint64_t max_n = 0;
  std::uint64_t certificates = 0;
  bool within_half_order = true;
  std::uint64_t self_dual = 0;  // certificates with hull = k
};

/// For every curve where a construction applies, builds a certificate for
/// each admissible even k and checks n <= #E/2. q <= 64.
std::vector<ProbeRow> max_length_probe(std::uint64_t q);

/// Every abelian group of order n as invariant factors m_1 | m_2 | ... .
std::vector<code::AbelianGroup> abelian_groups_of_order(std::uint64_t n);

struct LemmaCounterexample {
  std::vector<std::uint64_t> subset;  // ascending element ids
  std::uint64_t g = 0;
};

struct LemmaReport {
  std::string group;
  std::uint64_t n = 0;
  std::uint64_t subsets = 0;
  std::uint64_t admissible = 0;  // (A, g) with g not in A and sum(A) = 2g
  std::vector<LemmaCounterexample> counterexamples;
};

/// All n-subsets A and g not in A with sum(A) = 2g where g is not a sum of
/// n/2 distinct elements of A. Requires even group order, even n and
/// #G/2 + 1 <= n <= #G.
LemmaReport lemma_max_search(const code::AbelianGroup& g, std::uint64_t n);

}  // namespace isodual::search
