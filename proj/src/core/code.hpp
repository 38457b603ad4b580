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
 * @file code.hpp
 * @brief Linear codes over GF(q): duals, hulls, distances, scaling, and the
 *        group-sum subset counter that certifies MDS elliptic codes.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curve.hpp"
#include "gf.hpp"
#include "matrix.hpp"

namespace isodual::code {

/// Coordinatewise nonzero multiplier.
class ScalingVector {
 public:
  /// Throws InvalidArgument if any entry is zero or out of range.
  ScalingVector(const gf::Field& f, std::vector<std::uint32_t> entries);
  static ScalingVector ones(const gf::Field& f, std::size_t n);

  const gf::Field& field() const { return *f_; }
  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& entries() const { return e_; }
  ScalingVector inverse() const;
  /// Entrywise squares.
  ScalingVector squared() const;

  bool operator==(const ScalingVector& o) const { return f_->same_as(*o.f_) && e_ == o.e_; }

 private:
  const gf::Field* f_;
  std::vector<std::uint32_t> e_;
};

/// [n, k] code held by a generator matrix in reduced row echelon form.
class LinearCode {
 public:
  /// Row space of `gen`; dependent rows are dropped. k = 0 is allowed.
  LinearCode(gf::FieldPtr field, la::Matrix gen);

  const gf::Field& field() const { return *field_; }
  const gf::FieldPtr& field_ptr() const { return field_; }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const la::Matrix& generator() const { return gen_; }

 private:
  gf::FieldPtr field_;
  la::Matrix gen_;
};

LinearCode dual(const LinearCode& c);

/// dim(C ∩ C^⊥) as k - rank(G G^T); cross-checked against the intersection
/// rank n - rank([G; H]). Throws InternalError if the two disagree.
std::size_t hull_dim(const LinearCode& c);
std::size_t hull_dim_gram(const LinearCode& c);
std::size_t hull_dim_intersection(const LinearCode& c);
/// hull_dim(scale(c, u)) without materializing the scaled code.
std::size_t hull_dim_scaled(const LinearCode& c, const ScalingVector& u);

/// Column j multiplied by v_j.
LinearCode scale(const LinearCode& c, const ScalingVector& v);

/// Row-space equality (identical RREF).
bool same_code(const LinearCode& a, const LinearCode& b);

/// Brute-force budget on q^k for distance and weight enumeration.
inline constexpr std::uint64_t kBruteForceBudget = std::uint64_t{1} << 24;

/// Exact minimum distance by enumeration; BudgetExceeded beyond q^k > 2^24.
std::size_t min_distance(const LinearCode& c);
/// A_0..A_n by enumeration, same budget.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c);

/// Z/m_1 x ... x Z/m_r with elements flattened in mixed radix (last factor
/// fastest).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::uint64_t> moduli);
  static AbelianGroup of(const ec::GroupStructure& gs) { return AbelianGroup({gs.d1, gs.d2}); }

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t times(std::int64_t n, std::uint64_t a) const;
  std::vector<std::uint64_t> coords(std::uint64_t id) const;
  std::uint64_t id(const std::vector<std::uint64_t>& coords) const;
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

struct SubsetCount {
  std::uint64_t count = 0;
  bool saturated = false;  // true count exceeds 2^64 - 1; zero-ness is exact
  bool operator==(const SubsetCount&) const = default;
};

/// Number of k-element subsets (by position) of `elements` summing to
/// `target`, by dynamic programming over (prefix, size, group element).
SubsetCount count_subset_sums(const AbelianGroup& g, std::span<const std::uint64_t> elements, std::size_t k,
                              std::uint64_t target);

/// Number of k-subsets of `points` whose group sum is `target`. C_L(D, G)
/// with sum(G) = target is MDS iff the count is zero.
SubsetCount mds_subset_check(std::span<const ec::Point> points, const ec::GroupStructure& gs, std::size_t k,
                             const ec::Point& target);

}  // namespace isodual::code
