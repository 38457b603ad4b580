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
 * @file curve.hpp
 * @brief Elliptic curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(q).
 *
 * One group-law code path serves every characteristic. Point lists are always
 * in canonical order: Infinity first, then lexicographic by (enc x, enc y).
 */

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace isodual::ec {

using gf::Element;

struct Point {
  bool infinity = true;
  Element x;
  Element y;

  static Point at_infinity() { return Point{}; }
  static Point affine(Element x, Element y) { return Point{false, x, y}; }

  bool is_infinity() const { return infinity; }
  bool is_affine() const { return !infinity; }
  /// Coordinate pair key, unique per point of one curve.
  std::uint64_t key() const;

  friend bool operator==(const Point& a, const Point& b);
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
};

std::string to_string(const Point& p);

class Curve {
 public:
  /// Throws InvalidArgument when the discriminant vanishes.
  Curve(gf::FieldPtr field, std::array<Element, 5> a);
  /// `a1,a2,a3,a4,a6` as canonical encodings.
  static Curve parse(gf::FieldPtr field, std::string_view coeffs);
  std::string to_string() const;

  const gf::Field& field() const { return *field_; }
  const gf::FieldPtr& field_ptr() const { return field_; }
  const Element& a1() const { return a_[0]; }
  const Element& a2() const { return a_[1]; }
  const Element& a3() const { return a_[2]; }
  const Element& a4() const { return a_[3]; }
  const Element& a6() const { return a_[4]; }
  const std::array<Element, 5>& coefficients() const { return a_; }

  Element discriminant() const;

  /// Throws InvalidArgument when the point belongs to another field.
  bool contains(const Point& p) const;
  Point point(std::uint32_t x, std::uint32_t y) const;

  Point neg(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }
  Point mul(std::int64_t n, const Point& p) const;

  /// P = -P, i.e. 2y + a1 x + a3 = 0 (includes Infinity).
  bool is_two_torsion(const Point& p) const;

  /// Right-hand side x^3 + a2 x^2 + a4 x + a6 and the linear term a1 x + a3.
  std::uint32_t rhs(std::uint32_t x) const;
  std::uint32_t lin(std::uint32_t x) const;

  /// #E(GF(q)) by per-x root counting, without building points.
  std::uint64_t count_points() const;

  friend bool operator==(const Curve& a, const Curve& b);

 private:
  void check_point(const Point& p) const;

  gf::FieldPtr field_;
  std::array<Element, 5> a_;
};

std::vector<Point> enumerate_points(const Curve& c);

/// Least n >= 1 with [n]P = O, given the group order.
std::uint64_t point_order(const Curve& c, const Point& p, std::uint64_t group_order);
std::uint64_t point_order(const Curve& c, const Point& p);

/// All rational P with [r]P = O, canonical order.
std::vector<Point> torsion_points(const Curve& c, std::uint64_t r);

/// E(GF(q)) = Z/d1 x Z/d2 with d1 | d2. Every point has coordinates (a, b)
/// with P = [a]basis1 + [b]basis2, basis1 of order d1, basis2 of order d2.
class GroupStructure {
 public:
  std::uint64_t d1 = 1;
  std::uint64_t d2 = 1;
  Point basis1;
  Point basis2;
  std::vector<Point> points;  // canonical order
  std::vector<std::pair<std::uint64_t, std::uint64_t>> coords;  // parallel to points

  std::uint64_t order() const { return d1 * d2; }
  std::optional<std::size_t> index_of(const Point& p) const;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> coordinates(const Point& p) const;
  /// Flat id a*d2 + b in [0, order).
  std::optional<std::uint64_t> element_id(const Point& p) const;

  void build_index();

 private:
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

GroupStructure group_structure(const Curve& c);

struct FeasibleOrder {
  std::uint64_t order;
  std::int64_t trace;  // β with order = q + 1 - β
  std::string cases;   // admitting cases among a..e, e.g. "b" or "c,e"
};

/// Every order q + 1 - β admitted by the Waterhouse/Rück classification.
/// Throws InvalidArgument when q is not a prime power.
std::vector<FeasibleOrder> feasible_orders(std::uint64_t q);

}  // namespace isodual::ec
