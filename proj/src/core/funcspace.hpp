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
 * @file funcspace.hpp
 * @brief Divisors and functions (a(x) + b(x) y) / c(x) on an elliptic curve.
 *
 * Riemann-Roch spaces are provided only for G = (k-1)O + Q with Q a nonzero
 * 2-torsion point, through closed-form bases.
 */

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "curve.hpp"
#include "poly.hpp"

namespace isodual::fs {

using ec::Curve;
using ec::Point;
using gf::Element;
using gf::Poly;

class Divisor {
 public:
  Divisor() = default;

  /// Adds n*P; entries that cancel to zero are dropped.
  Divisor& add(const Point& p, std::int64_t n);
  std::int64_t coefficient(const Point& p) const;
  std::int64_t degree() const;
  const std::map<Point, std::int64_t>& terms() const { return coeffs_; }
  bool operator==(const Divisor&) const = default;

  /// Divisor minus another.
  Divisor operator-(const Divisor& o) const;
  Divisor operator+(const Divisor& o) const;
  /// Every coefficient >= 0.
  bool is_effective() const;

 private:
  std::map<Point, std::int64_t> coeffs_;
};

/// [a_1]P_1 + ... + [a_n]P_n in the group.
Point divisor_sum(const Curve& c, const Divisor& d);
/// Degree zero and sum O.
bool is_principal(const Curve& c, const Divisor& d);

class RationalFunction {
 public:
  /// (a + b y) / c. Throws InvalidArgument when c = 0 or a = b = 0.
  /// Normalized: common factor of a, b, c removed and c made monic.
  RationalFunction(Poly a, Poly b, Poly c);

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& c() const { return c_; }

 private:
  Poly a_, b_, c_;
};

/// v_P(f). At O uses the weights v(x) = -2, v(y) = -3; at affine points the
/// conjugate-norm reduction to a polynomial in x.
std::int64_t valuation(const Curve& c, const RationalFunction& f, const Point& p);

/// f(P). Throws InvalidArgument at O or where c(x(P)) = 0.
Element evaluate(const Curve& c, const RationalFunction& f, const Point& p);

/// Divisor of f restricted to the given points plus O. Equals div(f) when
/// the zeros and poles of f are all in `points`.
Divisor divisor_on(const Curve& c, const RationalFunction& f, std::span<const Point> points);

/// div(f) + G >= 0 checked pointwise at every listed point and at O.
bool in_riemann_roch_space(const Curve& c, const RationalFunction& f, const Divisor& g,
                           std::span<const Point> points);

struct RRBasis {
  Divisor divisor;
  std::vector<RationalFunction> functions;
  std::vector<int> pole_orders_at_O;  // parallel to functions, ascending
};

/// Basis of L((k-1)O + Q) for even k >= 2 and Q of order 2.
///   char 2, curve y^2 + xy = x^3 + a2 x^2 + a6, Q = (0, g):
///     x^i (0 <= i <= (k-2)/2) and (y - g) x^(j-1) (0 <= j <= (k-2)/2)
///   odd char, a1 = a3 = 0, Q = (b, 0):
///     x^i and x^j y / (x - b)
/// Sorted by pole order at O, which runs 0..k-1.
RRBasis rr_basis(const Curve& c, int k, const Point& q);

struct InterpolationPoly {
  Poly h;
  Poly dh;
};

/// h = prod (x - a) over pairwise distinct xs, and its derivative.
InterpolationPoly interpolation_poly(std::span<const Element> xs);

}  // namespace isodual::fs
