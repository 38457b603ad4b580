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

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace isodual::gf {

/// Univariate polynomial over GF(q); coefficient of x^i at index i, no
/// trailing zeros. The zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<std::uint32_t> coeffs);

  static Poly constant(const Element& c);
  static Poly monomial(const Field& f, std::size_t degree, std::uint32_t coeff = 1);
  /// x - a
  static Poly linear_root(const Element& a);

  const Field& field() const { return *f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(std::uint32_t s) const;
  Poly monic() const;

  /// Horner evaluation.
  std::uint32_t eval(std::uint32_t x) const;
  Element eval(const Element& x) const;

  /// Formal derivative: coefficient i*c_i with i reduced mod p.
  Poly derivative() const;

  /// (quotient, remainder); throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Multiplicity of a as a root (0 if not a root). Requires nonzero.
  int root_multiplicity(std::uint32_t a) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  void check_same(const Poly& o) const;

  const Field* f_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd (zero if both zero).
Poly gcd(Poly a, Poly b);

Element poly_eval(std::span<const Element> f, const Element& a);
std::vector<Element> poly_derivative(std::span<const Element> f);

}  // namespace isodual::gf
