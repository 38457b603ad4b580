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
 * @file gf.hpp
 * @brief Arithmetic in GF(p) and GF(p^m) in polynomial basis.
 *
 * An element of GF(p^m) is a residue class c_0 + c_1 θ + ... + c_{m-1} θ^{m-1}
 * modulo a monic irreducible polynomial. Every element is identified by its
 * canonical encoding enc(a) = Σ c_i p^i, which is also the interchange format
 * used in text specs and certificate files.
 *
 * Field objects are immutable and own log/exp tables, so elements are a
 * (field pointer, encoding) pair. The pointed-to Field must outlive its
 * elements; callers hold a FieldPtr for that.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isodual::gf {

/// Text form: `p=<int>,m=<int>,mod=<c0,...,cm>`. `m`/`mod` may be omitted for
/// prime fields (defaults m=1, mod=x).
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus{0, 1};

  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
  std::uint64_t order() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field order accepted (table-driven arithmetic).
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Element {
 public:
  Element() = default;
  Element(const Field& field, std::uint32_t enc);

  const Field& field() const;
  bool has_field() const { return field_ != nullptr; }
  std::uint32_t enc() const { return enc_; }
  bool is_zero() const { return enc_ == 0; }
  bool is_one() const { return enc_ == 1; }

  /// Coefficient list c_0..c_{m-1}.
  std::vector<std::uint32_t> coeffs() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  Element inv() const;
  Element pow(std::int64_t e) const;
  std::optional<Element> sqrt() const;

  /// Equal iff same field and same encoding.
  friend bool operator==(const Element& a, const Element& b);

 private:
  void check_same(const Element& o) const;

  const Field* field_ = nullptr;
  std::uint32_t enc_ = 0;
};

class Field {
 public:
  /// Validates the spec (p prime, modulus monic and irreducible) and builds
  /// the arithmetic tables. Throws InvalidArgument on a bad spec.
  static FieldPtr make(const FieldSpec& spec);
  static FieldPtr parse(std::string_view text) { return make(FieldSpec::parse(text)); }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t m() const { return spec_.m; }
  std::uint32_t q() const { return q_; }
  bool is_binary() const { return spec_.p == 2; }

  /// Same field: identical object or identical spec.
  bool same_as(const Field& o) const { return this == &o || spec_ == o.spec_; }

  Element element(std::uint32_t enc) const;
  Element zero() const { return element(0); }
  Element one() const { return element(1); }
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t n) const { return element(int_enc(n)); }
  /// Class of x modulo the defining polynomial.
  Element theta() const;
  /// θ if it is primitive, otherwise the primitive element of least encoding.
  Element generator() const { return element(generator_); }

  // Raw arithmetic on encodings; no range or field checks.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InvalidArgument for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
  std::uint32_t int_enc(std::int64_t n) const;

  /// r with r^2 = a. Char 2: a^(q/2). Odd char: Tonelli-Shanks, returning the
  /// root of smaller encoding; empty for non-squares.
  std::optional<std::uint32_t> sqrt(std::uint32_t a) const;
  bool is_square(std::uint32_t a) const;
  /// Char 2 only: smallest z with z^2 + z = w, or empty.
  std::optional<std::uint32_t> artin_schreier_root(std::uint32_t w) const;

  std::vector<std::uint32_t> digits(std::uint32_t enc) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

  /// Prime factors of q-1, ascending.
  const std::vector<std::uint64_t>& unit_group_primes() const { return unit_primes_; }

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::uint32_t generator_ = 1;
  std::vector<std::uint64_t> unit_primes_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint16_t> add_table_;  // q*q entries when q is small, odd p
  std::vector<std::int64_t> as_root_;     // char 2: z for z^2+z = w, or -1
  std::uint32_t nonresidue_ = 0;          // odd q: least non-square
};

/// True iff n is prime (trial division).
bool is_prime(std::uint64_t n);
/// Distinct prime factors, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// (p, m) with q = p^m, or empty when q is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q);
/// floor(sqrt(n)) in exact integer arithmetic.
std::uint64_t isqrt(std::uint64_t n);

/// True iff the monic polynomial c_0..c_m over GF(p) is irreducible.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

}  // namespace isodual::gf
