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

#include "gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "error.hpp"

namespace isodual::gf {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomials over GF(p) with small coefficients; used only while building a
// field, before the log tables exist.
Coeffs pmod(Coeffs a, const Coeffs& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  // f need not be monic here (gcd remainders), so scale by lead inverse.
  std::uint64_t lead = f.back();
  std::uint64_t lead_inv = 1;
  for (std::uint64_t e = p - 2, b = lead; e; e >>= 1, b = b * b % p)
    if (e & 1) lead_inv = lead_inv * b % p;
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    trim(a);
  }
  return a;
}

Coeffs pmulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(std::move(r), f, p);
}

Coeffs ppowmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint64_t p) {
  Coeffs r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Coeffs pgcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim_ws(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("field spec: bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  std::uint32_t m = 0;
  for (std::uint64_t t = q; t > 1; t /= f[0]) ++m;
  return std::make_pair(f[0], m);
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  const std::size_t m = modulus.size() - 1;
  if (m == 1) return true;
  Coeffs f(modulus.begin(), modulus.end());
  if (m <= 3) {
    // Degree <= 3 is reducible iff it has a root.
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = m + 1; i-- > 0;) acc = (acc * x + f[i]) % p;
      if (acc == 0) return false;
    }
    return true;
  }
  // No factor of degree i <= m/2 iff gcd(x^(p^i) - x, f) = 1 for each such i.
  Coeffs xp{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    xp = ppowmod(xp, p, f, p);
    Coeffs t = xp;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    Coeffs g = pgcd(f, t, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::parse(std::string_view text) {
  FieldSpec s;
  bool have_p = false, have_m = false, have_mod = false;
  std::vector<std::uint32_t> mod;
  bool in_mod = false;
  std::size_t pos = 0;
  text = trim_ws(text);
  if (text.empty()) throw ParseError("field spec: empty");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim_ws(text.substr(pos, comma - pos));
    pos = comma + 1;
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) {
      if (!in_mod) throw ParseError("field spec: expected key=value, got '" + std::string(tok) + "'");
      mod.push_back(static_cast<std::uint32_t>(parse_uint(tok, "mod")));
      continue;
    }
    std::string_view key = trim_ws(tok.substr(0, eq));
    std::string_view val = tok.substr(eq + 1);
    in_mod = false;
    if (key == "p") {
      s.p = static_cast<std::uint32_t>(parse_uint(val, "p"));
      have_p = true;
    } else if (key == "m") {
      s.m = static_cast<std::uint32_t>(parse_uint(val, "m"));
      have_m = true;
    } else if (key == "mod") {
      mod.push_back(static_cast<std::uint32_t>(parse_uint(val, "mod")));
      in_mod = true;
      have_mod = true;
    } else {
      throw ParseError("field spec: unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_p) throw ParseError("field spec: missing p");
  if (!have_m) s.m = have_mod ? static_cast<std::uint32_t>(mod.size() - 1) : 1;
  s.modulus = have_mod ? mod : std::vector<std::uint32_t>{0, 1};
  if (!have_mod && s.m != 1) throw ParseError("field spec: mod required when m > 1");
  return s;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "p=" << p << ",m=" << m << ",mod=";
  for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
  return os.str();
}

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  return q;
}

// -------------------------------------------------------------------- Field

FieldPtr Field::make(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw InvalidArgument("field: p=" + std::to_string(spec.p) + " is not prime");
  if (spec.m < 1) throw InvalidArgument("field: m must be >= 1");
  if (spec.modulus.size() != spec.m + 1)
    throw InvalidArgument("field: modulus must have m+1 coefficients");
  if (spec.modulus.back() != 1) throw InvalidArgument("field: modulus must be monic");
  for (auto c : spec.modulus)
    if (c >= spec.p) throw InvalidArgument("field: modulus coefficient not reduced mod p");
  long double qd = 1;
  for (std::uint32_t i = 0; i < spec.m; ++i) qd *= spec.p;
  if (qd > kMaxFieldOrder) throw InvalidArgument("field: order exceeds " + std::to_string(kMaxFieldOrder));
  if (!is_irreducible(spec.p, spec.modulus))
    throw InvalidArgument("field: modulus is reducible over GF(" + std::to_string(spec.p) + ")");
  return FieldPtr(new Field(spec));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint64_t p = spec_.p;
  q_ = static_cast<std::uint32_t>(spec_.order());
  const Coeffs f(spec_.modulus.begin(), spec_.modulus.end());
  auto to_coeffs = [&](std::uint32_t enc) {
    Coeffs c;
    for (std::uint32_t i = 0; i < spec_.m; ++i, enc /= spec_.p) c.push_back(enc % spec_.p);
    trim(c);
    return c;
  };
  auto to_enc = [&](const Coeffs& c) {
    std::uint64_t e = 0;
    for (std::size_t i = c.size(); i-- > 0;) e = e * p + c[i];
    return static_cast<std::uint32_t>(e);
  };

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Coeffs c = to_coeffs(a);
    for (auto& x : c) x = (p - x) % p;
    neg_[a] = to_enc(c);
  }
  if (p != 2 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0, pw = 1, x = a, y = b;
        for (std::uint32_t i = 0; i < spec_.m; ++i, x /= spec_.p, y /= spec_.p, pw *= spec_.p)
          r += ((x % spec_.p + y % spec_.p) % spec_.p) * pw;
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(r);
      }
  }

  unit_primes_ = prime_factors(q_ - 1);
  auto is_primitive = [&](std::uint32_t g) {
    if (g == 0) return false;
    for (auto l : unit_primes_) {
      Coeffs r = ppowmod(to_coeffs(g), (q_ - 1) / l, f, p);
      if (r.size() == 1 && r[0] == 1) return false;
    }
    return true;
  };
  const std::uint32_t th = spec_.m > 1 ? spec_.p : (spec_.p - spec_.modulus[0]) % spec_.p;
  if (q_ == 2) {
    generator_ = 1;
  } else if (is_primitive(th)) {
    generator_ = th;
  } else {
    for (std::uint32_t g = 1; g < q_; ++g)
      if (is_primitive(g)) {
        generator_ = g;
        break;
      }
  }

  exp_.assign(2 * std::size_t{q_ - 1} + 1, 0);
  log_.assign(q_, 0);
  Coeffs cur{1};
  const Coeffs gc = to_coeffs(generator_);
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const std::uint32_t e = to_enc(cur);
    exp_[i] = e;
    exp_[i + q_ - 1] = e;
    log_[e] = i;
    cur = pmulmod(cur, gc, f, p);
  }

  if (p == 2) {
    as_root_.assign(q_, -1);
    for (std::uint32_t z = 0; z < q_; ++z) {
      const std::uint32_t w = mul(z, z) ^ z;
      if (as_root_[w] < 0) as_root_[w] = z;
    }
  } else {
    for (std::uint32_t a = 1; a < q_; ++a)
      if (log_[a] % 2 == 1) {
        nonresidue_ = a;
        break;
      }
  }
}

Element Field::element(std::uint32_t enc) const {
  if (enc >= q_) throw InvalidArgument("element encoding " + std::to_string(enc) + " out of range for q=" + std::to_string(q_));
  return Element(*this, enc);
}

Element Field::theta() const {
  return element(spec_.m > 1 ? spec_.p : (spec_.p - spec_.modulus[0]) % spec_.p);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (spec_.p == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  std::uint32_t r = 0, pw = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i, a /= spec_.p, b /= spec_.p, pw *= spec_.p)
    r += ((a % spec_.p + b % spec_.p) % spec_.p) * pw;
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw InvalidArgument("negative power of zero");
    return 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t r = static_cast<std::int64_t>((static_cast<__int128>(log_[a]) * (e % n)) % n);
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::int_enc(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return static_cast<std::uint32_t>(r);
}

bool Field::is_square(std::uint32_t a) const {
  if (a == 0 || spec_.p == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::optional<std::uint32_t> Field::sqrt(std::uint32_t a) const {
  if (a == 0) return 0u;
  if (spec_.p == 2) return pow(a, q_ / 2);
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks with q - 1 = Q 2^S.
  std::uint64_t Q = q_ - 1;
  std::uint32_t S = 0;
  while (Q % 2 == 0) {
    Q /= 2;
    ++S;
  }
  std::uint32_t M = S;
  std::uint32_t c = pow(nonresidue_, static_cast<std::int64_t>(Q));
  std::uint32_t t = pow(a, static_cast<std::int64_t>(Q));
  std::uint32_t R = pow(a, static_cast<std::int64_t>((Q + 1) / 2));
  while (t != 1) {
    std::uint32_t i = 0;
    for (std::uint32_t tt = t; tt != 1; tt = mul(tt, tt)) ++i;
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 < M - i; ++j) b = mul(b, b);
    M = i;
    c = mul(b, b);
    t = mul(t, c);
    R = mul(R, b);
  }
  return std::min(R, neg(R));
}

std::optional<std::uint32_t> Field::artin_schreier_root(std::uint32_t w) const {
  if (spec_.p != 2) throw InvalidArgument("artin_schreier_root requires characteristic 2");
  if (as_root_[w] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(as_root_[w]);
}

std::vector<std::uint32_t> Field::digits(std::uint32_t enc) const {
  std::vector<std::uint32_t> d(spec_.m);
  for (std::uint32_t i = 0; i < spec_.m; ++i, enc /= spec_.p) d[i] = enc % spec_.p;
  return d;
}

std::uint32_t Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != spec_.m) throw InvalidArgument("coefficient list length must equal m");
  std::uint64_t e = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= spec_.p) throw InvalidArgument("coefficient not reduced mod p");
    e = e * spec_.p + d[i];
  }
  return static_cast<std::uint32_t>(e);
}

// ------------------------------------------------------------------ Element

Element::Element(const Field& field, std::uint32_t enc) : field_(&field), enc_(enc) {}

const Field& Element::field() const {
  if (!field_) throw InvalidArgument("element has no field");
  return *field_;
}

std::vector<std::uint32_t> Element::coeffs() const { return field().digits(enc_); }

void Element::check_same(const Element& o) const {
  if (!field_ || !o.field_) throw InvalidArgument("element has no field");
  if (!field_->same_as(*o.field_))
    throw InvalidArgument("mismatched fields: " + field_->spec().to_string() + " vs " + o.field_->spec().to_string());
}

Element Element::operator+(const Element& o) const {
  check_same(o);
  return Element(*field_, field_->add(enc_, o.enc_));
}
Element Element::operator-(const Element& o) const {
  check_same(o);
  return Element(*field_, field_->sub(enc_, o.enc_));
}
Element Element::operator-() const { return Element(field(), field_->neg(enc_)); }
Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(*field_, field_->mul(enc_, o.enc_));
}
Element Element::operator/(const Element& o) const {
  check_same(o);
  return Element(*field_, field_->div(enc_, o.enc_));
}
Element Element::inv() const { return Element(field(), field_->inv(enc_)); }
Element Element::pow(std::int64_t e) const { return Element(field(), field_->pow(enc_, e)); }
std::optional<Element> Element::sqrt() const {
  auto r = field().sqrt(enc_);
  if (!r) return std::nullopt;
  return Element(*field_, *r);
}

bool operator==(const Element& a, const Element& b) {
  if (a.enc_ != b.enc_) return false;
  if (a.field_ == b.field_) return true;
  if (!a.field_ || !b.field_) return false;
  return a.field_->same_as(*b.field_);
}

}  // namespace isodual::gf
