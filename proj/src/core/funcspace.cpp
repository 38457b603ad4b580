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

#include "funcspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace isodual::fs {

// ------------------------------------------------------------------ Divisor

Divisor& Divisor::add(const Point& p, std::int64_t n) {
  if (n == 0) return *this;
  auto& v = coeffs_[p];
  v += n;
  if (v == 0) coeffs_.erase(p);
  return *this;
}

std::int64_t Divisor::coefficient(const Point& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, n] : coeffs_) d += n;
  return d;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, n] : o.coeffs_) r.add(p, -n);
  return r;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, n] : o.coeffs_) r.add(p, n);
  return r;
}

bool Divisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return t.second >= 0; });
}

Point divisor_sum(const Curve& c, const Divisor& d) {
  Point acc = Point::at_infinity();
  for (const auto& [p, n] : d.terms()) acc = c.add(acc, c.mul(n, p));
  return acc;
}

bool is_principal(const Curve& c, const Divisor& d) {
  return d.degree() == 0 && divisor_sum(c, d).is_infinity();
}

// --------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Poly a, Poly b, Poly c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (a_.is_zero() && b_.is_zero()) throw InvalidArgument("zero rational function");
  Poly g = gcd(gcd(a_, b_), c_);
  if (g.degree() > 0) {
    a_ = a_.divmod(g).first;
    b_ = b_.divmod(g).first;
    c_ = c_.divmod(g).first;
  }
  const std::uint32_t s = c_.field().inv(c_.lead());
  a_ = a_.scaled(s);
  b_ = b_.scaled(s);
  c_ = c_.scaled(s);
}

namespace {

int weighted_degree(const Poly& a, const Poly& b) {
  int w = -1;
  if (!a.is_zero()) w = 2 * a.degree();
  if (!b.is_zero()) w = std::max(w, 3 + 2 * b.degree());
  return w;
}

// v_P(a + b y) at an affine point.
std::int64_t numerator_valuation(const Curve& cv, Poly a, Poly b, const Point& p) {
  const auto& F = cv.field();
  const std::uint32_t x0 = p.x.enc(), y0 = p.y.enc();
  const std::uint32_t ybar = F.sub(F.neg(y0), cv.lin(x0));  // y(-P)
  const Poly lin(F, {F.neg(x0), 1});
  const Poly L(F, {cv.a3().enc(), cv.a1().enc()});
  const Poly cubic(F, {cv.a6().enc(), cv.a4().enc(), cv.a2().enc(), 1});
  const bool ramified = ybar == y0;
  std::int64_t val = 0;
  while (true) {
    const std::uint32_t av = a.eval(x0), bv = b.eval(x0);
    if (F.add(av, F.mul(bv, y0)) != 0) return val;
    // g ḡ = a^2 - ab(a1 x + a3) - b^2 f(x), a polynomial in x.
    auto norm = [&] { return a * a - a * b * L - b * b * cubic; };
    if (ramified) return val + norm().root_multiplicity(x0);
    if (F.add(av, F.mul(bv, ybar)) != 0) return val + norm().root_multiplicity(x0);
    // g vanishes at P and -P: (x - x0) divides a and b.
    a = a.divmod(lin).first;
    b = b.divmod(lin).first;
    ++val;
  }
}

}  // namespace

std::int64_t valuation(const Curve& cv, const RationalFunction& f, const Point& p) {
  if (!cv.contains(p)) throw InvalidArgument("valuation: point not on curve");
  if (p.is_infinity()) return -weighted_degree(f.a(), f.b()) + 2 * f.c().degree();
  const std::int64_t e = cv.is_two_torsion(p) ? 2 : 1;
  const std::int64_t den = e * f.c().root_multiplicity(p.x.enc());
  return numerator_valuation(cv, f.a(), f.b(), p) - den;
}

Element evaluate(const Curve& cv, const RationalFunction& f, const Point& p) {
  if (p.is_infinity()) throw InvalidArgument("evaluate: point at infinity");
  const auto& F = cv.field();
  const std::uint32_t x0 = p.x.enc();
  const std::uint32_t cv0 = f.c().eval(x0);
  if (cv0 == 0) throw InvalidArgument("evaluate: denominator vanishes at " + ec::to_string(p));
  const std::uint32_t num = F.add(f.a().eval(x0), F.mul(f.b().eval(x0), p.y.enc()));
  return F.element(F.div(num, cv0));
}

Divisor divisor_on(const Curve& cv, const RationalFunction& f, std::span<const Point> points) {
  Divisor d;
  bool saw_infinity = false;
  for (const auto& p : points) {
    if (p.is_infinity()) saw_infinity = true;
    d.add(p, valuation(cv, f, p));
  }
  if (!saw_infinity) d.add(Point::at_infinity(), valuation(cv, f, Point::at_infinity()));
  return d;
}

bool in_riemann_roch_space(const Curve& cv, const RationalFunction& f, const Divisor& g,
                           std::span<const Point> points) {
  std::set<Point> todo(points.begin(), points.end());
  for (const auto& [p, n] : g.terms()) todo.insert(p);
  todo.insert(Point::at_infinity());
  for (const auto& p : todo)
    if (valuation(cv, f, p) + g.coefficient(p) < 0) return false;
  return true;
}

RRBasis rr_basis(const Curve& cv, int k, const Point& q) {
  if (k < 2 || k % 2 != 0) throw InvalidArgument("rr_basis: k must be even and >= 2");
  if (!cv.contains(q)) throw InvalidArgument("rr_basis: Q is not on the curve");
  if (q.is_infinity() || !cv.is_two_torsion(q)) throw InvalidArgument("rr_basis: Q must have order 2");
  const auto& F = cv.field();
  const Poly one(F, {1});
  const Poly zero(F);
  const Poly x = Poly::monomial(F, 1);
  const int half = (k - 2) / 2;

  struct Entry {
    int pole;
    RationalFunction f;
  };
  std::vector<Entry> entries;
  for (int i = 0; i <= half; ++i) entries.push_back({2 * i, RationalFunction(Poly::monomial(F, i), zero, one)});

  if (F.is_binary()) {
    if (!cv.a1().is_one() || !cv.a3().is_zero() || !cv.a4().is_zero())
      throw InvalidArgument("rr_basis: characteristic 2 requires y^2 + xy = x^3 + a2 x^2 + a6");
    if (!q.x.is_zero()) throw InvalidArgument("rr_basis: Q must be (0, sqrt(a6))");
    const std::uint32_t g = q.y.enc();
    // j = 0: (y - g) / x; j >= 1: (y - g) x^(j-1)
    entries.push_back({1, RationalFunction(Poly(F, {F.neg(g)}), one, x)});
    for (int j = 1; j <= half; ++j) {
      const Poly xj = Poly::monomial(F, j - 1);
      entries.push_back({2 * j + 1, RationalFunction(xj.scaled(F.neg(g)), xj, one)});
    }
  } else {
    if (!cv.a1().is_zero() || !cv.a3().is_zero())
      throw InvalidArgument("rr_basis: odd characteristic requires a1 = a3 = 0");
    if (!q.y.is_zero()) throw InvalidArgument("rr_basis: Q must be (beta, 0)");
    const Poly den = Poly::linear_root(q.x);
    for (int j = 0; j <= half; ++j)
      entries.push_back({2 * j + 1, RationalFunction(zero, Poly::monomial(F, j), den)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.pole < b.pole; });

  RRBasis basis;
  basis.divisor.add(Point::at_infinity(), k - 1).add(q, 1);
  for (auto& e : entries) {
    basis.pole_orders_at_O.push_back(e.pole);
    basis.functions.push_back(std::move(e.f));
  }
  return basis;
}

InterpolationPoly interpolation_poly(std::span<const Element> xs) {
  if (xs.empty()) throw InvalidArgument("interpolation_poly: empty point set");
  const auto& F = xs[0].field();
  std::set<std::uint32_t> seen;
  Poly h(F, {1});
  for (const auto& a : xs) {
    if (!seen.insert(a.enc()).second) throw InvalidArgument("interpolation_poly: repeated root " + std::to_string(a.enc()));
    h = h * Poly::linear_root(a);
  }
  Poly dh = h.derivative();
  return {std::move(h), std::move(dh)};
}

}  // namespace isodual::fs
