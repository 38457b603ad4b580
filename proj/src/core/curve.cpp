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

#include "curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace isodual::ec {

std::uint64_t Point::key() const {
  if (infinity) return ~std::uint64_t{0};
  return (std::uint64_t{x.enc()} << 32) | y.enc();
}

bool operator==(const Point& a, const Point& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x && a.y == b.y;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.infinity || b.infinity) {
    if (a.infinity && b.infinity) return std::strong_ordering::equal;
    return a.infinity ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.x.enc() <=> b.x.enc(); c != 0) return c;
  return a.y.enc() <=> b.y.enc();
}

std::string to_string(const Point& p) {
  if (p.infinity) return "O";
  return "(" + std::to_string(p.x.enc()) + "," + std::to_string(p.y.enc()) + ")";
}

// -------------------------------------------------------------------- Curve

Curve::Curve(gf::FieldPtr field, std::array<Element, 5> a) : field_(std::move(field)), a_(std::move(a)) {
  if (!field_) throw InvalidArgument("curve: null field");
  for (const auto& c : a_)
    if (!c.has_field() || !c.field().same_as(*field_)) throw InvalidArgument("curve: coefficient from another field");
  for (auto& c : a_) c = field_->element(c.enc());
  if (discriminant().is_zero()) throw InvalidArgument("curve: singular (discriminant is zero)");
}

Curve Curve::parse(gf::FieldPtr field, std::string_view coeffs) {
  std::array<Element, 5> a;
  std::size_t idx = 0, pos = 0;
  std::string s(coeffs);
  while (true) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t\r\n") + 1);
    if (idx >= 5) throw ParseError("curve spec: expected exactly 5 coefficients a1,a2,a3,a4,a6");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("curve spec: bad coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("curve spec: bad coefficient '" + tok + "'");
    if (v >= field->q()) throw ParseError("curve spec: coefficient " + tok + " out of range for q=" + std::to_string(field->q()));
    a[idx++] = field->element(static_cast<std::uint32_t>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (idx != 5) throw ParseError("curve spec: expected exactly 5 coefficients a1,a2,a3,a4,a6");
  return Curve(std::move(field), a);
}

std::string Curve::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << a_[i].enc();
  return os.str();
}

Element Curve::discriminant() const {
  const auto& F = *field_;
  auto n = [&](std::int64_t v) { return F.from_int(v); };
  const Element &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
  Element b2 = a1 * a1 + n(4) * a2;
  Element b4 = n(2) * a4 + a1 * a3;
  Element b6 = a3 * a3 + n(4) * a6;
  Element b8 = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
}

void Curve::check_point(const Point& p) const {
  if (p.infinity) return;
  if (!p.x.has_field() || !p.y.has_field() || !p.x.field().same_as(*field_) || !p.y.field().same_as(*field_))
    throw InvalidArgument("point " + ec::to_string(p) + " is not over the curve's field");
}

std::uint32_t Curve::rhs(std::uint32_t x) const {
  const auto& F = *field_;
  std::uint32_t r = F.add(x, a_[1].enc());           // x + a2
  r = F.add(F.mul(r, x), a_[3].enc());               // x^2 + a2 x + a4
  return F.add(F.mul(r, x), a_[4].enc());            // ... + a6
}

std::uint32_t Curve::lin(std::uint32_t x) const {
  return field_->add(field_->mul(a_[0].enc(), x), a_[2].enc());
}

bool Curve::contains(const Point& p) const {
  check_point(p);
  if (p.infinity) return true;
  const auto& F = *field_;
  const std::uint32_t y = p.y.enc(), x = p.x.enc();
  const std::uint32_t lhs = F.add(F.mul(y, y), F.mul(lin(x), y));
  return lhs == rhs(x);
}

Point Curve::point(std::uint32_t x, std::uint32_t y) const {
  Point p = Point::affine(field_->element(x), field_->element(y));
  if (!contains(p)) throw InvalidArgument("point " + ec::to_string(p) + " is not on the curve");
  return p;
}

Point Curve::neg(const Point& p) const {
  check_point(p);
  if (p.infinity) return p;
  return Point::affine(p.x, -p.y - a_[0] * p.x - a_[2]);
}

bool Curve::is_two_torsion(const Point& p) const {
  if (p.infinity) return true;
  return neg(p).y == p.y;
}

Point Curve::add(const Point& p, const Point& q) const {
  check_point(p);
  check_point(q);
  if (p.infinity) return q;
  if (q.infinity) return p;
  const auto& F = *field_;
  const Element &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
  Element lambda, nu;
  if (p.x == q.x) {
    // Only P and -P share an x-coordinate.
    if (neg(p).y == q.y) return Point::at_infinity();
    const Element den = F.from_int(2) * p.y + a1 * p.x + a3;
    const Element x2 = p.x * p.x;
    lambda = (F.from_int(3) * x2 + F.from_int(2) * a2 * p.x + a4 - a1 * p.y) / den;
    nu = (-(x2 * p.x) + a4 * p.x + F.from_int(2) * a6 - a3 * p.y) / den;
  } else {
    const Element dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  const Element x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  const Element y3 = -(lambda + a1) * x3 - nu - a3;
  return Point::affine(x3, y3);
}

Point Curve::mul(std::int64_t n, const Point& p) const {
  check_point(p);
  Point base = n < 0 ? neg(p) : p;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Point acc = Point::at_infinity();
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t Curve::count_points() const {
  const auto& F = *field_;
  std::uint64_t count = 1;
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    const std::uint32_t b = lin(x), c = rhs(x);
    if (F.is_binary()) {
      if (b == 0) {
        count += 1;
      } else if (F.artin_schreier_root(F.div(c, F.mul(b, b)))) {
        count += 2;
      }
    } else {
      // (2y + b)^2 = b^2 + 4c
      const std::uint32_t d = F.add(F.mul(b, b), F.mul(F.int_enc(4), c));
      if (d == 0)
        count += 1;
      else if (F.is_square(d))
        count += 2;
    }
  }
  return count;
}

bool operator==(const Curve& a, const Curve& b) {
  return a.field_->same_as(*b.field_) && a.a_ == b.a_;
}

// --------------------------------------------------------------- free ops

std::vector<Point> enumerate_points(const Curve& c) {
  const auto& F = c.field();
  std::vector<Point> pts{Point::at_infinity()};
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    const std::uint32_t b = c.lin(x), r = c.rhs(x);
    std::vector<std::uint32_t> ys;
    if (F.is_binary()) {
      if (b == 0) {
        ys.push_back(*F.sqrt(r));
      } else if (auto z = F.artin_schreier_root(F.div(r, F.mul(b, b)))) {
        ys.push_back(F.mul(b, *z));
        ys.push_back(F.mul(b, F.add(*z, 1)));
      }
    } else {
      const std::uint32_t d = F.add(F.mul(b, b), F.mul(F.int_enc(4), r));
      if (auto s = F.sqrt(d)) {
        const std::uint32_t half = F.inv(F.int_enc(2));
        ys.push_back(F.mul(F.sub(*s, b), half));
        if (*s != 0) ys.push_back(F.mul(F.sub(F.neg(*s), b), half));
      }
    }
    std::sort(ys.begin(), ys.end());
    for (auto y : ys) pts.push_back(Point::affine(F.element(x), F.element(y)));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::uint64_t point_order(const Curve& c, const Point& p, std::uint64_t group_order) {
  if (p.infinity) return 1;
  std::uint64_t n = group_order;
  if (!c.mul(static_cast<std::int64_t>(n), p).infinity)
    throw InvalidArgument("point_order: group order does not annihilate the point");
  for (auto l : gf::prime_factors(group_order)) {
    while (n % l == 0 && c.mul(static_cast<std::int64_t>(n / l), p).infinity) n /= l;
  }
  return n;
}

std::uint64_t point_order(const Curve& c, const Point& p) {
  return point_order(c, p, c.count_points());
}

std::vector<Point> torsion_points(const Curve& c, std::uint64_t r) {
  if (r == 0) throw InvalidArgument("torsion_points: r must be positive");
  std::vector<Point> out;
  for (const auto& p : enumerate_points(c))
    if (c.mul(static_cast<std::int64_t>(r), p).infinity) out.push_back(p);
  return out;
}

// -------------------------------------------------------- GroupStructure

void GroupStructure::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < points.size(); ++i) index_.emplace(points[i].key(), i);
}

std::optional<std::size_t> GroupStructure::index_of(const Point& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> GroupStructure::coordinates(const Point& p) const {
  auto i = index_of(p);
  if (!i) return std::nullopt;
  return coords[*i];
}

std::optional<std::uint64_t> GroupStructure::element_id(const Point& p) const {
  auto c = coordinates(p);
  if (!c) return std::nullopt;
  return c->first * d2 + c->second;
}

GroupStructure group_structure(const Curve& c) {
  GroupStructure gs;
  gs.points = enumerate_points(c);
  gs.build_index();
  const std::uint64_t n = gs.points.size();

  std::vector<std::uint64_t> orders(n);
  std::uint64_t exponent = 1;
  for (std::size_t i = 0; i < n; ++i) {
    orders[i] = point_order(c, gs.points[i], n);
    exponent = std::max(exponent, orders[i]);
  }
  gs.d2 = exponent;
  gs.d1 = n / exponent;
  if (gs.d1 * gs.d2 != n || gs.d2 % gs.d1 != 0) throw InternalError("group_structure: inconsistent exponent");

  std::size_t i2 = 0;
  while (orders[i2] != gs.d2) ++i2;
  gs.basis2 = gs.points[i2];

  // Subgroup generated by basis2; a cyclic subgroup of maximal order is a
  // direct summand, so a complement generator of order d1 exists.
  std::vector<char> in_sub(n, 0);
  {
    Point acc = Point::at_infinity();
    for (std::uint64_t j = 0; j < gs.d2; ++j) {
      in_sub[*gs.index_of(acc)] = 1;
      acc = c.add(acc, gs.basis2);
    }
  }
  gs.basis1 = Point::at_infinity();
  if (gs.d1 > 1) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (orders[i] != gs.d1) continue;
      Point acc = gs.points[i];
      bool disjoint = true;
      for (std::uint64_t j = 1; j < gs.d1; ++j) {
        if (in_sub[*gs.index_of(acc)]) {
          disjoint = false;
          break;
        }
        acc = c.add(acc, gs.points[i]);
      }
      if (disjoint) {
        gs.basis1 = gs.points[i];
        found = true;
      }
    }
    if (!found) throw InternalError("group_structure: no complement generator found");
  }

  gs.coords.assign(n, {0, 0});
  std::vector<char> seen(n, 0);
  Point row = Point::at_infinity();
  for (std::uint64_t a = 0; a < gs.d1; ++a) {
    Point cur = row;
    for (std::uint64_t b = 0; b < gs.d2; ++b) {
      const std::size_t idx = *gs.index_of(cur);
      if (seen[idx]) throw InternalError("group_structure: basis does not generate a direct sum");
      seen[idx] = 1;
      gs.coords[idx] = {a, b};
      cur = c.add(cur, gs.basis2);
    }
    row = c.add(row, gs.basis1);
  }
  return gs;
}

std::vector<FeasibleOrder> feasible_orders(std::uint64_t q) {
  auto pp = gf::prime_power(q);
  if (!pp) throw InvalidArgument("feasible_orders: " + std::to_string(q) + " is not a prime power");
  const auto [p, m] = *pp;
  const bool m_even = m % 2 == 0;
  std::uint64_t sqrt_q = 0;
  if (m_even) {
    sqrt_q = 1;
    for (std::uint32_t i = 0; i < m / 2; ++i) sqrt_q *= p;
  }
  std::uint64_t d_beta = 1;  // p^((m+1)/2) for odd m
  if (!m_even)
    for (std::uint32_t i = 0; i < (m + 1) / 2; ++i) d_beta *= p;

  const std::int64_t bound = static_cast<std::int64_t>(gf::isqrt(4 * q));
  std::vector<FeasibleOrder> out;
  for (std::int64_t beta = -bound; beta <= bound; ++beta) {
    const std::uint64_t ab = static_cast<std::uint64_t>(beta < 0 ? -beta : beta);
    std::string cases;
    auto mark = [&](char c) {
      if (!cases.empty()) cases += ',';
      cases += c;
    };
    if (std::gcd(ab, p) == 1) mark('a');
    if (m_even && ab == 2 * sqrt_q) mark('b');
    if (m_even && p % 3 != 1 && ab == sqrt_q) mark('c');
    if (!m_even && (p == 2 || p == 3) && ab == d_beta) mark('d');
    if ((!m_even || p % 4 != 1) && ab == 0) mark('e');
    if (!cases.empty())
      out.push_back({static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + 1 - beta), beta, cases});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return out;
}

}  // namespace isodual::ec
