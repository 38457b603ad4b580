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

#include "poly.hpp"

#include "error.hpp"

namespace isodual::gf {

Poly::Poly(const Field& f, std::vector<std::uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= f.q()) throw InvalidArgument("polynomial coefficient out of range");
  normalize();
}

Poly Poly::constant(const Element& c) {
  return Poly(c.field(), {c.enc()});
}

Poly Poly::monomial(const Field& f, std::size_t degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return Poly(f, std::move(c));
}

Poly Poly::linear_root(const Element& a) {
  const Field& f = a.field();
  return Poly(f, {f.neg(a.enc()), 1});
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!f_->same_as(*o.f_)) throw InvalidArgument("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  Poly r(*f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff(i), o.coeff(i));
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  Poly r(*f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->sub(coeff(i), o.coeff(i));
  r.normalize();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly r(*f_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
  }
  r.normalize();
  return r;
}

Poly Poly::scaled(std::uint32_t s) const {
  Poly r(*f_);
  r.c_.reserve(c_.size());
  for (auto c : c_) r.c_.push_back(f_->mul(c, s));
  r.normalize();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead()));
}

std::uint32_t Poly::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

Element Poly::eval(const Element& x) const {
  if (!f_->same_as(x.field())) throw InvalidArgument("evaluation point from a different field");
  return f_->element(eval(x.enc()));
}

Poly Poly::derivative() const {
  Poly r(*f_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = f_->mul(f_->int_enc(static_cast<std::int64_t>(i)), c_[i]);
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same(d);
  if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
  Poly q(*f_), r = *this;
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), 0);
  const std::uint32_t lead_inv = f_->inv(d.lead());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    const std::uint32_t c = f_->mul(r.lead(), lead_inv);
    q.c_[shift] = c;
    for (std::size_t i = 0; i < d.c_.size(); ++i)
      r.c_[shift + i] = f_->sub(r.c_[shift + i], f_->mul(c, d.c_[i]));
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

int Poly::root_multiplicity(std::uint32_t a) const {
  if (is_zero()) throw InvalidArgument("root multiplicity of the zero polynomial");
  int mult = 0;
  Poly cur = *this;
  const Poly lin(*f_, {f_->neg(a), 1});
  while (cur.eval(a) == 0) {
    cur = cur.divmod(lin).first;
    ++mult;
  }
  return mult;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.f_->same_as(*b.f_) && a.c_ == b.c_;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Element poly_eval(std::span<const Element> f, const Element& a) {
  Element acc = a.field().zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * a + f[i];
  return acc;
}

std::vector<Element> poly_derivative(std::span<const Element> f) {
  std::vector<Element> out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i].field().from_int(static_cast<std::int64_t>(i)) * f[i]);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace isodual::gf
