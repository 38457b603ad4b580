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

#include "search.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "error.hpp"

namespace isodual::search {

using ec::Curve;

gf::FieldSpec default_field_spec(std::uint64_t q) {
  const auto pp = gf::prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const auto [p, m] = *pp;
  gf::FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(p);
  spec.m = m;
  if (m == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  // c_0..c_{m-1} counted as a base-p number, c_0 least significant
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= p;
  std::optional<gf::FieldSpec> fallback;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> mod(m + 1, 0);
    std::uint64_t t = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      mod[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    mod[m] = 1;
    if (mod[0] == 0 || !gf::is_irreducible(spec.p, mod)) continue;
    spec.modulus = mod;
    if (gf::Field::make(spec)->generator().enc() == static_cast<std::uint32_t>(p)) return spec;
    if (!fallback) fallback = spec;
  }
  if (fallback) return *fallback;
  throw InternalError("no irreducible polynomial found for q = " + std::to_string(q));
}

namespace {

bool nonsingular(const gf::Field& F, const std::array<std::uint32_t, 5>& a) {
  auto n = [&](std::int64_t v) { return F.int_enc(v); };
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return F.mul(x, y); };
  auto add = [&](std::uint32_t x, std::uint32_t y) { return F.add(x, y); };
  auto sub = [&](std::uint32_t x, std::uint32_t y) { return F.sub(x, y); };
  const std::uint32_t a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const std::uint32_t b2 = add(mul(a1, a1), mul(n(4), a2));
  const std::uint32_t b4 = add(mul(n(2), a4), mul(a1, a3));
  const std::uint32_t b6 = add(mul(a3, a3), mul(n(4), a6));
  std::uint32_t b8 = add(mul(mul(a1, a1), a6), mul(mul(n(4), a2), a6));
  b8 = sub(b8, mul(mul(a1, a3), a4));
  b8 = add(b8, mul(mul(a2, a3), a3));
  b8 = sub(b8, mul(a4, a4));
  std::uint32_t disc = F.neg(mul(mul(b2, b2), b8));
  disc = sub(disc, mul(n(8), mul(mul(b4, b4), b4)));
  disc = sub(disc, mul(n(27), mul(b6, b6)));
  disc = add(disc, mul(n(9), mul(mul(b2, b4), b6)));
  return disc != 0;
}

// Calls f(a) for every coefficient tuple of the family, in lexicographic order.
template <class F>
void for_each_tuple(const gf::Field& fld, Family family, F&& f) {
  const std::uint32_t q = fld.q();
  using A = std::array<std::uint32_t, 5>;
  switch (family) {
    case Family::General:
      for (std::uint32_t a1 = 0; a1 < q; ++a1)
        for (std::uint32_t a2 = 0; a2 < q; ++a2)
          for (std::uint32_t a3 = 0; a3 < q; ++a3)
            for (std::uint32_t a4 = 0; a4 < q; ++a4)
              for (std::uint32_t a6 = 0; a6 < q; ++a6) f(A{a1, a2, a3, a4, a6});
      return;
    case Family::Ordinary2:
      if (!fld.is_binary()) throw InvalidArgument("ordinary characteristic-2 family needs q even");
      for (std::uint32_t a2 = 0; a2 < q; ++a2)
        for (std::uint32_t a6 = 1; a6 < q; ++a6) f(A{1, a2, 0, 0, a6});
      return;
    case Family::SplitTwoTorsion:
      if (fld.is_binary()) throw InvalidArgument("split 2-torsion family needs q odd");
      for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = a + 1; b < q; ++b) {
          // x (x - a)(x - b) = x^3 - (a+b) x^2 + ab x
          f(A{0, fld.neg(fld.add(a, b)), 0, fld.mul(a, b), 0});
        }
      return;
    case Family::Canonical:
      if (fld.is_binary()) {
        for (std::uint32_t a2 = 0; a2 < q; ++a2)
          for (std::uint32_t a6 = 1; a6 < q; ++a6) f(A{1, a2, 0, 0, a6});
        for (std::uint32_t a3 = 1; a3 < q; ++a3)
          for (std::uint32_t a4 = 0; a4 < q; ++a4)
            for (std::uint32_t a6 = 0; a6 < q; ++a6) f(A{0, 0, a3, a4, a6});
      } else if (fld.p() == 3) {
        for (std::uint32_t a2 = 0; a2 < q; ++a2)
          for (std::uint32_t a4 = 0; a4 < q; ++a4)
            for (std::uint32_t a6 = 0; a6 < q; ++a6) f(A{0, a2, 0, a4, a6});
      } else {
        for (std::uint32_t a4 = 0; a4 < q; ++a4)
          for (std::uint32_t a6 = 0; a6 < q; ++a6) f(A{0, 0, 0, a4, a6});
      }
      return;
  }
}

Curve make_curve(const gf::FieldPtr& field, const std::array<std::uint32_t, 5>& a) {
  std::array<gf::Element, 5> e;
  for (std::size_t i = 0; i < 5; ++i) e[i] = field->element(a[i]);
  return Curve(field, e);
}

}  // namespace

std::vector<CurveRecord> enumerate_curves(const gf::FieldPtr& field, const CurvePredicate& pred, Family family,
                                          bool with_structure) {
  if (field->q() > kMaxEnumerationQ)
    throw InvalidArgument("curve enumeration is capped at q <= " + std::to_string(kMaxEnumerationQ));
  std::vector<CurveRecord> out;
  for_each_tuple(*field, family, [&](const std::array<std::uint32_t, 5>& a) {
    if (!nonsingular(*field, a)) return;
    Curve c = make_curve(field, a);
    const std::uint64_t order = c.count_points();
    if (pred && !pred(c, order)) return;
    CurveRecord r{c, order, std::nullopt};
    if (with_structure) r.structure = ec::group_structure(c);
    out.push_back(std::move(r));
  });
  return out;
}

int max_even_k(int construction, std::uint64_t order) {
  if (order % 2 != 0) return 0;
  const std::uint64_t odd = iso::odd_part(order);
  std::uint64_t k = construction == 1 ? (odd - 1) / 2 : odd - 1;
  if (construction == 2 && order % 4 != 0) return 0;
  k -= k % 2;
  return static_cast<int>(k);
}

BoundTableRow bound_for(std::uint64_t q) {
  const auto pp = gf::prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const std::uint64_t r = gf::isqrt(4 * q);  // floor(2 sqrt q)
  BoundTableRow row;
  row.q = q;
  if (q % 2 == 0) {
    const std::uint64_t s = gf::isqrt(q);
    if (s * s == q) {
      row.parity_case = "even-square";
      row.bound_n = (q + 2 * s - 8) / 2;
    } else {
      row.parity_case = "even-nonsquare";
      const std::uint64_t t = q + 1 + r;
      if (t % 2 == 0 && (t / 2 - 1) % 4 == 0)
        row.bound_n = (q + r - 1) / 2;
      else
        row.bound_n = (q + r - 3) / 2;
    }
  } else {
    row.parity_case = "odd";
    std::uint64_t best = 0;
    for (const auto& fo : ec::feasible_orders(q))
      if (fo.order % 4 == 0) best = std::max(best, 2 * (iso::odd_part(fo.order) - 1));
    row.bound_n = std::min((q + r - 3) / 2, best);
  }
  return row;
}

std::vector<BoundTableRow> bound_table(const std::vector<std::uint64_t>& qs, bool fill_achieved) {
  std::vector<BoundTableRow> rows;
  for (auto q : qs) {
    auto row = bound_for(q);
    if (fill_achieved) {
      auto field = gf::Field::make(default_field_spec(q));
      const int construction = field->is_binary() ? 1 : 2;
      const Family fam = construction == 1 ? Family::Ordinary2 : Family::SplitTwoTorsion;
      if (q > kMaxEnumerationQ) throw InvalidArgument("bound_table: q exceeds the enumeration cap");
      std::optional<Curve> best;
      int best_k = 0;
      for_each_tuple(*field, fam, [&](const std::array<std::uint32_t, 5>& a) {
        if (!nonsingular(*field, a)) return;
        Curve c = make_curve(field, a);
        const int k = max_even_k(construction, c.count_points());
        if (k > best_k) {
          best_k = k;
          best = c;
        }
      });
      if (best && best_k >= 2) {
        iso::ConstructionInput in{*best, best_k, construction, {1, 2}, iso::PairMode::Canonical, {}, false};
        const auto cert = iso::construct(in);
        row.achieved_n = cert.n();
        row.witness = BoundWitness{field->spec().to_string(), best->to_string(), construction, best_k, cert.hull};
        if (*row.achieved_n > row.bound_n)
          throw InternalError("achieved length " + std::to_string(*row.achieved_n) + " exceeds the bound for q = " +
                              std::to_string(q));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

int applicable_construction(const Curve& c, std::uint64_t order) {
  if (order % 2 != 0) return 0;
  if (c.field().is_binary()) {
    if (c.a1().is_one() && c.a3().is_zero() && c.a4().is_zero()) return 1;
    return 0;
  }
  if (!c.a1().is_zero() || !c.a3().is_zero()) return 0;
  return ec::torsion_points(c, 2).size() == 4 ? 2 : 0;
}

void require_small(std::uint64_t q, const char* what) {
  if (q > 64) throw InvalidArgument(std::string(what) + " is limited to q <= 64");
}

}  // namespace

std::vector<CensusRow> census(std::uint64_t q) {
  require_small(q, "census");
  auto field = gf::Field::make(default_field_spec(q));
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, int>, CensusRow> rows;
  for (auto& r : enumerate_curves(field, nullptr, Family::Canonical, true)) {
    const int cons = applicable_construction(r.curve, r.order);
    const auto key = std::make_tuple(r.order, r.structure->d1, r.structure->d2, cons);
    auto& row = rows[key];
    row.order = r.order;
    row.d1 = r.structure->d1;
    row.d2 = r.structure->d2;
    row.construction = cons;
    ++row.curves;
    if (cons) row.max_n = std::max<std::uint64_t>(row.max_n, 2 * static_cast<std::uint64_t>(max_even_k(cons, r.order)));
  }
  std::vector<CensusRow> out;
  for (auto& [k, v] : rows) out.push_back(v);
  return out;
}

std::vector<ProbeRow> max_length_probe(std::uint64_t q) {
  require_small(q, "max_length_probe");
  auto field = gf::Field::make(default_field_spec(q));
  std::vector<ProbeRow> out;
  for (auto& r : enumerate_curves(field, nullptr, Family::Canonical, false)) {
    ProbeRow row;
    row.curve = r.curve.to_string();
    row.order = r.order;
    row.construction = applicable_construction(r.curve, r.order);
    if (row.construction) {
      const int kmax = max_even_k(row.construction, r.order);
      for (int k = 2; k <= kmax; k += 2) {
        iso::ConstructionInput in{r.curve, k, row.construction, {1, 2}, iso::PairMode::Canonical, {}, false};
        const auto cert = iso::construct(in);
        ++row.certificates;
        row.max_n = std::max<std::uint64_t>(row.max_n, cert.n());
        if (2 * cert.n() > r.order) row.within_half_order = false;
        if (cert.hull == cert.k()) ++row.self_dual;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<code::AbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("group order must be positive");
  std::vector<code::AbelianGroup> out;
  if (n == 1) {
    out.emplace_back(std::vector<std::uint64_t>{1});
    return out;
  }
  // invariant factors m_1 | m_2 | ... | m_r, each > 1, product n
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t rest) {
    if (rest == 1) {
      out.emplace_back(cur);
      return;
    }
    const std::uint64_t prev = cur.empty() ? 1 : cur.back();
    for (std::uint64_t m = std::max<std::uint64_t>(2, prev); m <= rest; ++m) {
      if (rest % m != 0 || m % prev != 0) continue;
      // the remaining factors are multiples of m
      const std::uint64_t after = rest / m;
      if (after != 1 && after % m != 0) continue;
      cur.push_back(m);
      rec(after);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

LemmaReport lemma_max_search(const code::AbelianGroup& g, std::uint64_t n) {
  const std::uint64_t order = g.order();
  if (order % 2 != 0) throw InvalidArgument("lemma_max_search: group order must be even");
  if (n % 2 != 0) throw InvalidArgument("lemma_max_search: n must be even");
  if (2 * n < order + 2 || n > order)
    throw InvalidArgument("lemma_max_search: need #G/2 + 1 <= n <= #G");
  if (order > 64) throw InvalidArgument("lemma_max_search: exhaustive search limited to #G <= 64");
  LemmaReport rep;
  rep.group = g.to_string();
  rep.n = n;
  std::vector<std::uint64_t> sub(n);
  for (std::uint64_t i = 0; i < n; ++i) sub[i] = i;
  std::vector<char> in_a(order);
  while (true) {
    ++rep.subsets;
    std::uint64_t s = 0;
    std::fill(in_a.begin(), in_a.end(), 0);
    for (auto e : sub) {
      s = g.add(s, e);
      in_a[e] = 1;
    }
    for (std::uint64_t x = 0; x < order; ++x) {
      if (in_a[x] || g.add(x, x) != s) continue;
      ++rep.admissible;
      if (code::count_subset_sums(g, sub, n / 2, x).count == 0) rep.counterexamples.push_back({sub, x});
    }
    std::size_t i = n;
    while (i > 0 && sub[i - 1] == order - n + (i - 1)) --i;
    if (i == 0) break;
    ++sub[i - 1];
    for (std::size_t j = i; j < n; ++j) sub[j] = sub[j - 1] + 1;
  }
  return rep;
}

}  // namespace isodual::search
