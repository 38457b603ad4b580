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

#include "construction.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "error.hpp"

namespace isodual::iso {

using ec::Curve;
using ec::Point;

std::string to_string(PairMode m) {
  switch (m) {
    case PairMode::Canonical: return "canonical";
    case PairMode::EvalX: return "eval_x";
    case PairMode::OddX: return "odd_x";
  }
  return "canonical";
}

PairMode parse_pair_mode(const std::string& s) {
  if (s == "canonical") return PairMode::Canonical;
  if (s == "eval_x") return PairMode::EvalX;
  if (s == "odd_x") return PairMode::OddX;
  throw ParseError("unknown pair mode '" + s + "' (expected canonical, eval_x or odd_x)");
}

std::uint64_t odd_part(std::uint64_t n) {
  if (n == 0) return 0;
  while (n % 2 == 0) n /= 2;
  return n;
}

std::vector<std::pair<Point, Point>> odd_pairs(const Curve& c) {
  const auto pts = ec::enumerate_points(c);
  const std::uint64_t order = pts.size();
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& p : pts) {
    if (p.is_infinity()) continue;
    if (ec::point_order(c, p, order) % 2 == 0) continue;
    const Point np = c.neg(p);
    if (np < p) continue;  // listed by its partner
    pairs.emplace_back(p, np);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return pairs;
}

la::Matrix evaluation_matrix(const Curve& c, int k, const Point& q, const std::vector<Point>& points) {
  const auto basis = fs::rr_basis(c, k, q);
  la::Matrix m(c.field(), basis.functions.size(), points.size());
  for (std::size_t r = 0; r < basis.functions.size(); ++r)
    for (std::size_t j = 0; j < points.size(); ++j) m.at(r, j) = fs::evaluate(c, basis.functions[r], points[j]).enc();
  return m;
}

code::ScalingVector closed_form_v(const Curve& c, int construction, const Point& q_a, const std::vector<Point>& points) {
  const auto& F = c.field();
  std::vector<gf::Element> xs;
  std::set<std::uint32_t> seen;
  for (const auto& p : points) {
    if (p.is_infinity()) throw InvalidArgument("closed_form_v: O among the evaluation points");
    if (seen.insert(p.x.enc()).second) xs.push_back(p.x);
  }
  const auto hp = fs::interpolation_poly(xs);
  std::vector<std::uint32_t> v;
  v.reserve(points.size());
  for (const auto& p : points) {
    const std::uint32_t dh = hp.dh.eval(p.x.enc());
    if (dh == 0) throw InternalError("closed_form_v: h' vanishes at " + ec::to_string(p));
    if (construction == 1) {
      v.push_back(F.inv(dh));
    } else {
      if (p.y.is_zero()) throw InternalError("closed_form_v: y vanishes at " + ec::to_string(p));
      const std::uint32_t num = F.sub(p.x.enc(), q_a.x.enc());
      if (num == 0) throw InternalError("closed_form_v: x - x(Qa) vanishes at " + ec::to_string(p));
      v.push_back(F.div(num, F.mul(dh, p.y.enc())));
    }
  }
  return code::ScalingVector(F, std::move(v));
}

namespace {

// Chosen pairs in selection order.
std::vector<std::pair<Point, Point>> select_pairs(const Curve& c, const ConstructionInput& in, std::size_t count,
                                                  const Point& q_a) {
  const auto all = odd_pairs(c);
  if (all.size() < count)
    throw PreconditionError("need " + std::to_string(count) + " odd-order pairs, the curve has " +
                            std::to_string(all.size()));
  if (in.pair_mode == PairMode::Canonical) return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)};
  if (in.pair_x.size() != count)
    throw InvalidArgument("pair selection lists " + std::to_string(in.pair_x.size()) + " x-coordinates, " +
                          std::to_string(count) + " required");
  std::vector<std::pair<Point, Point>> out;
  std::set<std::uint32_t> used;
  for (auto x : in.pair_x) {
    if (!used.insert(x).second) throw InvalidArgument("pair selection repeats x = " + std::to_string(x));
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& pr) {
      const Point& p = in.pair_mode == PairMode::OddX ? pr.first : c.add(q_a, pr.first);
      return p.is_affine() && p.x.enc() == x;
    });
    if (it == all.end())
      throw PreconditionError("no odd-order pair matches x = " + std::to_string(x) + " (" + to_string(in.pair_mode) +
                              ")");
    out.push_back(*it);
  }
  return out;
}

IsoDualCertificate finish(const ConstructionInput& in, const Curve& c, const ec::GroupStructure& gs, const Point& q_a,
                          const Point& q_b, std::vector<std::uint32_t> selected, std::vector<Point> points) {
  const auto& F = c.field();
  const auto k = static_cast<std::size_t>(in.k);
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw InternalError("evaluation points are not distinct");
  const std::size_t n = points.size();
  if (n != 2 * k) throw InternalError("point count " + std::to_string(n) + " != 2k");
  if (2 * n > gs.order())
    throw InternalError("length " + std::to_string(n) + " exceeds #E/2 = " + std::to_string(gs.order() / 2));

  code::LinearCode C(c.field_ptr(), evaluation_matrix(c, in.k, q_a, points));
  if (C.k() != k) throw InternalError("evaluation matrix has rank " + std::to_string(C.k()) + ", expected k");
  auto v = closed_form_v(c, in.construction, q_a, points);

  const bool iso = code::same_code(code::scale(C, v), code::dual(C));
  if (!iso) throw InternalError("iso-dual identity scale(C, v) = dual(C) failed");
  const std::size_t hull = code::hull_dim(C);

  fs::Divisor g;
  g.add(Point::at_infinity(), in.k - 1).add(q_a, 1);
  const Point target = fs::divisor_sum(c, g);
  const auto witness = code::mds_subset_check(points, gs, k, target);
  if (witness.count != 0)
    throw InternalError("MDS witness: " + std::to_string(witness.count) + " k-subsets of D sum to sum(G)");

  std::string method = "subset-sum";
  if (in.brute_force_distance) {
    long double work = 1;
    for (std::size_t i = 0; i < k; ++i) work *= F.q();
    if (work <= static_cast<long double>(code::kBruteForceBudget)) {
      const auto wd = code::weight_distribution(C);
      std::size_t d = 0;
      for (std::size_t w = 1; w <= n && !d; ++w)
        if (wd[w]) d = w;
      if (d != n - k + 1) throw InternalError("exhaustive distance " + std::to_string(d) + " != n-k+1");
      // A_d = (q-1) C(n, k-1) for MDS codes
      std::uint64_t binom = 1;
      for (std::size_t i = 0; i < k - 1; ++i) binom = binom * (n - i) / (i + 1);
      if (wd[d] != (F.q() - 1) * binom) throw InternalError("A_d differs from (q-1) C(n, k-1)");
      method = "exhaustive";
    }
  }

  return IsoDualCertificate{in,        gs.order(), gs.d1, gs.d2, q_a, q_b,      std::move(selected),
                            points,    g,          C,     v,     n - k + 1,    hull, witness,
                            iso,       method};
}

void check_k(const ConstructionInput& in) {
  if (in.k < 2 || in.k % 2 != 0) throw InvalidArgument("k must be even and >= 2, got " + std::to_string(in.k));
}

}  // namespace

IsoDualCertificate construct1(const ConstructionInput& in) {
  check_k(in);
  const Curve& c = in.curve;
  const auto& F = c.field();
  if (!F.is_binary()) throw PreconditionError("construction 1 requires characteristic 2");
  if (!c.a1().is_one() || !c.a3().is_zero() || !c.a4().is_zero())
    throw PreconditionError("construction 1 requires the curve shape y^2 + xy = x^3 + a2 x^2 + a6");
  const Point q1 = c.point(0, *F.sqrt(c.a6().enc()));
  const auto gs = ec::group_structure(c);
  if (gs.order() % 2 != 0) throw PreconditionError("#E is odd");
  const auto k = static_cast<std::size_t>(in.k);
  if (2 * k > odd_part(gs.order()) - 1)
    throw PreconditionError("2k = " + std::to_string(2 * k) + " exceeds (odd part of #E) - 1 = " +
                            std::to_string(odd_part(gs.order()) - 1));
  // [k]Q1 + Q1 != O
  if (c.add(c.mul(in.k, q1), q1).is_infinity()) throw InternalError("[k]Q1 + Q1 = O");

  const auto pairs = select_pairs(c, in, k, q1);
  std::vector<std::uint32_t> selected;
  std::vector<Point> points;
  for (const auto& [p, np] : pairs) {
    selected.push_back(p.x.enc());
    points.push_back(c.add(q1, p));
    points.push_back(c.add(q1, np));
  }
  return finish(in, c, gs, q1, Point::at_infinity(), std::move(selected), std::move(points));
}

IsoDualCertificate construct2(const ConstructionInput& in) {
  check_k(in);
  const Curve& c = in.curve;
  const auto& F = c.field();
  if (F.is_binary()) throw PreconditionError("construction 2 requires odd characteristic");
  if (!c.a1().is_zero() || !c.a3().is_zero()) throw PreconditionError("construction 2 requires a1 = a3 = 0");
  auto t2 = ec::torsion_points(c, 2);
  if (t2.size() != 4) throw PreconditionError("E[2] is not fully rational");
  t2.erase(t2.begin());  // drop O
  const auto [ia, ib] = in.torsion_choice;
  if (ia < 1 || ia > 3 || ib < 1 || ib > 3 || ia == ib)
    throw InvalidArgument("torsion choice must be two distinct indices in 1..3");
  const Point q_a = t2[static_cast<std::size_t>(ia - 1)];
  const Point q_b = t2[static_cast<std::size_t>(ib - 1)];
  const auto gs = ec::group_structure(c);
  const auto k = static_cast<std::size_t>(in.k);
  if (k > odd_part(gs.order()) - 1)
    throw PreconditionError("k = " + std::to_string(k) + " exceeds (odd part of #E) - 1 = " +
                            std::to_string(odd_part(gs.order()) - 1));
  for (int k1 = 0; k1 <= in.k; ++k1) {
    const Point s = c.add(c.add(c.mul(k1, q_a), c.mul(in.k - k1, q_b)), q_a);
    if (s.is_infinity()) throw InternalError("[k1]Qa + [k2]Qb + Qa = O for k1 = " + std::to_string(k1));
  }

  const auto pairs = select_pairs(c, in, k / 2, q_a);
  std::vector<std::uint32_t> selected;
  std::vector<Point> points;
  for (const auto& [p, np] : pairs) {
    selected.push_back(p.x.enc());
    for (const Point& t : {q_a, q_b}) {
      points.push_back(c.add(t, p));
      points.push_back(c.add(t, np));
    }
  }
  return finish(in, c, gs, q_a, q_b, std::move(selected), std::move(points));
}

IsoDualCertificate construct(const ConstructionInput& in) {
  if (in.construction == 1) return construct1(in);
  if (in.construction == 2) return construct2(in);
  throw InvalidArgument("construction must be 1 or 2, got " + std::to_string(in.construction));
}

// --------------------------------------------------------------- transforms

ScaledCode selfdual_transform(const IsoDualCertificate& cert) {
  const auto& F = cert.code.field();
  if (!F.is_binary())
    throw PreconditionError("selfdual transform needs characteristic 2: square roots of v may not exist");
  std::vector<std::uint32_t> u;
  u.reserve(cert.v.size());
  for (std::size_t i = 0; i < cert.v.size(); ++i) u.push_back(*F.sqrt(cert.v[i]));
  code::ScalingVector uv(F, std::move(u));
  auto cu = code::scale(cert.code, uv);
  const std::size_t hull = code::hull_dim(cu);
  if (hull != cert.k()) throw InternalError("selfdual transform: hull " + std::to_string(hull) + " != k");
  return {std::move(uv), std::move(cu), hull};
}

std::optional<ScaledCode> lcd_transform(const IsoDualCertificate& cert, std::uint64_t budget) {
  const auto& C = cert.code;
  const auto& F = C.field();
  const std::size_t n = C.n();
  if (cert.hull == 0) {
    auto ones = code::ScalingVector::ones(F, n);
    return ScaledCode{ones, C, 0};
  }
  std::vector<std::uint32_t> values;
  for (std::uint32_t a = 1; a < F.q(); ++a)
    if (F.mul(a, a) != 1) values.push_back(a);
  if (values.empty()) return std::nullopt;

  std::uint64_t spent = 0;
  std::vector<std::uint32_t> u(n, 1);
  for (std::size_t l = cert.hull; l <= n; ++l) {
    std::vector<std::size_t> pos(l);
    for (std::size_t i = 0; i < l; ++i) pos[i] = i;
    while (true) {
      std::vector<std::size_t> digit(l, 0);
      while (true) {
        if (spent++ >= budget) return std::nullopt;
        std::fill(u.begin(), u.end(), 1);
        for (std::size_t i = 0; i < l; ++i) u[pos[i]] = values[digit[i]];
        code::ScalingVector uv(F, u);
        if (code::hull_dim_scaled(C, uv) == 0) {
          auto cu = code::scale(C, uv);
          const std::size_t h = code::hull_dim(cu);
          if (h != 0) throw InternalError("lcd transform: hull routes disagree");
          return ScaledCode{std::move(uv), std::move(cu), 0};
        }
        std::size_t i = l;
        while (i > 0 && ++digit[i - 1] == values.size()) digit[--i] = 0;
        if (i == 0) break;
      }
      // next l-subset of positions in lexicographic order
      std::size_t i = l;
      while (i > 0 && pos[i - 1] == n - l + (i - 1)) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < l; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ sampler

ScalingSampler::ScalingSampler(const gf::Field& f, std::size_t n, std::uint64_t seed) : f_(&f), n_(n), rng_(seed) {}

code::ScalingVector ScalingSampler::next() {
  // rejection sampling onto 1..q-1
  const std::uint64_t range = f_->q() - 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::vector<std::uint32_t> e(n_);
  for (auto& x : e) {
    std::uint64_t r;
    do r = rng_();
    while (r >= limit);
    x = static_cast<std::uint32_t>(1 + r % range);
  }
  return code::ScalingVector(*f_, std::move(e));
}

std::optional<ScaledCode> find_scaling_with_hull(const code::LinearCode& c, std::size_t target, std::uint64_t seed,
                                                 std::uint64_t max_samples) {
  ScalingSampler s(c.field(), c.n(), seed);
  for (std::uint64_t i = 0; i < max_samples; ++i) {
    auto u = s.next();
    if (code::hull_dim_scaled(c, u) != target) continue;
    auto cu = code::scale(c, u);
    const std::size_t h = code::hull_dim(cu);
    if (h != target) throw InternalError("hull sampler: hull routes disagree");
    return ScaledCode{std::move(u), std::move(cu), h};
  }
  return std::nullopt;
}

std::map<std::size_t, std::uint64_t> hull_histogram(const code::LinearCode& c, std::uint64_t samples,
                                                    std::uint64_t seed) {
  ScalingSampler s(c.field(), c.n(), seed);
  std::map<std::size_t, std::uint64_t> hist;
  for (std::uint64_t i = 0; i < samples; ++i) ++hist[code::hull_dim_scaled(c, s.next())];
  return hist;
}

}  // namespace isodual::iso
