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

#include <doctest.h>

#include <random>
#include <set>

#include "code.hpp"
#include "construction.hpp"
#include "curve.hpp"
#include "gf.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace isodual;

namespace {

const std::vector<std::uint64_t> kSmallQ{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

la::Matrix random_matrix(const gf::Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  la::Matrix m(F, r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, F.q() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("property") {
  TEST_CASE("field axioms, exhaustive for q <= 32") {
    for (auto q : kSmallQ) {
      CAPTURE(q);
      const auto F = gf::Field::make(search::default_field_spec(q));
      const auto& spec = F->spec();
      bool ok = true;
      for (std::uint32_t a = 0; a < q; ++a) {
        ok &= F->add(a, 0) == a && F->mul(a, 1) == a && F->add(a, F->neg(a)) == 0;
        if (a) ok &= F->mul(a, F->inv(a)) == 1;
        for (std::uint32_t b = 0; b < q; ++b) {
          ok &= F->mul(a, b) == oracle::mul(spec, a, b);
          ok &= F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a);
          for (std::uint32_t c = 0; c < q; ++c) {
            ok &= F->add(F->add(a, b), c) == F->add(a, F->add(b, c));
            ok &= F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c));
            ok &= F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c));
          }
        }
      }
      CHECK(ok);
      // The stored generator has order q - 1.
      std::set<std::uint32_t> powers;
      for (std::uint32_t e = 0; e < q - 1; ++e) powers.insert(F->generator().pow(e).enc());
      CHECK(powers.size() == q - 1);
    }
  }

  TEST_CASE("group axioms, exhaustive on sample curves for q <= 32") {
    for (auto q : kSmallQ) {
      CAPTURE(q);
      const auto F = gf::Field::make(search::default_field_spec(q));
      const auto curves = search::enumerate_curves(F, nullptr, search::Family::Canonical, false);
      REQUIRE(!curves.empty());
      // First, middle and last curve of the canonical enumeration.
      for (std::size_t idx : {std::size_t{0}, curves.size() / 2, curves.size() - 1}) {
        const auto& E = curves[idx].curve;
        CAPTURE(E.to_string());
        const auto pts = ec::enumerate_points(E);
        CHECK(pts.size() == curves[idx].order);
        bool ok = true;
        for (const auto& P : pts) {
          ok &= E.contains(E.neg(P)) && E.add(P, E.neg(P)).is_infinity();
          ok &= E.add(P, ec::Point::at_infinity()) == P;
          for (const auto& Q : pts) {
            const auto PQ = E.add(P, Q);
            ok &= E.contains(PQ) && PQ == E.add(Q, P);
            for (const auto& R : pts) ok &= E.add(PQ, R) == E.add(P, E.add(Q, R));
          }
        }
        CHECK(ok);
      }
    }
  }

  TEST_CASE("Hasse bound and point counts, every curve over small q") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      CAPTURE(q);
      const auto F = gf::Field::make(search::default_field_spec(q));
      for (const auto& r : search::enumerate_curves(F, nullptr, search::Family::General, false)) {
        CHECK(r.order == oracle::count_points(r.curve));
        const std::int64_t t = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(r.order);
        CHECK(static_cast<std::uint64_t>(t * t) <= 4 * q);
      }
    }
  }

  TEST_CASE("feasible orders equal realized orders") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      CAPTURE(q);
      const auto F = gf::Field::make(search::default_field_spec(q));
      std::set<std::uint64_t> realized, feasible;
      for (const auto& r : search::enumerate_curves(F, nullptr, search::Family::General, false))
        realized.insert(r.order);
      for (const auto& o : ec::feasible_orders(q)) feasible.insert(o.order);
      CHECK(realized == feasible);
    }
  }

  TEST_CASE("group structure is consistent") {
    for (std::uint64_t q : {16, 25, 27, 49}) {
      const auto F = gf::Field::make(search::default_field_spec(q));
      const auto curves = search::enumerate_curves(F, nullptr, search::Family::Canonical, true);
      for (std::size_t i = 0; i < curves.size(); i += std::max<std::size_t>(1, curves.size() / 25)) {
        const auto& gs = *curves[i].structure;
        const auto& E = curves[i].curve;
        CHECK(gs.d2 % gs.d1 == 0);
        CHECK(gs.order() == curves[i].order);
        CHECK(ec::point_order(E, gs.basis2) == gs.d2);
        CHECK(ec::point_order(E, gs.basis1) == gs.d1);
        CHECK(ec::torsion_points(E, gs.d2).size() == gs.order());
      }
    }
  }

  TEST_CASE("DP subset counts equal enumeration for n <= 16") {
    std::mt19937_64 rng(20261014);
    const std::vector<std::vector<std::uint64_t>> groups{{2}, {6}, {2, 2}, {12}, {2, 6}, {3, 3}, {22}, {6, 6}, {2, 30}};
    for (const auto& mods : groups) {
      code::AbelianGroup g(mods);
      for (std::size_t n = 1; n <= std::min<std::uint64_t>(16, g.order()); ++n) {
        // A random n-set of distinct elements.
        std::vector<std::uint64_t> all(g.order());
        for (std::uint64_t i = 0; i < g.order(); ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::uint64_t> e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
        for (std::size_t k = 0; k <= n; ++k) {
          const std::uint64_t t = rng() % g.order();
          const auto dp = code::count_subset_sums(g, e, k, t);
          CHECK(!dp.saturated);
          CHECK(dp.count == oracle::subset_count(g, e, k, t));
        }
      }
    }
  }

  TEST_CASE("DP agrees with enumeration on curve points") {
    auto F = gf::Field::parse("p=5,m=2,mod=2,4,1");
    auto E = ec::Curve::parse(F, "0,0,0,0,1");
    const auto gs = ec::group_structure(E);
    const auto g = code::AbelianGroup::of(gs);
    std::vector<std::uint64_t> ids;
    for (std::size_t i = 0; i < 16; ++i) ids.push_back(*gs.element_id(gs.points[i + 1]));
    for (std::size_t k = 0; k <= 16; ++k)
      CHECK(code::count_subset_sums(g, ids, k, ids[0]).count == oracle::subset_count(g, ids, k, ids[0]));
  }

  TEST_CASE("weight distribution and hull: fast paths equal enumeration") {
    std::mt19937_64 rng(7);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      const auto F = gf::Field::make(search::default_field_spec(q));
      for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 3 + rng() % 6, k = 1 + rng() % std::min<std::size_t>(n, q <= 4 ? 6 : 4);
        code::LinearCode C(F, random_matrix(*F, k, n, rng));
        if (C.k() == 0) continue;
        CHECK(code::weight_distribution(C) == oracle::weights(C));
        CHECK(code::hull_dim_gram(C) == code::hull_dim_intersection(C));
        CHECK(code::hull_dim(C) == oracle::hull_by_enumeration(C));
        const auto D = code::dual(C);
        CHECK(D.k() + C.k() == n);
        CHECK(oracle::orthogonal(C.generator(), D.generator()));
      }
    }
  }

  TEST_CASE("scaling preserves the weight distribution") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {4, 5, 7, 9, 16}) {
      const auto F = gf::Field::make(search::default_field_spec(q));
      for (int trial = 0; trial < 8; ++trial) {
        code::LinearCode C(F, random_matrix(*F, 3, 7, rng));
        iso::ScalingSampler s(*F, 7, rng());
        const auto u = s.next();
        const auto Cu = code::scale(C, u);
        CHECK(code::weight_distribution(Cu) == code::weight_distribution(C));
        CHECK(code::hull_dim(Cu) == code::hull_dim_scaled(C, u));
      }
    }
  }

  TEST_CASE("Singleton bound") {
    std::mt19937_64 rng(13);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
      const auto F = gf::Field::make(search::default_field_spec(q));
      for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 8, k = 1 + rng() % std::min<std::size_t>(n, 5);
        code::LinearCode C(F, random_matrix(*F, k, n, rng));
        if (C.k() == 0) continue;
        CHECK(code::min_distance(C) + C.k() <= C.n() + 1);
      }
    }
  }

  TEST_CASE("every certificate over q = 16 and q = 25 respects n <= #E/2") {
    for (std::uint64_t q : {16, 25}) {
      for (const auto& r : search::max_length_probe(q)) {
        CHECK(r.within_half_order);
        if (r.construction) CHECK(2 * r.max_n <= r.order);
      }
    }
  }

  TEST_CASE("lemma search is stable") {
    for (std::uint64_t order : {2, 4, 6, 8, 10, 12})
      for (const auto& g : search::abelian_groups_of_order(order)) {
        std::uint64_t n0 = order / 2 + 1;
        n0 += n0 % 2;
        for (std::uint64_t n = n0; n <= order; n += 2) {
          const auto a = search::lemma_max_search(g, n);
          const auto b = search::lemma_max_search(g, n);
          CHECK(a.subsets == b.subsets);
          CHECK(a.admissible == b.admissible);
          REQUIRE(a.counterexamples.size() == b.counterexamples.size());
          for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
            CHECK(a.counterexamples[i].subset == b.counterexamples[i].subset);
            CHECK(a.counterexamples[i].g == b.counterexamples[i].g);
          }
        }
      }
  }
}
