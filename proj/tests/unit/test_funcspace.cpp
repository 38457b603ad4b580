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

#include "curve.hpp"
#include "error.hpp"
#include "funcspace.hpp"

using namespace isodual;
using ec::Curve;
using ec::Point;
using gf::Poly;

TEST_SUITE("funcspace") {
  TEST_CASE("divisors") {
    auto F = gf::Field::parse("p=2,m=4,mod=1,1,0,0,1");
    auto E = Curve::parse(F, "1,8,0,0,9");
    const Point O = Point::at_infinity();
    const Point q1 = E.point(0, 11);
    fs::Divisor d;
    d.add(O, 3).add(q1, 1);
    CHECK(d.degree() == 4);
    CHECK(d.coefficient(q1) == 1);
    CHECK(d.is_effective());
    d.add(q1, -1);
    CHECK(d.terms().size() == 1);
    CHECK(fs::divisor_sum(E, fs::Divisor().add(q1, 2)).is_infinity());
    CHECK(fs::is_principal(E, fs::Divisor().add(q1, 2).add(O, -2)));
    CHECK(!fs::is_principal(E, fs::Divisor().add(q1, 1).add(O, -1)));
  }

  TEST_CASE("valuations of x and y") {
    auto F = gf::Field::parse("p=5,m=2,mod=2,4,1");
    auto E = Curve::parse(F, "0,0,0,0,1");
    const Point O = Point::at_infinity();
    fs::RationalFunction x(Poly::monomial(*F, 1), Poly(*F), Poly::constant(F->one()));
    fs::RationalFunction y(Poly(*F), Poly::constant(F->one()), Poly::constant(F->one()));
    CHECK(fs::valuation(E, x, O) == -2);
    CHECK(fs::valuation(E, y, O) == -3);
    const auto pts = ec::enumerate_points(E);
    const auto dx = fs::divisor_on(E, x, pts);
    CHECK(dx.degree() == 0);
    CHECK(fs::is_principal(E, dx));
    // y vanishes simply at each point of order 2.
    const auto dy = fs::divisor_on(E, y, pts);
    CHECK(dy.coefficient(O) == -3);
    for (const auto& P : ec::torsion_points(E, 2))
      if (P.is_affine()) CHECK(dy.coefficient(P) == 1);
  }

  TEST_CASE("Riemann-Roch bases") {
    for (auto [spec, coeffs, qx] : {std::tuple{"p=2,m=4,mod=1,1,0,0,1", "1,8,0,0,9", 0u},
                                    std::tuple{"p=5,m=2,mod=2,4,1", "0,0,0,0,1", 4u}}) {
      auto F = gf::Field::parse(spec);
      auto E = Curve::parse(F, coeffs);
      Point Q;
      for (const auto& P : ec::torsion_points(E, 2))
        if (P.is_affine() && P.x.enc() == qx) Q = P;
      REQUIRE(Q.is_affine());
      const auto pts = ec::enumerate_points(E);
      for (int k : {2, 4, 6}) {
        const auto B = fs::rr_basis(E, k, Q);
        REQUIRE(B.functions.size() == static_cast<std::size_t>(k));
        CHECK(B.divisor.degree() == k);
        for (int i = 0; i < k; ++i) {
          CHECK(B.pole_orders_at_O[i] == (i == 0 ? 0 : i));
          CHECK(fs::in_riemann_roch_space(E, B.functions[i], B.divisor, pts));
          CHECK(-fs::valuation(E, B.functions[i], Point::at_infinity()) == B.pole_orders_at_O[i]);
        }
      }
      CHECK_THROWS_AS(fs::rr_basis(E, 3, Q), InvalidArgument);
    }
  }

  TEST_CASE("interpolation polynomial") {
    auto F = gf::Field::parse("p=7,m=1,mod=4,1");
    std::vector<gf::Element> xs{F->element(1), F->element(2), F->element(5)};
    const auto ip = fs::interpolation_poly(xs);
    CHECK(ip.h.degree() == 3);
    for (const auto& x : xs) CHECK(ip.h.eval(x).is_zero());
    CHECK(ip.dh == ip.h.derivative());
    xs.push_back(F->element(2));
    CHECK_THROWS_AS(fs::interpolation_poly(xs), InvalidArgument);
  }
}
