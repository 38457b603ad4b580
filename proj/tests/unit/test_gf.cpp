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

#include "error.hpp"
#include "gf.hpp"
#include "poly.hpp"

using namespace isodual;
using namespace isodual::gf;

TEST_SUITE("gf") {
  TEST_CASE("spec parses and prints") {
    const auto s = FieldSpec::parse("p=2,m=4,mod=1,1,0,0,1");
    CHECK(s.p == 2);
    CHECK(s.m == 4);
    CHECK(s.order() == 16);
    CHECK(s.to_string() == "p=2,m=4,mod=1,1,0,0,1");
    CHECK(FieldSpec::parse(s.to_string()) == s);
  }

  TEST_CASE("bad specs rejected") {
    CHECK_THROWS_AS(Field::parse("p=4,m=1,mod=1,1"), InvalidArgument);
    CHECK_THROWS_AS(Field::parse("p=2,m=2,mod=1,0,1"), InvalidArgument);  // x^2 + 1 = (x + 1)^2
    CHECK_THROWS_AS(Field::parse("p=2,m=2,mod=1,1,0"), InvalidArgument);
    CHECK_THROWS_AS(Field::parse("p=2,m=3,mod=1,1,1"), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec::parse("p=2;m=4"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("m=4,mod=1,1,0,0,1"), ParseError);
  }

  TEST_CASE("GF(16) with theta^4 = theta + 1") {
    auto F = Field::parse("p=2,m=4,mod=1,1,0,0,1");
    const auto t = F->theta();
    CHECK(t.enc() == 2);
    CHECK(t.pow(4).enc() == 3);
    CHECK(t.pow(15).is_one());
    CHECK((t * t * t).enc() == 8);
    CHECK((t.pow(3) + F->one()).enc() == 9);
    for (std::uint32_t a = 1; a < 16; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK_THROWS_AS(F->zero().inv(), InvalidArgument);
  }

  TEST_CASE("char 2 square roots are unique") {
    auto F = Field::parse("p=2,m=4,mod=1,1,0,0,1");
    for (std::uint32_t a = 0; a < 16; ++a) {
      auto r = F->sqrt(a);
      REQUIRE(r);
      CHECK(F->mul(*r, *r) == a);
    }
    CHECK(*F->sqrt(3) == 4);  // (theta^2)^2 = theta + 1
  }

  TEST_CASE("odd char square roots take the smaller root") {
    auto F = Field::parse("p=5,m=2,mod=2,4,1");
    int squares = 0;
    for (std::uint32_t a = 1; a < 25; ++a) {
      auto r = F->sqrt(a);
      CHECK(r.has_value() == F->is_square(a));
      if (!r) continue;
      ++squares;
      CHECK(F->mul(*r, *r) == a);
      CHECK(*r <= F->neg(*r));
    }
    CHECK(squares == 12);
  }

  TEST_CASE("Tonelli-Shanks on GF(289) and GF(17)") {
    for (const char* spec : {"p=17,m=2,mod=3,16,1", "p=17,m=1,mod=14,1"}) {
      auto F = Field::parse(spec);
      for (std::uint32_t a = 0; a < F->q(); ++a) {
        const auto sq = F->mul(a, a);
        auto r = F->sqrt(sq);
        REQUIRE(r);
        CHECK((*r == a || *r == F->neg(a)));
      }
    }
  }

  TEST_CASE("Artin-Schreier roots") {
    auto F = Field::parse("p=2,m=4,mod=1,1,0,0,1");
    int solvable = 0;
    for (std::uint32_t w = 0; w < 16; ++w) {
      auto z = F->artin_schreier_root(w);
      if (!z) continue;
      ++solvable;
      CHECK(F->add(F->mul(*z, *z), *z) == w);
    }
    CHECK(solvable == 8);
  }

  TEST_CASE("integer images and digits") {
    auto F = Field::parse("p=7,m=2,mod=3,6,1");
    CHECK(F->int_enc(-1) == 6);
    CHECK(F->int_enc(15) == 1);
    CHECK(F->digits(45) == std::vector<std::uint32_t>{3, 6});
    CHECK(F->from_digits({3, 6}) == 45);
  }

  TEST_CASE("prime powers and integer square roots") {
    CHECK(prime_power(289) == std::optional<std::pair<std::uint64_t, std::uint32_t>>({17, 2}));
    CHECK(!prime_power(12));
    CHECK(!prime_power(1));
    for (std::uint64_t n = 0; n < 5000; ++n) {
      const auto r = isqrt(n);
      CHECK(r * r <= n);
      CHECK((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(4 * 256) == 32);
    CHECK(isqrt(4 * 32) == 11);
  }

  TEST_CASE("elements of different fields do not mix") {
    auto F = Field::parse("p=2,m=4,mod=1,1,0,0,1");
    auto G = Field::parse("p=2,m=4,mod=1,0,0,1,1");
    CHECK_THROWS_AS(F->one() + G->one(), InvalidArgument);
  }
}

TEST_SUITE("poly") {
  TEST_CASE("arithmetic, division and gcd") {
    auto F = Field::parse("p=5,m=1,mod=3,1");
    Poly a(*F, {1, 0, 1});       // x^2 + 1 = (x - 2)(x - 3)
    Poly b(*F, {4, 1});          // x - 1
    const auto [q, r] = (a * b).divmod(b);
    CHECK(q == a);
    CHECK(r.is_zero());
    CHECK(gcd(a, Poly(*F, {1, 1})).degree() == 0);
    CHECK(gcd(a, Poly(*F, {3, 1})) == Poly(*F, {3, 1}));
    CHECK(a.eval(2) == 0);
    CHECK(a.derivative() == Poly(*F, {0, 2}));
    CHECK(a.root_multiplicity(2) == 1);
    CHECK((a * a).root_multiplicity(3) == 2);
  }
}
