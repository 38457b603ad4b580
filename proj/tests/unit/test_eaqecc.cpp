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

#include "eaqecc.hpp"
#include "error.hpp"

using namespace isodual;

TEST_SUITE("eaqecc") {
  TEST_CASE("parameters from an LCD MDS code") {
    const auto p = qec::derive(8, 4, 5, 0, 16);
    CHECK(p.label() == "[[8,4,5;4]]_16");
    CHECK(p.k_q == 4);
    CHECK(p.c == 4);
    CHECK(p.mds);
    CHECK(p.maximal_entanglement);
    CHECK(qec::is_mds_eaqecc(p));
  }

  TEST_CASE("hull reduces entanglement") {
    const auto p = qec::derive(20, 10, 11, 2, 32);
    CHECK(p.label() == "[[20,8,11;8]]_32");
    CHECK(p.mds);
    CHECK(!p.maximal_entanglement);
    const auto s = qec::derive(8, 4, 5, 4, 16);
    CHECK(s.label() == "[[8,0,5;0]]_16");
  }

  TEST_CASE("csv") {
    CHECK(qec::csv_header() == "q,n,k_q,d,c,mds,maximal_entanglement,label");
    CHECK(qec::csv_row(qec::derive(8, 4, 5, 0, 16)) == "16,8,4,5,4,true,true,[[8,4,5;4]]_16");
  }

  TEST_CASE("range checks") {
    CHECK_THROWS_AS(qec::derive(8, 4, 6, 0, 16), InvalidArgument);
    CHECK_THROWS_AS(qec::derive(8, 4, 5, 5, 16), InvalidArgument);
    CHECK_THROWS_AS(qec::derive(8, 2, 7, 0, 16), PreconditionError);
    CHECK(!qec::derive(8, 4, 4, 0, 16).mds);
    qec::EaqeccParams bad{8, 4, 6, 4, 16, false, false};
    CHECK_THROWS_AS(qec::is_mds_eaqecc(bad), PreconditionError);
  }
}
