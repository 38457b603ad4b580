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

#include "eaqecc.hpp"

#include <algorithm>

#include "error.hpp"

namespace isodual::qec {

std::string EaqeccParams::label() const {
  return "[[" + std::to_string(n) + "," + std::to_string(k_q) + "," + std::to_string(d) + ";" + std::to_string(c) +
         "]]_" + std::to_string(q);
}

bool is_mds_eaqecc(const EaqeccParams& p) {
  if (2 * p.d > p.n + 2) throw PreconditionError("Singleton-type bound precondition violated: d > (n+2)/2");
  return 2 * p.d == p.n - p.k_q + p.c + 2;
}

EaqeccParams derive(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t hull_dim, std::uint64_t q) {
  if (n == 0 || k > n) throw InvalidArgument("derive: need 0 <= k <= n and n >= 1");
  if (d < 1 || d > n) throw InvalidArgument("derive: need 1 <= d <= n");
  if (d > n - k + 1) throw InvalidArgument("derive: d exceeds the Singleton bound n-k+1");
  if (hull_dim > std::min(k, n - k)) throw InvalidArgument("derive: hull dimension exceeds min(k, n-k)");
  EaqeccParams p;
  p.n = n;
  p.k_q = k - hull_dim;
  p.d = d;
  p.c = n - k - hull_dim;
  p.q = q;
  p.maximal_entanglement = p.c == n - p.k_q;
  p.mds = is_mds_eaqecc(p);
  return p;
}

std::string csv_header() { return "q,n,k_q,d,c,mds,maximal_entanglement,label"; }

std::string csv_row(const EaqeccParams& p) {
  return std::to_string(p.q) + "," + std::to_string(p.n) + "," + std::to_string(p.k_q) + "," + std::to_string(p.d) +
         "," + std::to_string(p.c) + "," + (p.mds ? "true" : "false") + "," +
         (p.maximal_entanglement ? "true" : "false") + "," + p.label();
}

}  // namespace isodual::qec
