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

/**
 * @file eaqecc.hpp
 * @brief Entanglement-assisted quantum code parameters [[n, k - l, d; n - k - l]]_q
 *        obtained from a classical [n, k, d]_q code with hull dimension l.
 */

#pragma once

#include <cstdint>
#include <string>

namespace isodual::qec {

struct EaqeccParams {
  std::uint64_t n = 0;
  std::uint64_t k_q = 0;
  std::uint64_t d = 0;
  std::uint64_t c = 0;
  std::uint64_t q = 0;
  bool mds = false;
  bool maximal_entanglement = false;

  /// "[[n,k,d;c]]_q"
  std::string label() const;
  bool operator==(const EaqeccParams&) const = default;
};

/// Throws InvalidArgument unless 1 <= d <= n-k+1 and hull <= min(k, n-k),
/// and PreconditionError when d > (n+2)/2.
EaqeccParams derive(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t hull_dim, std::uint64_t q);

/// 2d = n - k_q + c + 2. Requires 2d <= n + 2.
bool is_mds_eaqecc(const EaqeccParams& p);

/// Fixed CSV layout.
std::string csv_header();
std::string csv_row(const EaqeccParams& p);

}  // namespace isodual::qec
