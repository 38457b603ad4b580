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

#include "oracles.hpp"

#include <functional>

namespace isodual::oracle {

std::uint32_t mul(const gf::FieldSpec& spec, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = spec.p, m = spec.m;
  std::vector<std::uint32_t> da(m), db(m), prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i, a /= p, b /= p) {
    da[i] = a % p;
    db[i] = b % p;
  }
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::uint32_t d = 2 * m - 1; d >= m; --d) {
    const std::uint32_t c = prod[d];
    if (!c) continue;
    for (std::uint32_t i = 0; i <= m; ++i)
      prod[d - m + i] = (prod[d - m + i] + (p - c) * spec.modulus[i] % p) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = m; i-- > 0;) out = out * p + prod[i];
  return out;
}

std::uint64_t count_points(const ec::Curve& c) {
  const auto& F = c.field();
  const auto& a = c.coefficients();
  std::uint64_t n = 1;
  for (std::uint32_t x = 0; x < F.q(); ++x)
    for (std::uint32_t y = 0; y < F.q(); ++y) {
      const auto X = F.element(x), Y = F.element(y);
      const auto lhs = Y * Y + a[0] * X * Y + a[2] * Y;
      const auto rhs = X * X * X + a[1] * X * X + a[3] * X + a[4];
      if (lhs == rhs) ++n;
    }
  return n;
}

std::uint64_t subset_count(const code::AbelianGroup& g, std::span<const std::uint64_t> elements, std::size_t k,
                           std::uint64_t target) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::size_t left,
                                                                          std::uint64_t sum) {
    if (left == 0) {
      count += sum == target;
      return;
    }
    if (elements.size() - i < left) return;
    rec(i + 1, left - 1, g.add(sum, elements[i]));
    rec(i + 1, left, sum);
  };
  rec(0, k, 0);
  return count;
}

namespace {

template <class Fn>
void for_each_codeword(const code::LinearCode& c, Fn&& fn) {
  const auto& F = c.field();
  const auto& G = c.generator();
  std::vector<std::uint32_t> msg(c.k(), 0), word(c.n());
  while (true) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t r = 0; r < c.k(); ++r)
      if (msg[r])
        for (std::size_t j = 0; j < c.n(); ++j) word[j] = F.add(word[j], F.mul(msg[r], G.at(r, j)));
    fn(word);
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == F.q()) msg[i++] = 0;
    if (i == msg.size()) break;
  }
}

}  // namespace

std::vector<std::uint64_t> weights(const code::LinearCode& c) {
  std::vector<std::uint64_t> w(c.n() + 1, 0);
  for_each_codeword(c, [&](const std::vector<std::uint32_t>& word) {
    std::size_t wt = 0;
    for (auto e : word) wt += e != 0;
    ++w[wt];
  });
  return w;
}

bool orthogonal(const la::Matrix& a, const la::Matrix& b) {
  const auto& F = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      std::uint32_t s = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) s = F.add(s, F.mul(a.at(i, t), b.at(j, t)));
      if (s) return false;
    }
  return true;
}

std::size_t hull_by_enumeration(const code::LinearCode& c) {
  const auto& F = c.field();
  const auto& G = c.generator();
  std::uint64_t in_hull = 0;
  for_each_codeword(c, [&](const std::vector<std::uint32_t>& word) {
    for (std::size_t r = 0; r < G.rows(); ++r) {
      std::uint32_t s = 0;
      for (std::size_t t = 0; t < word.size(); ++t) s = F.add(s, F.mul(word[t], G.at(r, t)));
      if (s) return;
    }
    ++in_hull;
  });
  std::size_t dim = 0;
  for (std::uint64_t n = 1; n < in_hull; n *= F.q()) ++dim;
  return dim;
}

}  // namespace isodual::oracle
