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

#include "code.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "error.hpp"

namespace isodual::code {

// ------------------------------------------------------------ ScalingVector

ScalingVector::ScalingVector(const gf::Field& f, std::vector<std::uint32_t> entries) : f_(&f), e_(std::move(entries)) {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) throw InvalidArgument("scaling vector entry " + std::to_string(i) + " is zero");
    if (e_[i] >= f.q()) throw InvalidArgument("scaling vector entry " + std::to_string(i) + " out of range");
  }
}

ScalingVector ScalingVector::ones(const gf::Field& f, std::size_t n) {
  return ScalingVector(f, std::vector<std::uint32_t>(n, 1));
}

ScalingVector ScalingVector::inverse() const {
  std::vector<std::uint32_t> r;
  r.reserve(e_.size());
  for (auto v : e_) r.push_back(f_->inv(v));
  return ScalingVector(*f_, std::move(r));
}

ScalingVector ScalingVector::squared() const {
  std::vector<std::uint32_t> r;
  r.reserve(e_.size());
  for (auto v : e_) r.push_back(f_->mul(v, v));
  return ScalingVector(*f_, std::move(r));
}

// --------------------------------------------------------------- LinearCode

namespace {

la::Matrix reduced(la::Matrix m) {
  const auto piv = la::rref(m);
  return m.top_rows(piv.size());
}

}  // namespace

LinearCode::LinearCode(gf::FieldPtr field, la::Matrix gen) : field_(std::move(field)), gen_(reduced(std::move(gen))) {
  if (!field_ || !field_->same_as(gen_.field())) throw InvalidArgument("LinearCode: generator over another field");
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(c.field_ptr(), la::kernel(c.generator()));
}

std::size_t hull_dim_gram(const LinearCode& c) {
  const auto& g = c.generator();
  if (c.k() == 0) return 0;
  return c.k() - la::rank(la::gram(g, std::vector<std::uint32_t>(c.n(), 1), g));
}

std::size_t hull_dim_intersection(const LinearCode& c) {
  if (c.k() == 0 || c.k() == c.n()) return 0;
  const la::Matrix h = dual(c).generator();
  return c.n() - la::rank(c.generator().stacked(h));
}

std::size_t hull_dim(const LinearCode& c) {
  const std::size_t a = hull_dim_gram(c);
  const std::size_t b = hull_dim_intersection(c);
  if (a != b)
    throw InternalError("hull_dim: Gram rank gives " + std::to_string(a) + ", intersection gives " + std::to_string(b));
  return a;
}

std::size_t hull_dim_scaled(const LinearCode& c, const ScalingVector& u) {
  if (u.size() != c.n()) throw InvalidArgument("hull_dim_scaled: length mismatch");
  if (c.k() == 0) return 0;
  const auto w = u.squared();
  const auto& g = c.generator();
  return c.k() - la::rank(la::gram(g, w.entries(), g));
}

LinearCode scale(const LinearCode& c, const ScalingVector& v) {
  if (v.size() != c.n())
    throw InvalidArgument("scale: scaling vector has length " + std::to_string(v.size()) + ", code length " +
                          std::to_string(c.n()));
  if (!v.field().same_as(c.field())) throw InvalidArgument("scale: scaling vector over another field");
  la::Matrix g = c.generator();
  const auto& F = c.field();
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t j = 0; j < g.cols(); ++j) g.at(r, j) = F.mul(g.at(r, j), v[j]);
  return LinearCode(c.field_ptr(), std::move(g));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw InvalidArgument("same_code: lengths differ");
  return a.generator() == b.generator();
}

namespace {

void check_budget(const LinearCode& c) {
  long double work = 1;
  for (std::size_t i = 0; i < c.k(); ++i) work *= c.field().q();
  if (work > static_cast<long double>(kBruteForceBudget))
    throw BudgetExceeded("q^k = " + std::to_string(c.field().q()) + "^" + std::to_string(c.k()) +
                         " exceeds the brute-force budget 2^24; certify MDS with mds_subset_check instead");
}

// Weights of codewords whose first nonzero message coordinate is 1.
void projective_weights(const LinearCode& c, std::vector<std::uint64_t>& hist) {
  const auto& F = c.field();
  const auto& g = c.generator();
  const std::size_t n = c.n(), k = c.k();
  std::vector<std::vector<std::uint32_t>> partial(k + 1, std::vector<std::uint32_t>(n, 0));
  auto weight = [&](const std::vector<std::uint32_t>& w) {
    std::size_t cnt = 0;
    for (auto x : w) cnt += x != 0;
    return cnt;
  };
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::copy(g.row(lead), g.row(lead) + n, partial[lead + 1].begin());
    // odometer over the coefficients of rows lead+1..k-1
    std::vector<std::uint32_t> digit(k, 0);
    std::size_t depth = lead + 1;  // partial[depth] is current
    while (true) {
      for (; depth < k; ++depth) {
        const std::uint32_t m = digit[depth];
        const std::uint32_t* row = g.row(depth);
        for (std::size_t j = 0; j < n; ++j) partial[depth + 1][j] = F.add(partial[depth][j], F.mul(m, row[j]));
      }
      ++hist[weight(partial[k])];
      std::size_t i = k;
      while (i > lead + 1 && ++digit[i - 1] == F.q()) digit[--i] = 0;
      if (i == lead + 1) break;
      depth = i - 1;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
  check_budget(c);
  std::vector<std::uint64_t> hist(c.n() + 1, 0);
  projective_weights(c, hist);
  for (auto& h : hist) h *= c.field().q() - 1;
  hist[0] = 1;
  return hist;
}

std::size_t min_distance(const LinearCode& c) {
  if (c.k() == 0) throw InvalidArgument("min_distance: zero code");
  const auto hist = weight_distribution(c);
  for (std::size_t w = 1; w < hist.size(); ++w)
    if (hist[w]) return w;
  throw InternalError("min_distance: no nonzero codeword");
}

// ------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) moduli_.push_back(1);
  for (auto m : moduli_) {
    if (m == 0) throw InvalidArgument("AbelianGroup: zero modulus");
    order_ *= m;
  }
}

std::vector<std::uint64_t> AbelianGroup::coords(std::uint64_t id) const {
  std::vector<std::uint64_t> c(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    c[i] = id % moduli_[i];
    id /= moduli_[i];
  }
  return c;
}

std::uint64_t AbelianGroup::id(const std::vector<std::uint64_t>& c) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) r = r * moduli_[i] + c[i] % moduli_[i];
  return r;
}

std::uint64_t AbelianGroup::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r = 0, place = 1;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    const std::uint64_t m = moduli_[i];
    r += ((a % m + b % m) % m) * place;
    a /= m;
    b /= m;
    place *= m;
  }
  return r;
}

std::uint64_t AbelianGroup::neg(std::uint64_t a) const {
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (moduli_[i] - c[i]) % moduli_[i];
  return id(c);
}

std::uint64_t AbelianGroup::times(std::int64_t n, std::uint64_t a) const {
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto m = static_cast<std::int64_t>(moduli_[i]);
    std::int64_t v = static_cast<std::int64_t>((static_cast<__int128>(n % m) * static_cast<std::int64_t>(c[i])) % m);
    if (v < 0) v += m;
    c[i] = static_cast<std::uint64_t>(v);
  }
  return id(c);
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) os << (i ? "x" : "") << "Z/" << moduli_[i];
  return os.str();
}

SubsetCount count_subset_sums(const AbelianGroup& g, std::span<const std::uint64_t> elements, std::size_t k,
                              std::uint64_t target) {
  const std::uint64_t order = g.order();
  for (auto e : elements)
    if (e >= order) throw InvalidArgument("count_subset_sums: element id out of range");
  if (target >= order) throw InvalidArgument("count_subset_sums: target out of range");
  if (k > elements.size()) return {};
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  bool saturated = false;
  // dp[j * order + s] = number of j-subsets of the processed prefix summing to s
  std::vector<std::uint64_t> dp((k + 1) * order, 0);
  dp[0] = 1;
  std::vector<std::uint64_t> shift(order);
  std::size_t processed = 0;
  for (auto e : elements) {
    for (std::uint64_t s = 0; s < order; ++s) shift[s] = g.add(s, e);
    ++processed;
    for (std::size_t j = std::min(k, processed); j >= 1; --j) {
      const std::uint64_t* src = dp.data() + (j - 1) * order;
      std::uint64_t* dst = dp.data() + j * order;
      for (std::uint64_t s = 0; s < order; ++s) {
        if (!src[s]) continue;
        std::uint64_t& d = dst[shift[s]];
        if (d > kMax - src[s]) {
          d = kMax;
          saturated = true;
        } else {
          d += src[s];
        }
      }
    }
  }
  const std::uint64_t count = dp[k * order + target];
  return {count, saturated && count == kMax};
}

SubsetCount mds_subset_check(std::span<const ec::Point> points, const ec::GroupStructure& gs, std::size_t k,
                             const ec::Point& target) {
  std::vector<std::uint64_t> ids;
  ids.reserve(points.size());
  std::set<std::uint64_t> seen;
  for (const auto& p : points) {
    auto id = gs.element_id(p);
    if (!id) throw InvalidArgument("mds_subset_check: point " + ec::to_string(p) + " not in the group table");
    if (!seen.insert(*id).second) throw InvalidArgument("mds_subset_check: repeated point " + ec::to_string(p));
    ids.push_back(*id);
  }
  auto tid = gs.element_id(target);
  if (!tid) throw InvalidArgument("mds_subset_check: target not in the group table");
  return count_subset_sums(AbelianGroup::of(gs), ids, k, *tid);
}

}  // namespace isodual::code
