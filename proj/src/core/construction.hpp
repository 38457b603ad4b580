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
 * @file construction.hpp
 * @brief Iso-dual MDS elliptic codes C_L(D, (k-1)O + Q) with Q of order 2.
 *
 * Construction 1 (characteristic 2, y^2 + xy = x^3 + a2 x^2 + a6):
 *   D = Q1 + {P, -P} for k odd-order pairs, v_i = 1 / h'(x_i).
 * Construction 2 (odd characteristic, E[2] rational, a1 = a3 = 0):
 *   D = (Qa + S) u (Qb + S) for an inverse-closed odd-order set S of size k,
 *   v_i = (x_i - x(Qa)) / (h'(x_i) y_i).
 * Here h is the product of (x - x_i) over the k distinct x-coordinates of D.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "code.hpp"
#include "curve.hpp"
#include "funcspace.hpp"

namespace isodual::iso {

/// How ConstructionInput::pair_x identifies odd-order pairs {P, -P}.
enum class PairMode {
  Canonical,  // pair_x ignored; pairs taken by ascending x of the representative
  EvalX,      // x-coordinates of the translated evaluation points (Qa side)
  OddX,       // x-coordinates of the odd-order points themselves
};

std::string to_string(PairMode m);
PairMode parse_pair_mode(const std::string& s);

struct ConstructionInput {
  ec::Curve curve;
  int k = 0;
  int construction = 1;
  /// 1-based indices into the canonical list of nonzero 2-torsion points.
  /// Construction 1 ignores them and uses (0, sqrt(a6)).
  std::pair<int, int> torsion_choice{1, 2};
  PairMode pair_mode = PairMode::Canonical;
  std::vector<std::uint32_t> pair_x{};
  /// Exhaustive distance check when q^k fits the brute-force budget.
  bool brute_force_distance = true;
};

struct IsoDualCertificate {
  ConstructionInput input;
  std::uint64_t curve_order = 0;
  std::uint64_t d1 = 0, d2 = 0;
  ec::Point q_a;
  ec::Point q_b;  // Infinity for construction 1
  /// x of the chosen pair representatives, in selection order.
  std::vector<std::uint32_t> selected_odd_x;
  std::vector<ec::Point> points;  // canonical order
  fs::Divisor g;
  code::LinearCode code;
  code::ScalingVector v;
  std::size_t d = 0;
  std::size_t hull = 0;
  code::SubsetCount mds_witness;
  bool iso_dual = false;
  std::string distance_method;  // "exhaustive" or "subset-sum"

  std::size_t n() const { return code.n(); }
  std::size_t k() const { return code.k(); }
};

/// Odd-order points other than O, grouped in inverse pairs. The representative
/// is the member of smaller y-encoding; pairs ascend by representative x.
std::vector<std::pair<ec::Point, ec::Point>> odd_pairs(const ec::Curve& c);

/// Largest odd divisor.
std::uint64_t odd_part(std::uint64_t n);

/// Dispatch on input.construction. Throws PreconditionError / InvalidArgument
/// for bad input and InternalError when a verified identity fails.
IsoDualCertificate construct(const ConstructionInput& in);
IsoDualCertificate construct1(const ConstructionInput& in);
IsoDualCertificate construct2(const ConstructionInput& in);

/// Generator rows: the L(G) basis evaluated at the points (not reduced).
la::Matrix evaluation_matrix(const ec::Curve& c, int k, const ec::Point& q, const std::vector<ec::Point>& points);
/// Closed-form iso-dual scaling vector: 1/h'(x_i) for construction 1,
/// (x_i - x(q_a)) / (h'(x_i) y_i) for construction 2.
code::ScalingVector closed_form_v(const ec::Curve& c, int construction, const ec::Point& q_a,
                                  const std::vector<ec::Point>& points);

struct ScaledCode {
  code::ScalingVector u;
  code::LinearCode code;
  std::size_t hull = 0;
};

/// u_i = sqrt(v_i), giving a self-dual code (hull = k). Characteristic 2 only.
ScaledCode selfdual_transform(const IsoDualCertificate& cert);

/// Deterministic search for u with hull(u C) = 0: u is 1 outside at most l'
/// positions, l' from hull(C) upward, positions in lexicographic order and
/// entries with u^2 != 1 in ascending encoding. Each tried vector costs one
/// unit of budget. Empty when the budget runs out.
std::optional<ScaledCode> lcd_transform(const IsoDualCertificate& cert, std::uint64_t budget);

/// Uniform random nonzero scaling vectors from a seeded mt19937_64.
class ScalingSampler {
 public:
  ScalingSampler(const gf::Field& f, std::size_t n, std::uint64_t seed);
  code::ScalingVector next();

 private:
  const gf::Field* f_;
  std::size_t n_;
  std::mt19937_64 rng_;
};

/// First sampled u (up to max_samples) with hull(u C) = target.
std::optional<ScaledCode> find_scaling_with_hull(const code::LinearCode& c, std::size_t target, std::uint64_t seed,
                                                 std::uint64_t max_samples);

/// Hull dimension counts over `samples` random scalings.
std::map<std::size_t, std::uint64_t> hull_histogram(const code::LinearCode& c, std::uint64_t samples,
                                                    std::uint64_t seed);

}  // namespace isodual::iso
