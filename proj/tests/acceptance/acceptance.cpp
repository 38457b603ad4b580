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

// One line per acceptance criterion: "[PASS|FAIL] <n> <title> (<seconds> s) <detail>".

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "certificate.hpp"
#include "code.hpp"
#include "construction.hpp"
#include "curve.hpp"
#include "eaqecc.hpp"
#include "funcspace.hpp"
#include "search.hpp"

#ifndef ISODUAL_CLI
#define ISODUAL_CLI "isodual"
#endif

using namespace isodual;
using iso::ConstructionInput;
using iso::IsoDualCertificate;
using iso::PairMode;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.ok = false;
    o.detail << " [over the " << limit_s << " s limit]";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %d %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), s, o.detail.str().c_str());
  std::fflush(stdout);
}

std::string label(const IsoDualCertificate& c) {
  return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + std::to_string(c.d) + "]_" +
         std::to_string(c.code.field().q());
}

ConstructionInput input(const char* field, const char* curve, int k, int construction) {
  ConstructionInput in{.curve = ec::Curve::parse(gf::Field::parse(field), curve)};
  in.k = k;
  in.construction = construction;
  return in;
}

// Certificates from criteria 1-4, reused by 5, 7 and 8.
struct Store {
  std::vector<IsoDualCertificate> certs;
  std::optional<IsoDualCertificate> q32, q64_hull2, q256_hull2;
  std::optional<code::LinearCode> q25_hull2;
} store;

ConstructionInput q16_input() {
  auto in = input("p=2,m=4,mod=1,1,0,0,1", "1,8,0,0,9", 4, 1);
  in.pair_mode = PairMode::EvalX;
  in.pair_x = {5, 1, 2, 7};
  return in;
}

ConstructionInput q25_input(int k) { return input("p=5,m=2,mod=2,4,1", "0,0,0,0,1", k, 2); }

void c1(Outcome& o) {
  const auto c = iso::construct(q16_input());
  o.detail << " " << label(c) << " hull=" << c.hull;
  o.expect(c.n() == 8 && c.k() == 4 && c.d == 5, "[8,4,5]");
  o.expect(code::min_distance(c.code) == 5, "exhaustive d = 5");
  o.expect(code::same_code(code::scale(c.code, c.v), code::dual(c.code)), "scale(C, v) = dual(C)");
  o.expect(c.hull == 0, "hull 0");
  // u = (t^2, t^2, t+1, t+1, t, t, t^2+1, t^2+1) as encodings.
  const code::ScalingVector u(c.code.field(), {4, 4, 3, 3, 2, 2, 5, 5});
  const auto h = code::hull_dim(code::scale(c.code, u));
  o.detail << " hull(u C)=" << h;
  o.expect(h == 4, "hull(u C) = 4");
  o.expect(iso::selfdual_transform(c).u == u, "sqrt(v) = u");
  store.certs.push_back(c);
}

void c2(Outcome& o) {
  const auto c = iso::construct(q25_input(8));
  o.detail << " " << label(c) << " hull=" << c.hull << " witness=" << c.mds_witness.count;
  o.expect(c.n() == 16 && c.k() == 8 && c.d == 9, "[16,8,9]");
  o.expect(c.iso_dual && code::same_code(code::scale(c.code, c.v), code::dual(c.code)), "iso-dual");
  o.expect(c.hull == 0, "hull 0");
  o.expect(c.mds_witness.count == 0 && !c.mds_witness.saturated, "DP certifier finds no k-subset summing to sum(G)");
  // Evaluation set is E[3] \ {O} translated by the two torsion points.
  const auto& E = c.input.curve;
  for (const auto& p : c.points) {
    o.expect(E.mul(3, E.sub(p, c.q_a)).is_infinity() || E.mul(3, E.sub(p, c.q_b)).is_infinity(), "D in Q + E[3]");
  }
  const auto s = iso::construct(q25_input(4));
  const auto d = code::min_distance(s.code);
  o.detail << "; sibling " << label(s) << " exhaustive d=" << d;
  o.expect(s.n() == 8 && d == 5, "k=4 sibling has d = 5 by exhaustive enumeration");
  store.certs.push_back(c);
}

struct PairSearch {
  std::size_t candidates = 0;
  std::size_t hull2 = 0;
  std::optional<IsoDualCertificate> first;
  std::size_t selfdual_hull = 0;
};

PairSearch leave_one_out(const ConstructionInput& base) {
  PairSearch r;
  const auto pairs = iso::odd_pairs(base.curve);
  std::vector<std::uint32_t> xs;
  for (const auto& [p, m] : pairs) xs.push_back(p.x.enc());
  for (std::size_t skip = 0; skip < xs.size(); ++skip) {
    auto in = base;
    in.pair_mode = PairMode::OddX;
    in.pair_x.clear();
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (i != skip) in.pair_x.push_back(xs[i]);
    ++r.candidates;
    auto c = iso::construct(in);
    if (c.hull != 2) continue;
    ++r.hull2;
    if (!r.first) {
      r.selfdual_hull = iso::selfdual_transform(c).hull;
      r.first = std::move(c);
    }
  }
  return r;
}

void c3(Outcome& o) {
  auto in64 = input("p=2,m=6,mod=1,1,0,1,1,0,1", "1,8,0,0,9", 18, 1);
  auto in256 = input("p=2,m=8,mod=1,0,1,1,1,0,0,0,1", "1,32,0,0,50", 70, 1);
  in64.brute_force_distance = in256.brute_force_distance = false;
  for (auto* in : {&in64, &in256}) {
    const auto q = in->curve.field().q();
    const auto pairs = iso::odd_pairs(in->curve).size();
    const auto r = leave_one_out(*in);
    o.detail << " q=" << q << ": " << r.hull2 << "/" << r.candidates << " with hull 2";
    o.expect(pairs == static_cast<std::size_t>(in->k) + 1, "q=" + std::to_string(q) + " has k+1 odd-order pairs");
    o.expect(r.candidates <= 71, "at most 71 candidates");
    o.expect(r.first.has_value(), "q=" + std::to_string(q) + " hull-2 selection exists");
    if (!r.first) continue;
    o.detail << ", " << label(*r.first) << " self-dual hull " << r.selfdual_hull;
    o.expect(r.selfdual_hull == static_cast<std::size_t>(in->k), "self-dual hull = k");
    o.expect(r.first->d == r.first->n() - r.first->k() + 1 && r.first->mds_witness.count == 0, "MDS");
    store.certs.push_back(*r.first);
    (q == 64 ? store.q64_hull2 : store.q256_hull2) = *r.first;
  }
}

void c4(Outcome& o) {
  auto in49 = input("p=7,m=2,mod=3,6,1", "0,0,0,1,3", 14, 2);
  auto in289 = input("p=17,m=2,mod=3,16,1", "0,0,0,0,1", 80, 2);
  in289.torsion_choice = {2, 3};
  for (auto* in : {&in49, &in289}) {
    const auto c = iso::construct(*in);
    const auto& E = c.input.curve;
    o.detail << " " << label(c) << " hull=" << c.hull;
    o.expect(c.iso_dual && c.hull == 0 && c.mds_witness.count == 0, label(c) + " iso-dual, hull 0");
    // Odd-order points used: order 15 over GF(49), E[9] \ {O} over GF(289).
    const std::uint64_t m = c.code.field().q() == 49 ? 15 : 9;
    bool in_coset = true;
    for (const auto& p : c.points)
      in_coset &= E.mul(static_cast<std::int64_t>(m), E.sub(p, c.q_a)).is_infinity() ||
                  E.mul(static_cast<std::int64_t>(m), E.sub(p, c.q_b)).is_infinity();
    o.expect(in_coset, "D in Q + E[" + std::to_string(m) + "]");
    store.certs.push_back(c);
  }
  o.expect(store.certs.size() >= 6 && store.certs[store.certs.size() - 2].n() == 28 && store.certs.back().n() == 160,
           "[28,14,15] and [160,80,81]");
}

void c5(Outcome& o) {
  std::vector<qec::EaqeccParams> got;
  auto add = [&](std::size_t n, std::size_t k, std::size_t d, std::size_t hull, std::uint64_t q) {
    const auto p = qec::derive(n, k, d, hull, q);
    o.expect(qec::is_mds_eaqecc(p), p.label() + " MDS");
    got.push_back(p);
  };
  auto from = [&](const IsoDualCertificate& c, std::size_t hull) { add(c.n(), c.k(), c.d, hull, c.code.field().q()); };
  const auto& C = store.certs;
  from(C.at(0), C.at(0).hull);  // q=16
  auto in32 = input("p=2,m=5,mod=1,0,1,0,0,1", "1,1,0,0,6", 10, 1);
  in32.brute_force_distance = false;
  const auto c32 = iso::construct(in32);
  from(c32, c32.hull);
  for (const auto* c : {&*store.q64_hull2, &*store.q256_hull2}) {
    from(*c, c->hull);
    const auto lcd = iso::lcd_transform(*c, 100000);
    o.expect(lcd.has_value(), "LCD scaling for " + label(*c));
    if (lcd) from(*c, lcd->hull);
  }
  from(C.at(1), C.at(1).hull);  // q=25
  const auto h2 = iso::find_scaling_with_hull(C.at(1).code, 2, 1, 100000);
  o.expect(h2.has_value(), "seeded sampler finds hull 2 for q=25");
  if (h2) from(C.at(1), h2->hull);
  from(C.at(C.size() - 2), C.at(C.size() - 2).hull);  // q=49
  from(C.back(), C.back().hull);                        // q=289

  const std::vector<std::string> want{"[[8,4,5;4]]_16",     "[[20,8,11;8]]_32",   "[[36,16,19;16]]_64",
                                      "[[36,18,19;18]]_64", "[[140,68,71;68]]_256", "[[140,70,71;70]]_256",
                                      "[[16,8,9;8]]_25",    "[[16,6,9;6]]_25",    "[[28,14,15;14]]_49",
                                      "[[160,80,81;80]]_289"};
  std::vector<std::string> labels;
  for (const auto& p : got) labels.push_back(p.label());
  o.expect(labels == want, "parameter tuples");
  for (const auto& l : labels) o.detail << " " << l;
}

void c6(Outcome& o) {
  const std::vector<std::uint64_t> qs{16, 32, 64, 256, 25, 49, 289};
  const std::vector<std::uint64_t> want{8, 20, 36, 140, 16, 28, 160};
  const auto rows = search::bound_table(qs, true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    o.detail << " (" << r.q << "," << r.bound_n << (r.achieved_n ? "/" + std::to_string(*r.achieved_n) : "/-") << ")";
    o.expect(r.bound_n == want[i], "bound for q=" + std::to_string(r.q));
    o.expect(r.achieved_n == r.bound_n, "achieved length for q=" + std::to_string(r.q));
  }
}

// --------------------------------------------------------------- criterion 7

bool field_axioms(std::uint64_t q) {
  const auto F = gf::Field::make(search::default_field_spec(q));
  for (std::uint32_t a = 0; a < q; ++a) {
    if (F->add(a, F->neg(a)) != 0 || F->mul(a, 1) != a) return false;
    if (a && F->mul(a, F->inv(a)) != 1) return false;
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        if (F->add(F->add(a, b), c) != F->add(a, F->add(b, c))) return false;
        if (F->mul(F->mul(a, b), c) != F->mul(a, F->mul(b, c))) return false;
        if (F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c))) return false;
        if (F->add(a, b) != F->add(b, a) || F->mul(a, b) != F->mul(b, a)) return false;
      }
  }
  return true;
}

bool group_axioms(const ec::Curve& E) {
  const auto pts = ec::enumerate_points(E);
  for (const auto& P : pts) {
    if (!E.add(P, E.neg(P)).is_infinity() || !(E.add(P, ec::Point::at_infinity()) == P)) return false;
    for (const auto& Q : pts) {
      const auto PQ = E.add(P, Q);
      if (!(PQ == E.add(Q, P)) || !E.contains(PQ)) return false;
      for (const auto& R : pts)
        if (!(E.add(PQ, R) == E.add(P, E.add(Q, R)))) return false;
    }
  }
  return true;
}

std::uint64_t brute_subsets(const code::AbelianGroup& g, const std::vector<std::uint64_t>& e, std::size_t k,
                            std::uint64_t t) {
  std::uint64_t count = 0;
  const std::size_t n = e.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s = g.add(s, e[i]);
    count += s == t;
  }
  return count;
}

void c7(Outcome& o) {
  const std::vector<std::uint64_t> small{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
  // (a)
  bool a = true;
  for (auto q : small) {
    a &= field_axioms(q);
    const auto F = gf::Field::make(search::default_field_spec(q));
    const auto curves = search::enumerate_curves(F, nullptr, search::Family::Canonical, false);
    a &= group_axioms(curves.front().curve) && group_axioms(curves.back().curve);
  }
  o.expect(a, "(a) field and group axioms");
  // (b), (c)
  bool b = true, cc = true;
  std::uint64_t curves_checked = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto F = gf::Field::make(search::default_field_spec(q));
    std::set<std::uint64_t> realized, feasible;
    for (const auto& r : search::enumerate_curves(F, nullptr, search::Family::General, false)) {
      const std::int64_t t = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(r.order);
      b &= static_cast<std::uint64_t>(t * t) <= 4 * q;
      realized.insert(r.order);
      ++curves_checked;
    }
    for (const auto& f : ec::feasible_orders(q)) feasible.insert(f.order);
    cc &= realized == feasible;
  }
  o.expect(b, "(b) Hasse bound");
  o.expect(cc, "(c) feasible = realized orders");
  // (d)
  bool d = true;
  std::uint64_t fchecks = 0;
  for (const auto& c : store.certs) {
    const auto& E = c.input.curve;
    const auto basis = fs::rr_basis(E, static_cast<int>(c.k()), c.q_a);
    const auto pts = ec::enumerate_points(E);
    d &= basis.divisor == c.g;
    for (const auto& f : basis.functions) {
      d &= fs::in_riemann_roch_space(E, f, c.g, pts);
      ++fchecks;
    }
  }
  o.expect(d, "(d) div(f) + G >= 0 for every basis function");
  // (e)
  bool e = true;
  std::uint64_t dp_cases = 0;
  for (const auto& mods : std::vector<std::vector<std::uint64_t>>{{2}, {4}, {2, 2}, {6}, {2, 6}, {3, 3}, {6, 6}, {22}, {2, 30}}) {
    code::AbelianGroup g(mods);
    for (std::size_t n = 1; n <= std::min<std::uint64_t>(16, g.order()); ++n) {
      std::vector<std::uint64_t> el;
      for (std::size_t i = 0; i < n; ++i) el.push_back((i * 7 + 3) % g.order());
      std::sort(el.begin(), el.end());
      el.erase(std::unique(el.begin(), el.end()), el.end());
      for (std::size_t k = 0; k <= el.size(); ++k)
        for (std::uint64_t t = 0; t < g.order(); ++t) {
          e &= code::count_subset_sums(g, el, k, t).count == brute_subsets(g, el, k, t);
          ++dp_cases;
        }
    }
  }
  o.expect(e, "(e) DP = exhaustive subset counts");
  // (f)
  bool f = true;
  for (const auto& c : store.certs) f &= 2 * c.n() <= c.curve_order && c.hull + 1 <= c.k();
  o.expect(f, "(f) n <= #E/2 and hull <= k-1 on the criteria 1-4 certificates");
  std::uint64_t probe_certs = 0, probe_selfdual = 0;
  bool probe_half = true;
  for (const auto& r : search::max_length_probe(16)) {
    probe_certs += r.certificates;
    probe_selfdual += r.self_dual;
    probe_half &= r.within_half_order;
  }
  o.expect(probe_half, "(f) n <= #E/2 on every q=16 probe certificate");
  // (g)
  bool g = true;
  std::uint64_t reports = 0, counterexamples = 0;
  for (std::uint64_t order = 2; order <= 12; order += 2)
    for (const auto& grp : search::abelian_groups_of_order(order)) {
      std::uint64_t n0 = order / 2 + 1;
      n0 += n0 % 2;
      for (std::uint64_t n = n0; n <= order; n += 2) {
        const auto r1 = search::lemma_max_search(grp, n);
        const auto r2 = search::lemma_max_search(grp, n);
        g &= r1.admissible == r2.admissible && r1.counterexamples.size() == r2.counterexamples.size();
        for (std::size_t i = 0; g && i < r1.counterexamples.size(); ++i)
          g &= r1.counterexamples[i].subset == r2.counterexamples[i].subset && r1.counterexamples[i].g == r2.counterexamples[i].g;
        ++reports;
        counterexamples += r1.counterexamples.size();
      }
    }
  o.expect(g, "(g) lemma search stable");
  o.detail << " curves=" << curves_checked << " rr_functions=" << fchecks << " dp_cases=" << dp_cases
           << " lemma_reports=" << reports << " lemma_counterexamples=" << counterexamples << " q16_probe_hull_eq_k="
           << probe_selfdual << "/" << probe_certs;
}

// --------------------------------------------------------------- criterion 8

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + ISODUAL_CLI + "\" " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void c8(Outcome& o) {
  namespace fsys = std::filesystem;
  const auto dir = fsys::temp_directory_path() / ("isodual_acceptance_" + std::to_string(::getpid()));
  fsys::create_directories(dir);
  std::uint64_t lib_mutations = 0, cli_runs = 0;
  for (std::size_t i = 0; i < store.certs.size(); ++i) {
    const auto& c = store.certs[i];
    const auto text = cert::serialize(c);
    const auto doc = cert::parse(text);
    o.expect(doc.text == text, "parse/serialize bit-exact for " + label(c));
    o.expect(cert::serialize(cert::to_certificate(doc)) == text, "certificate rebuilt from file");
    o.expect(cert::verify(doc).ok(), "fresh " + label(c) + " verifies");
    o.expect(text == cert::serialize(iso::construct(c.input)), "identical config gives identical bytes");
    const auto path = (dir / ("c" + std::to_string(i) + ".json")).string();
    cert::write_file_atomic(path, text);
    o.expect(run_cli("verify \"" + path + "\"") == 0, "CLI verify exits 0 on " + label(c));
    ++cli_runs;
  }
  // Every single-entry mutation on the q=16 and q=25 certificates, in the library.
  for (std::size_t i : {std::size_t{0}, std::size_t{1}}) {
    const auto base = nlohmann::json::parse(cert::serialize(store.certs[i]));
    const std::uint32_t q = store.certs[i].code.field().q();
    for (std::size_t r = 0; r < base["generator"].size(); ++r)
      for (std::size_t col = 0; col < base["generator"][r].size(); ++col)
        for (std::uint32_t val = 0; val < q; ++val) {
          if (val == base["generator"][r][col].get<std::uint32_t>()) continue;
          auto j = base;
          j["generator"][r][col] = val;
          o.expect(!cert::verify(cert::parse(j.dump(2))).ok(), "generator mutation caught");
          ++lib_mutations;
        }
    for (std::size_t t = 0; t < base["v"].size(); ++t)
      for (std::uint32_t val = 1; val < q; ++val) {
        if (val == base["v"][t].get<std::uint32_t>()) continue;
        auto j = base;
        j["v"][t] = val;
        o.expect(!cert::verify(cert::parse(j.dump(2))).ok(), "v mutation caught");
        ++lib_mutations;
      }
  }
  // Through the CLI: one mutation per entry of the q=16 certificate.
  const auto base = nlohmann::json::parse(cert::serialize(store.certs[0]));
  const auto tampered = (dir / "tampered.json").string();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t col = 0; col < 8; ++col) {
      auto j = base;
      j["generator"][r][col] = (j["generator"][r][col].get<std::uint32_t>() + 1) % 16;
      cert::write_file_atomic(tampered, j.dump(2) + "\n");
      o.expect(run_cli("verify \"" + tampered + "\"") == 1, "CLI exit 1 on generator mutation");
      ++cli_runs;
    }
  for (std::size_t t = 0; t < 8; ++t) {
    auto j = base;
    j["v"][t] = j["v"][t].get<std::uint32_t>() % 15 + 1;
    cert::write_file_atomic(tampered, j.dump(2) + "\n");
    o.expect(run_cli("verify \"" + tampered + "\"") == 1, "CLI exit 1 on v mutation");
    ++cli_runs;
    j["v"][t] = 0;
    cert::write_file_atomic(tampered, j.dump(2) + "\n");
    o.expect(run_cli("verify \"" + tampered + "\"") == 2, "CLI exit 2 on zeroed v");
    ++cli_runs;
  }
  fsys::remove_all(dir);
  o.detail << " certificates=" << store.certs.size() << " library_mutations=" << lib_mutations
           << " cli_runs=" << cli_runs;
}

}  // namespace

int main() {
  criterion(1, "q=16 [8,4,5] iso-dual, hull 0, hull(u C) = 4", 1, c1);
  criterion(2, "q=25 [16,8,9] iso-dual, hull 0, k=4 sibling d = 5", 10, c2);
  criterion(3, "q=64 and q=256 pair-subset search: hull 2, self-dual hull k", 300, c3);
  criterion(4, "q=49 [28,14,15] and q=289 [160,80,81], hull 0", 120, c4);
  criterion(5, "EAQECC rows", 600, c5);
  criterion(6, "bound table with achieved lengths", 600, c6);
  criterion(7, "property suites (a)-(g)", 900, c7);
  criterion(8, "certificate round trip and tamper detection", 600, c8);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
