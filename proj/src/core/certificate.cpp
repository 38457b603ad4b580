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

#include "certificate.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

#ifndef ISODUAL_VERSION
#define ISODUAL_VERSION "0.0.0"
#endif

namespace isodual::cert {

const char* const kToolVersion = ISODUAL_VERSION;

using json = nlohmann::json;
using ec::Point;

namespace {

json point_json(const Point& p) {
  if (p.is_infinity()) return "O";
  return json::array({p.x.enc(), p.y.enc()});
}

json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

json config_json(const iso::ConstructionInput& in) {
  return {{"field", in.curve.field().spec().to_string()},
          {"curve", in.curve.to_string()},
          {"k", in.k},
          {"construction", in.construction},
          {"torsion_choice", json::array({in.torsion_choice.first, in.torsion_choice.second})},
          {"pair_mode", iso::to_string(in.pair_mode)},
          {"pair_x", in.pair_x},
          {"brute_force_distance", in.brute_force_distance}};
}

json matrix_json(const la::Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<std::uint32_t>(m.row(r), m.row(r) + m.cols()));
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------ schema helpers

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("schema error at " + path + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing");
  return *it;
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schema_error(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected a boolean");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::uint32_t as_elem(const json& j, const gf::Field& F, const std::string& path) {
  const auto v = as_uint(j, path);
  if (v >= F.q()) schema_error(path, "field element " + std::to_string(v) + " out of range for q=" + std::to_string(F.q()));
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> elem_list(const json& j, const gf::Field& F, const std::string& path) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  for (const auto& e : as_array(j, path)) out.push_back(as_elem(e, F, path + "[" + std::to_string(i++) + "]"));
  return out;
}

Point as_point(const json& j, const gf::Field& F, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "O") schema_error(path, "expected \"O\" or [x, y]");
    return Point::at_infinity();
  }
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected \"O\" or [x, y]");
  return Point::affine(F.element(as_elem(j[0], F, path + "[0]")), F.element(as_elem(j[1], F, path + "[1]")));
}

void check_schema_tag(const json& j, const char* expected) {
  const auto s = as_string(member(j, "schema", "$"), "$.schema");
  if (s != expected) schema_error("$.schema", "expected \"" + std::string(expected) + "\", found \"" + s + "\"");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------- serialize

std::string serialize(const iso::IsoDualCertificate& c) {
  json g = json::array();
  for (const auto& [p, m] : c.g.terms()) g.push_back({{"point", point_json(p)}, {"multiplicity", m}});
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(point_json(p));
  json j = {
      {"schema", kCertSchema},
      {"tool", tool_json()},
      {"config", config_json(c.input)},
      {"curve_order", c.curve_order},
      {"group", {{"d1", c.d1}, {"d2", c.d2}}},
      {"q_a", point_json(c.q_a)},
      {"q_b", point_json(c.q_b)},
      {"selected_odd_x", c.selected_odd_x},
      {"points", pts},
      {"divisor_g", g},
      {"generator", matrix_json(c.code.generator())},
      {"v", c.v.entries()},
      {"params", {{"n", c.n()}, {"k", c.k()}, {"d", c.d}}},
      {"hull", c.hull},
      {"checks",
       {{"iso_dual", c.iso_dual},
        {"mds_witness", c.mds_witness.count},
        {"mds_witness_saturated", c.mds_witness.saturated},
        {"distance_method", c.distance_method}}},
  };
  return dump(j);
}

// -------------------------------------------------------------------- parse

iso::ConstructionInput Document::config() const {
  iso::ConstructionInput in{*curve, k, construction, torsion_choice, pair_mode, pair_x, brute_force_distance};
  return in;
}

Document parse(const std::string& text) {
  const json j = parse_json(text);
  check_schema_tag(j, kCertSchema);
  Document d;
  const auto& tool = member(j, "tool", "$");
  d.tool_version = as_string(member(tool, "version", "$.tool"), "$.tool.version");

  const auto& cfg = member(j, "config", "$");
  try {
    d.field = gf::Field::parse(as_string(member(cfg, "field", "$.config"), "$.config.field"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    schema_error("$.config.field", e.what());
  }
  const auto& F = *d.field;
  try {
    d.curve = ec::Curve::parse(d.field, as_string(member(cfg, "curve", "$.config"), "$.config.curve"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    schema_error("$.config.curve", e.what());
  }
  d.k = static_cast<int>(as_int(member(cfg, "k", "$.config"), "$.config.k"));
  d.construction = static_cast<int>(as_int(member(cfg, "construction", "$.config"), "$.config.construction"));
  if (d.construction != 1 && d.construction != 2) schema_error("$.config.construction", "expected 1 or 2");
  const auto& tc = as_array(member(cfg, "torsion_choice", "$.config"), "$.config.torsion_choice");
  if (tc.size() != 2) schema_error("$.config.torsion_choice", "expected two indices");
  d.torsion_choice = {static_cast<int>(as_int(tc[0], "$.config.torsion_choice[0]")),
                      static_cast<int>(as_int(tc[1], "$.config.torsion_choice[1]"))};
  d.pair_mode = iso::parse_pair_mode(as_string(member(cfg, "pair_mode", "$.config"), "$.config.pair_mode"));
  d.pair_x = elem_list(member(cfg, "pair_x", "$.config"), F, "$.config.pair_x");
  d.brute_force_distance = as_bool(member(cfg, "brute_force_distance", "$.config"), "$.config.brute_force_distance");

  d.curve_order = as_uint(member(j, "curve_order", "$"), "$.curve_order");
  const auto& grp = member(j, "group", "$");
  d.d1 = as_uint(member(grp, "d1", "$.group"), "$.group.d1");
  d.d2 = as_uint(member(grp, "d2", "$.group"), "$.group.d2");
  d.q_a = as_point(member(j, "q_a", "$"), F, "$.q_a");
  d.q_b = as_point(member(j, "q_b", "$"), F, "$.q_b");
  d.selected_odd_x = elem_list(member(j, "selected_odd_x", "$"), F, "$.selected_odd_x");

  std::size_t i = 0;
  for (const auto& p : as_array(member(j, "points", "$"), "$.points"))
    d.points.push_back(as_point(p, F, "$.points[" + std::to_string(i++) + "]"));
  i = 0;
  for (const auto& t : as_array(member(j, "divisor_g", "$"), "$.divisor_g")) {
    const std::string path = "$.divisor_g[" + std::to_string(i++) + "]";
    d.divisor_g.emplace_back(as_point(member(t, "point", path), F, path + ".point"),
                             as_int(member(t, "multiplicity", path), path + ".multiplicity"));
  }

  const auto& gen = as_array(member(j, "generator", "$"), "$.generator");
  d.rows = gen.size();
  i = 0;
  for (const auto& row : gen) {
    const std::string path = "$.generator[" + std::to_string(i++) + "]";
    auto r = elem_list(row, F, path);
    if (i == 1) d.cols = r.size();
    if (r.size() != d.cols) schema_error(path, "row length differs from row 0");
    d.generator.insert(d.generator.end(), r.begin(), r.end());
  }
  d.v = elem_list(member(j, "v", "$"), F, "$.v");
  for (std::size_t t = 0; t < d.v.size(); ++t)
    if (d.v[t] == 0) schema_error("$.v[" + std::to_string(t) + "]", "scaling vector entries must be nonzero");

  const auto& prm = member(j, "params", "$");
  d.n = as_uint(member(prm, "n", "$.params"), "$.params.n");
  d.dim = as_uint(member(prm, "k", "$.params"), "$.params.k");
  d.d = as_uint(member(prm, "d", "$.params"), "$.params.d");
  d.hull = as_uint(member(j, "hull", "$"), "$.hull");
  const auto& chk = member(j, "checks", "$");
  d.iso_dual = as_bool(member(chk, "iso_dual", "$.checks"), "$.checks.iso_dual");
  d.mds_witness = as_uint(member(chk, "mds_witness", "$.checks"), "$.checks.mds_witness");
  d.mds_witness_saturated = as_bool(member(chk, "mds_witness_saturated", "$.checks"), "$.checks.mds_witness_saturated");
  d.distance_method = as_string(member(chk, "distance_method", "$.checks"), "$.checks.distance_method");
  if (d.distance_method != "exhaustive" && d.distance_method != "subset-sum")
    schema_error("$.checks.distance_method", "expected \"exhaustive\" or \"subset-sum\"");

  d.text = dump(j);
  return d;
}

// ------------------------------------------------------------------- verify

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name;
  return {};
}

namespace {

la::Matrix recorded_matrix(const Document& d) {
  la::Matrix m(*d.field, d.rows, d.cols);
  for (std::size_t r = 0; r < d.rows; ++r)
    for (std::size_t c = 0; c < d.cols; ++c) m.at(r, c) = d.generator[r * d.cols + c];
  return m;
}

}  // namespace

VerifyReport verify(const Document& d) {
  VerifyReport rep;
  const auto& F = *d.field;
  const auto& curve = *d.curve;
  auto run = [&](const std::string& name, auto&& fn) {
    CheckResult r{name, false, {}};
    try {
      r.detail = fn();
      r.ok = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    rep.checks.push_back(std::move(r));
  };
  const std::size_t k = static_cast<std::size_t>(std::max(d.k, 0));

  run("dimensions", [&]() -> std::string {
    if (d.n != d.points.size()) return "params.n differs from the point count";
    if (d.n != 2 * k) return "n != 2k";
    if (d.dim != k || d.rows != k) return "generator row count or params.k differs from k";
    if (d.cols != d.n || d.v.size() != d.n) return "generator width or v length differs from n";
    return {};
  });
  run("points_on_curve", [&]() -> std::string {
    for (const auto& p : d.points) {
      if (p.is_infinity()) return "O listed as an evaluation point";
      if (!curve.contains(p)) return ec::to_string(p) + " is not on the curve";
    }
    return {};
  });
  run("points_canonical", [&]() -> std::string {
    for (std::size_t i = 1; i < d.points.size(); ++i)
      if (!(d.points[i - 1] < d.points[i])) return "points not strictly increasing in canonical order";
    return {};
  });
  run("curve_order", [&]() -> std::string {
    const auto gs = ec::group_structure(curve);
    if (gs.order() != d.curve_order) return "recorded #E " + std::to_string(d.curve_order) + ", actual " + std::to_string(gs.order());
    if (gs.d1 != d.d1 || gs.d2 != d.d2) return "group structure differs";
    if (2 * d.n > gs.order()) return "n exceeds #E/2";
    return {};
  });
  run("points_match_config", [&]() -> std::string {
    auto in = d.config();
    in.brute_force_distance = false;
    const auto c = iso::construct(in);
    if (c.points != d.points) return "point set differs from the one the config produces";
    if (!(c.q_a == d.q_a) || !(c.q_b == d.q_b)) return "torsion points differ";
    if (c.selected_odd_x != d.selected_odd_x) return "selected pairs differ";
    return {};
  });
  run("divisor_g", [&]() -> std::string {
    if (!curve.contains(d.q_a) || d.q_a.is_infinity() || !curve.is_two_torsion(d.q_a)) return "Q_a is not of order 2";
    fs::Divisor expect;
    expect.add(Point::at_infinity(), d.k - 1).add(d.q_a, 1);
    fs::Divisor got;
    for (const auto& [p, m] : d.divisor_g) got.add(p, m);
    if (!(got == expect)) return "G is not (k-1)O + Q_a";
    return {};
  });
  run("generator", [&]() -> std::string {
    la::Matrix m = iso::evaluation_matrix(curve, d.k, d.q_a, d.points);
    la::rref(m);
    if (!(m == recorded_matrix(d))) return "recorded generator differs from the RREF of the evaluation matrix";
    return {};
  });
  run("v", [&]() -> std::string {
    const auto v = iso::closed_form_v(curve, d.construction, d.q_a, d.points);
    if (v.entries() != d.v) return "recorded v differs from the closed form";
    return {};
  });
  run("iso_dual", [&]() -> std::string {
    if (!d.iso_dual) return "certificate does not claim the iso-dual identity";
    code::LinearCode C(d.field, recorded_matrix(d));
    code::ScalingVector v(F, d.v);
    if (!code::same_code(code::scale(C, v), code::dual(C))) return "scale(C, v) != dual(C)";
    return {};
  });
  run("mds_witness", [&]() -> std::string {
    const auto gs = ec::group_structure(curve);
    const auto w = code::mds_subset_check(d.points, gs, k, d.q_a);
    if (w.count != d.mds_witness || w.saturated != d.mds_witness_saturated) return "recorded subset count differs";
    if (w.count != 0) return "some k-subset of D sums to sum(G)";
    return {};
  });
  run("hull", [&]() -> std::string {
    code::LinearCode C(d.field, recorded_matrix(d));
    const auto h = code::hull_dim(C);
    if (h != d.hull) return "recorded hull " + std::to_string(d.hull) + ", actual " + std::to_string(h);
    return {};
  });
  run("distance", [&]() -> std::string {
    if (d.d != d.n - k + 1) return "recorded d is not n-k+1";
    if (d.distance_method == "exhaustive") {
      code::LinearCode C(d.field, recorded_matrix(d));
      if (code::min_distance(C) != d.d) return "exhaustive minimum distance differs";
    }
    return {};
  });
  return rep;
}

iso::IsoDualCertificate to_certificate(const Document& d) {
  fs::Divisor g;
  for (const auto& [p, m] : d.divisor_g) g.add(p, m);
  return iso::IsoDualCertificate{d.config(),
                                 d.curve_order,
                                 d.d1,
                                 d.d2,
                                 d.q_a,
                                 d.q_b,
                                 d.selected_odd_x,
                                 d.points,
                                 g,
                                 code::LinearCode(d.field, recorded_matrix(d)),
                                 code::ScalingVector(*d.field, d.v),
                                 d.d,
                                 d.hull,
                                 {d.mds_witness, d.mds_witness_saturated},
                                 d.iso_dual,
                                 d.distance_method};
}

// ------------------------------------------------------------ scaled codes

ScaledDocument make_scaled(const iso::IsoDualCertificate& c, const iso::ScaledCode& s, const std::string& kind,
                           std::optional<std::uint64_t> seed) {
  ScaledDocument out;
  out.kind = kind;
  out.seed = seed;
  out.field = c.input.curve.field().spec().to_string();
  out.curve = c.input.curve.to_string();
  out.u = s.u.entries();
  out.n = s.code.n();
  out.k = s.code.k();
  out.d = c.d;
  out.hull = s.hull;
  const auto& g = s.code.generator();
  for (std::size_t r = 0; r < g.rows(); ++r) out.generator.emplace_back(g.row(r), g.row(r) + g.cols());
  return out;
}

std::string serialize(const ScaledDocument& s) {
  json j = {{"schema", kScaledSchema}, {"tool", tool_json()}, {"kind", s.kind},
            {"seed", s.seed ? json(*s.seed) : json(nullptr)},
            {"field", s.field}, {"curve", s.curve}, {"n", s.n}, {"k", s.k}, {"d", s.d}, {"hull", s.hull}, {"u", s.u},
            {"generator", s.generator}};
  return dump(j);
}

ScaledDocument parse_scaled(const std::string& text) {
  const json j = parse_json(text);
  check_schema_tag(j, kScaledSchema);
  ScaledDocument s;
  s.kind = as_string(member(j, "kind", "$"), "$.kind");
  const auto& seed = member(j, "seed", "$");
  if (!seed.is_null()) s.seed = as_uint(seed, "$.seed");
  s.field = as_string(member(j, "field", "$"), "$.field");
  s.curve = as_string(member(j, "curve", "$"), "$.curve");
  s.n = as_uint(member(j, "n", "$"), "$.n");
  s.k = as_uint(member(j, "k", "$"), "$.k");
  s.d = as_uint(member(j, "d", "$"), "$.d");
  s.hull = as_uint(member(j, "hull", "$"), "$.hull");
  for (const auto& e : as_array(member(j, "u", "$"), "$.u")) s.u.push_back(static_cast<std::uint32_t>(as_uint(e, "$.u[]")));
  for (const auto& row : as_array(member(j, "generator", "$"), "$.generator")) {
    std::vector<std::uint32_t> r;
    for (const auto& e : as_array(row, "$.generator[]")) r.push_back(static_cast<std::uint32_t>(as_uint(e, "$.generator[][]")));
    s.generator.push_back(std::move(r));
  }
  return s;
}

// ---------------------------------------------------------------------- io

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename " + tmp + " to " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace isodual::cert
