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

#include "isodual/isodual.h"

#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "certificate.hpp"
#include "construction.hpp"
#include "eaqecc.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "report.hpp"
#include "search.hpp"

using namespace isodual;

struct iso_field {
  gf::FieldPtr f;
};
struct iso_curve {
  std::optional<ec::Curve> c;
};
struct iso_cert {
  cert::Document doc;
  iso::IsoDualCertificate cert;
};
struct iso_scaled {
  cert::ScaledDocument doc;
  std::uint64_t q = 0;
};
struct iso_table {
  report::Table t;
};

namespace {

thread_local std::string g_last_error;

iso_status fail(iso_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class Fn>
iso_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(ISO_E_PARSE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(ISO_E_INVALID, e.what());
  } catch (const PreconditionError& e) {
    return fail(ISO_E_PRECONDITION, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(ISO_E_BUDGET, e.what());
  } catch (const IoError& e) {
    return fail(ISO_E_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ISO_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ISO_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

iso_status put(char** out, const std::string& s) {
  if (!out) return fail(ISO_E_INVALID, "null output pointer");
  *out = dup(s);
  return ISO_OK;
}

#define ISO_REQUIRE(cond, what) \
  if (!(cond)) return fail(ISO_E_INVALID, what)

iso_cert* wrap(cert::Document doc) {
  auto c = cert::to_certificate(doc);
  return new iso_cert{std::move(doc), std::move(c)};
}

iso_scaled* wrap_scaled(cert::ScaledDocument d) {
  const auto q = gf::Field::parse(d.field)->q();
  return new iso_scaled{std::move(d), q};
}

iso_status scaled_out(const iso_cert* c, const iso::ScaledCode& s, const char* kind, std::optional<std::uint64_t> seed,
                      iso_scaled** out) {
  *out = wrap_scaled(cert::make_scaled(c->cert, s, kind, seed));
  return ISO_OK;
}

}  // namespace

extern "C" {

const char* iso_version(void) { return cert::kToolVersion; }
const char* iso_last_error(void) { return g_last_error.c_str(); }
void iso_string_free(char* s) { std::free(s); }

// ------------------------------------------------------------------ fields

iso_status iso_field_parse(const char* spec, iso_field** out) {
  ISO_REQUIRE(spec && out, "null argument");
  return guard([&] {
    *out = new iso_field{gf::Field::parse(spec)};
    return ISO_OK;
  });
}

iso_status iso_field_default(uint64_t q, iso_field** out) {
  ISO_REQUIRE(out, "null argument");
  return guard([&] {
    *out = new iso_field{gf::Field::make(search::default_field_spec(q))};
    return ISO_OK;
  });
}

void iso_field_free(iso_field* f) { delete f; }
uint64_t iso_field_q(const iso_field* f) { return f ? f->f->q() : 0; }

iso_status iso_field_spec(const iso_field* f, char** out) {
  ISO_REQUIRE(f, "null field");
  return guard([&] { return put(out, f->f->spec().to_string()); });
}

// ------------------------------------------------------------------ curves

iso_status iso_curve_parse(const iso_field* f, const char* coeffs, iso_curve** out) {
  ISO_REQUIRE(f && coeffs && out, "null argument");
  return guard([&] {
    *out = new iso_curve{ec::Curve::parse(f->f, coeffs)};
    return ISO_OK;
  });
}

void iso_curve_free(iso_curve* c) { delete c; }

iso_status iso_curve_group(const iso_curve* c, uint64_t* order, uint64_t* d1, uint64_t* d2) {
  ISO_REQUIRE(c, "null curve");
  return guard([&] {
    const auto gs = ec::group_structure(*c->c);
    if (order) *order = gs.order();
    if (d1) *d1 = gs.d1;
    if (d2) *d2 = gs.d2;
    return ISO_OK;
  });
}

// ------------------------------------------------------------ construction

void iso_construct_opts_init(iso_construct_opts* o) {
  if (!o) return;
  *o = iso_construct_opts{};
  o->construction = 1;
  o->torsion_a = 1;
  o->torsion_b = 2;
  o->pair_mode = ISO_PAIRS_CANONICAL;
  o->brute_force_distance = 1;
}

iso_status iso_construct(const iso_curve* c, const iso_construct_opts* o, iso_cert** out) {
  ISO_REQUIRE(c && o && out, "null argument");
  ISO_REQUIRE(o->pair_x_len == 0 || o->pair_x, "pair_x is null");
  return guard([&] {
    iso::ConstructionInput in{.curve = *c->c};
    in.k = o->k;
    in.construction = o->construction;
    in.torsion_choice = {o->torsion_a, o->torsion_b};
    switch (o->pair_mode) {
      case ISO_PAIRS_CANONICAL: in.pair_mode = iso::PairMode::Canonical; break;
      case ISO_PAIRS_EVAL_X: in.pair_mode = iso::PairMode::EvalX; break;
      case ISO_PAIRS_ODD_X: in.pair_mode = iso::PairMode::OddX; break;
      default: return fail(ISO_E_INVALID, "unknown pair mode");
    }
    in.pair_x.assign(o->pair_x, o->pair_x + o->pair_x_len);
    in.brute_force_distance = o->brute_force_distance != 0;
    auto built = iso::construct(in);
    auto doc = cert::parse(cert::serialize(built));
    *out = new iso_cert{std::move(doc), std::move(built)};
    return ISO_OK;
  });
}

void iso_cert_free(iso_cert* c) { delete c; }

iso_status iso_cert_params(const iso_cert* c, uint64_t* q, size_t* n, size_t* k, size_t* d, size_t* hull) {
  ISO_REQUIRE(c, "null certificate");
  if (q) *q = c->doc.field->q();
  if (n) *n = c->doc.n;
  if (k) *k = c->doc.dim;
  if (d) *d = c->doc.d;
  if (hull) *hull = c->doc.hull;
  return ISO_OK;
}

int iso_cert_iso_dual(const iso_cert* c) { return c && c->doc.iso_dual ? 1 : 0; }
const char* iso_cert_distance_method(const iso_cert* c) { return c ? c->doc.distance_method.c_str() : ""; }

iso_status iso_cert_to_json(const iso_cert* c, char** out) {
  ISO_REQUIRE(c, "null certificate");
  return guard([&] { return put(out, c->doc.text); });
}

iso_status iso_cert_from_json(const char* text, iso_cert** out) {
  ISO_REQUIRE(text && out, "null argument");
  return guard([&] {
    *out = wrap(cert::parse(text));
    return ISO_OK;
  });
}

iso_status iso_cert_read(const char* path, iso_cert** out) {
  ISO_REQUIRE(path && out, "null argument");
  return guard([&] {
    const auto text = cert::read_file(path);
    try {
      *out = wrap(cert::parse(text));
    } catch (const ParseError& e) {
      throw ParseError(std::string(path) + ": " + e.what());
    }
    return ISO_OK;
  });
}

iso_status iso_cert_write(const iso_cert* c, const char* path) {
  ISO_REQUIRE(c && path, "null argument");
  return guard([&] {
    cert::write_file_atomic(path, c->doc.text);
    return ISO_OK;
  });
}

iso_status iso_cert_verify(const iso_cert* c, int* ok, char** report, char** first_failure) {
  ISO_REQUIRE(c && ok, "null argument");
  return guard([&] {
    const auto rep = cert::verify(c->doc);
    *ok = rep.ok() ? 1 : 0;
    if (report) {
      std::ostringstream os;
      for (const auto& r : rep.checks) {
        os << r.name << (r.ok ? " ok" : " FAIL");
        if (!r.ok) os << " " << r.detail;
        os << "\n";
      }
      *report = dup(os.str());
    }
    if (first_failure) *first_failure = dup(rep.first_failure());
    return ISO_OK;
  });
}

// -------------------------------------------------------------- transforms

iso_status iso_transform_selfdual(const iso_cert* c, iso_scaled** out) {
  ISO_REQUIRE(c && out, "null argument");
  return guard([&] { return scaled_out(c, iso::selfdual_transform(c->cert), "selfdual", std::nullopt, out); });
}

iso_status iso_transform_lcd(const iso_cert* c, uint64_t budget, iso_scaled** out) {
  ISO_REQUIRE(c && out, "null argument");
  return guard([&] {
    const auto s = iso::lcd_transform(c->cert, budget);
    if (!s) return fail(ISO_E_NOT_FOUND, "no LCD scaling found within a budget of " + std::to_string(budget));
    return scaled_out(c, *s, "lcd", std::nullopt, out);
  });
}

iso_status iso_transform_hull(const iso_cert* c, size_t target, uint64_t seed, uint64_t max_samples,
                              iso_scaled** out) {
  ISO_REQUIRE(c && out, "null argument");
  return guard([&] {
    const auto s = iso::find_scaling_with_hull(c->cert.code, target, seed, max_samples);
    if (!s)
      return fail(ISO_E_NOT_FOUND, "no scaling with hull " + std::to_string(target) + " in " +
                                       std::to_string(max_samples) + " samples");
    return scaled_out(c, *s, "hull-sample", seed, out);
  });
}

iso_status iso_hull_histogram(const iso_cert* c, uint64_t samples, uint64_t seed, char** out) {
  ISO_REQUIRE(c, "null certificate");
  return guard([&] {
    std::string s = "hull,count\n";
    for (const auto& [h, n] : iso::hull_histogram(c->cert.code, samples, seed))
      s += std::to_string(h) + "," + std::to_string(n) + "\n";
    return put(out, s);
  });
}

void iso_scaled_free(iso_scaled* s) { delete s; }

iso_status iso_scaled_params(const iso_scaled* s, uint64_t* q, size_t* n, size_t* k, size_t* d, size_t* hull) {
  ISO_REQUIRE(s, "null scaled code");
  if (q) *q = s->q;
  if (n) *n = s->doc.n;
  if (k) *k = s->doc.k;
  if (d) *d = s->doc.d;
  if (hull) *hull = s->doc.hull;
  return ISO_OK;
}

iso_status iso_scaled_to_json(const iso_scaled* s, char** out) {
  ISO_REQUIRE(s, "null scaled code");
  return guard([&] { return put(out, cert::serialize(s->doc)); });
}

iso_status iso_scaled_from_json(const char* text, iso_scaled** out) {
  ISO_REQUIRE(text && out, "null argument");
  return guard([&] {
    *out = wrap_scaled(cert::parse_scaled(text));
    return ISO_OK;
  });
}

iso_status iso_scaled_read(const char* path, iso_scaled** out) {
  ISO_REQUIRE(path && out, "null argument");
  return guard([&] {
    *out = wrap_scaled(cert::parse_scaled(cert::read_file(path)));
    return ISO_OK;
  });
}

iso_status iso_scaled_write(const iso_scaled* s, const char* path) {
  ISO_REQUIRE(s && path, "null argument");
  return guard([&] {
    cert::write_file_atomic(path, cert::serialize(s->doc));
    return ISO_OK;
  });
}

// ------------------------------------------------------------------ eaqecc

namespace {
qec::EaqeccParams from_c(const iso_eaqecc& p) {
  return qec::EaqeccParams{p.n, p.k_q, p.d, p.c, p.q, p.mds != 0, p.maximal_entanglement != 0};
}
}  // namespace

iso_status iso_eaqecc_derive(uint64_t n, uint64_t k, uint64_t d, uint64_t hull, uint64_t q, iso_eaqecc* out) {
  ISO_REQUIRE(out, "null argument");
  return guard([&] {
    const auto p = qec::derive(n, k, d, hull, q);
    *out = iso_eaqecc{p.n, p.k_q, p.d, p.c, p.q, p.mds ? 1 : 0, p.maximal_entanglement ? 1 : 0};
    return ISO_OK;
  });
}

iso_status iso_eaqecc_label(const iso_eaqecc* p, char** out) {
  ISO_REQUIRE(p, "null argument");
  return guard([&] { return put(out, from_c(*p).label()); });
}

iso_status iso_eaqecc_csv_header(char** out) {
  return guard([&] { return put(out, qec::csv_header()); });
}

iso_status iso_eaqecc_csv_row(const iso_eaqecc* p, char** out) {
  ISO_REQUIRE(p, "null argument");
  return guard([&] { return put(out, qec::csv_row(from_c(*p))); });
}

// ------------------------------------------------------------------ tables

iso_status iso_table_new(const char* kind, iso_table** out) {
  ISO_REQUIRE(kind && out, "null argument");
  return guard([&] {
    *out = new iso_table{report::Table(report::parse_table_kind(kind))};
    return ISO_OK;
  });
}

void iso_table_free(iso_table* t) { delete t; }

iso_status iso_table_add(iso_table* t, uint64_t param) {
  ISO_REQUIRE(t, "null table");
  return guard([&] {
    t->t.add(param);
    return ISO_OK;
  });
}

size_t iso_table_rows(const iso_table* t) { return t ? t->t.rows() : 0; }

iso_status iso_table_render(const iso_table* t, iso_format fmt, char** out) {
  ISO_REQUIRE(t, "null table");
  return guard([&] { return put(out, fmt == ISO_FORMAT_JSON ? t->t.json() : t->t.csv()); });
}

}  // extern "C"
