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

// isodual command-line front end. Uses only the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isodual/isodual.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CStr {
  char* p = nullptr;
  ~CStr() { iso_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using Field = Handle<iso_field, iso_field_free>;
using Curve = Handle<iso_curve, iso_curve_free>;
using Cert = Handle<iso_cert, iso_cert_free>;
using Scaled = Handle<iso_scaled, iso_scaled_free>;
using Table = Handle<iso_table, iso_table_free>;

/// Exit code for a failed call; prints the library message with context.
int report(iso_status s, const std::string& context) {
  std::cerr << "isodual: " << context << ": " << iso_last_error() << "\n";
  switch (s) {
    case ISO_E_PARSE:
    case ISO_E_INVALID:
    case ISO_E_PRECONDITION:
    case ISO_E_IO:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

#define TRY(call, context)                     \
  do {                                         \
    iso_status st_ = (call);                   \
    if (st_ != ISO_OK) return report(st_, context); \
  } while (0)

std::string params_label(uint64_t q, size_t n, size_t k, size_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" + std::to_string(q);
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::cerr << "isodual: cannot write " << tmp << "\n";
      return kExitUsage;
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    std::cerr << "isodual: cannot rename " << tmp << " to " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string field;
  uint64_t q = 0;
  std::string curve;
  int k = 0;
  int construction = 0;
  std::vector<uint32_t> pairs_x;
  std::vector<uint32_t> pairs_odd_x;
  std::vector<int> torsion;
  bool no_brute_force = false;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  Field f;
  if (!a.field.empty())
    TRY(iso_field_parse(a.field.c_str(), &f.p), "--field");
  else
    TRY(iso_field_default(a.q, &f.p), "--q");
  Curve c;
  TRY(iso_curve_parse(f.p, a.curve.c_str(), &c.p), "--curve");

  iso_construct_opts o;
  iso_construct_opts_init(&o);
  o.k = a.k;
  const uint64_t q = iso_field_q(f.p);
  o.construction = a.construction ? a.construction : (q % 2 == 0 ? 1 : 2);
  if (!a.torsion.empty()) {
    o.torsion_a = a.torsion[0];
    o.torsion_b = a.torsion[1];
  }
  if (!a.pairs_x.empty()) {
    o.pair_mode = ISO_PAIRS_EVAL_X;
    o.pair_x = a.pairs_x.data();
    o.pair_x_len = a.pairs_x.size();
  } else if (!a.pairs_odd_x.empty()) {
    o.pair_mode = ISO_PAIRS_ODD_X;
    o.pair_x = a.pairs_odd_x.data();
    o.pair_x_len = a.pairs_odd_x.size();
  }
  o.brute_force_distance = a.no_brute_force ? 0 : 1;

  Cert cert;
  TRY(iso_construct(c.p, &o, &cert.p), "construct");
  size_t n, k, d, hull;
  TRY(iso_cert_params(cert.p, nullptr, &n, &k, &d, &hull), "construct");
  std::ostream& info = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
  info << params_label(q, n, k, d) << " hull=" << hull << " iso_dual=" << (iso_cert_iso_dual(cert.p) ? "true" : "false")
       << " distance=" << iso_cert_distance_method(cert.p) << "\n";
  if (a.out.empty() || a.out == "-") {
    CStr text;
    TRY(iso_cert_to_json(cert.p, &text.p), "construct");
    std::cout << text.str();
    return kExitOk;
  }
  TRY(iso_cert_write(cert.p, a.out.c_str()), a.out);
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& path, bool verbose) {
  Cert cert;
  TRY(iso_cert_read(path.c_str(), &cert.p), "verify");
  int ok = 0;
  CStr rep, first;
  TRY(iso_cert_verify(cert.p, &ok, &rep.p, &first.p), "verify");
  if (verbose) std::cout << rep.str();
  if (ok) {
    std::cout << path << ": ok\n";
    return kExitOk;
  }
  // Detail line of the first failed check.
  const std::string all = rep.str();
  const std::string name = first.str();
  std::string detail;
  for (size_t pos = 0; pos < all.size();) {
    const size_t end = all.find('\n', pos);
    const std::string line = all.substr(pos, end - pos);
    if (line.rfind(name + " FAIL", 0) == 0) {
      detail = line.substr(name.size() + 6);
      break;
    }
    pos = end == std::string::npos ? all.size() : end + 1;
  }
  std::cout << path << ": FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
  return kExitFail;
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
  std::string in;
  bool selfdual = false;
  bool lcd = false;
  uint64_t budget = 1000000;
  std::optional<size_t> hull_target;
  uint64_t histogram = 0;
  uint64_t seed = 1;
  uint64_t max_samples = 100000;
  std::string out;
};

int cmd_transform(const TransformArgs& a) {
  Cert cert;
  TRY(iso_cert_read(a.in.c_str(), &cert.p), "transform");
  int ok = 0;
  CStr first;
  TRY(iso_cert_verify(cert.p, &ok, nullptr, &first.p), "transform");
  if (!ok) {
    std::cerr << "isodual: transform: " << a.in << " fails verification (" << first.str() << ")\n";
    return kExitFail;
  }
  if (a.histogram) {
    CStr h;
    TRY(iso_hull_histogram(cert.p, a.histogram, a.seed, &h.p), "transform");
    return write_text(a.out, h.str());
  }
  Scaled s;
  if (a.selfdual)
    TRY(iso_transform_selfdual(cert.p, &s.p), "transform --selfdual");
  else if (a.lcd)
    TRY(iso_transform_lcd(cert.p, a.budget, &s.p), "transform --lcd");
  else
    TRY(iso_transform_hull(cert.p, *a.hull_target, a.seed, a.max_samples, &s.p), "transform --hull-target");
  uint64_t q;
  size_t n, k, d, hull;
  TRY(iso_scaled_params(s.p, &q, &n, &k, &d, &hull), "transform");
  std::ostream& info = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
  info << params_label(q, n, k, d) << " hull=" << hull << "\n";
  CStr text;
  TRY(iso_scaled_to_json(s.p, &text.p), "transform");
  return write_text(a.out, text.str());
}

// ------------------------------------------------------------------- eaqecc

int cmd_eaqecc(const std::vector<std::string>& files, bool csv) {
  std::string out;
  if (csv) {
    CStr h;
    TRY(iso_eaqecc_csv_header(&h.p), "eaqecc");
    out += h.str() + "\n";
  }
  for (const auto& path : files) {
    uint64_t q;
    size_t n, k, d, hull;
    Cert cert;
    Scaled s;
    iso_status st = iso_cert_read(path.c_str(), &cert.p);
    if (st == ISO_OK) {
      int ok = 0;
      CStr first;
      TRY(iso_cert_verify(cert.p, &ok, nullptr, &first.p), path);
      if (!ok) {
        std::cerr << "isodual: eaqecc: " << path << " fails verification (" << first.str() << ")\n";
        return kExitFail;
      }
      TRY(iso_cert_params(cert.p, &q, &n, &k, &d, &hull), path);
    } else if (st == ISO_E_PARSE && iso_scaled_read(path.c_str(), &s.p) == ISO_OK) {
      TRY(iso_scaled_params(s.p, &q, &n, &k, &d, &hull), path);
    } else {
      return report(st, path);
    }
    iso_eaqecc p;
    TRY(iso_eaqecc_derive(n, k, d, hull, q, &p), path);
    CStr line;
    if (csv) {
      TRY(iso_eaqecc_csv_row(&p, &line.p), path);
      out += line.str() + "\n";
    } else {
      TRY(iso_eaqecc_label(&p, &line.p), path);
      out += line.str() + " mds=" + (p.mds ? "true" : "false") + "\n";
    }
  }
  std::cout << out;
  return kExitOk;
}

// ------------------------------------------------------------------- search

int cmd_search(const std::string& table, std::vector<uint64_t> params, const std::string& format,
               const std::string& out) {
  if (params.empty()) {
    if (table == "bounds") params = {16, 32, 64, 256, 25, 49, 289};
    else if (table == "lemma-max") params = {2, 4, 6, 8, 10, 12};
    else params = {16};
  }
  Table t;
  TRY(iso_table_new(table.c_str(), &t.p), "search");
  for (size_t i = 0; i < params.size(); ++i) {
    std::cerr << table << ": " << (table == "lemma-max" ? "order " : "q=") << params[i] << " (" << i + 1 << "/"
              << params.size() << ")\n";
    TRY(iso_table_add(t.p, params[i]), "search " + std::to_string(params[i]));
  }
  CStr text;
  TRY(iso_table_render(t.p, format == "json" ? ISO_FORMAT_JSON : ISO_FORMAT_CSV, &text.p), "search");
  return write_text(out, text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iso-dual MDS elliptic codes: construct, verify, transform, EAQECC rows, search tables."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(iso_version()));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build an iso-dual MDS code certificate");
  auto* fopt = construct->add_option("--field", ca.field, "Field spec p=..,m=..,mod=c0,..,cm");
  auto* qopt = construct->add_option("--q", ca.q, "Field size (default modulus)");
  fopt->excludes(qopt);
  qopt->excludes(fopt);
  construct->add_option("--curve", ca.curve, "Coefficients a1,a2,a3,a4,a6 as encodings")->required();
  construct->add_option("--k", ca.k, "Code dimension (even)")->required();
  construct->add_option("--construction", ca.construction, "1 (char 2) or 2 (odd char); default by field")
      ->check(CLI::IsMember({1, 2}));
  auto* px = construct->add_option("--pairs-x", ca.pairs_x, "x of the chosen evaluation pairs")->delimiter(',');
  auto* pox = construct->add_option("--pairs-odd-x", ca.pairs_odd_x, "x of the chosen odd-order pairs")->delimiter(',');
  px->excludes(pox);
  pox->excludes(px);
  construct->add_option("--torsion", ca.torsion, "Two 1-based 2-torsion indices (construction 2)")
      ->delimiter(',')
      ->expected(2);
  construct->add_flag("--no-brute-force", ca.no_brute_force, "Skip the exhaustive distance check");
  construct->add_option("--out,-o", ca.out, "Certificate path (default stdout)");

  std::string verify_in;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate from the file alone");
  verify->add_option("certificate", verify_in)->required();
  verify->add_flag("--verbose,-v", verbose, "Print every check");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Scale a certificate's code");
  transform->add_option("certificate", ta.in)->required();
  auto* sd = transform->add_flag("--selfdual", ta.selfdual, "u = sqrt(v), hull = k");
  auto* lcd = transform->add_flag("--lcd", ta.lcd, "Deterministic search for hull 0");
  auto* ht = transform->add_option("--hull-target", ta.hull_target, "Random scalings until hull = target");
  auto* hist = transform->add_option("--histogram", ta.histogram, "Hull counts over this many random scalings");
  transform->add_option("--budget", ta.budget, "Candidate budget for --lcd")->capture_default_str();
  transform->add_option("--seed", ta.seed, "Sampler seed")->capture_default_str();
  transform->add_option("--max-samples", ta.max_samples, "Sample cap for --hull-target")->capture_default_str();
  transform->add_option("--out,-o", ta.out, "Output path (default stdout)");
  for (auto* a : {sd, lcd, ht, hist})
    for (auto* b : {sd, lcd, ht, hist})
      if (a != b) a->excludes(b);

  std::vector<std::string> eaq_in;
  bool eaq_csv = false;
  auto* eaqecc = app.add_subcommand("eaqecc", "EAQECC parameters from certificates or scaled codes");
  eaqecc->add_option("files", eaq_in)->required();
  eaqecc->add_flag("--csv", eaq_csv, "CSV rows");

  std::string table, format = "csv", search_out;
  std::vector<uint64_t> qs;
  auto* search = app.add_subcommand("search", "Bound, census, probe and lemma tables");
  search->add_option("--table", table)->required()->check(CLI::IsMember({"bounds", "census", "probe", "lemma-max"}));
  search->add_option("--q,--order", qs, "q values, or group orders for lemma-max")->delimiter(',');
  search->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  search->add_option("--out,-o", search_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kExitUsage;
  }

  if (*construct) {
    if (ca.field.empty() && ca.q == 0) {
      std::cerr << "isodual: construct: one of --field or --q is required\n";
      return kExitUsage;
    }
    return cmd_construct(ca);
  }
  if (*verify) return cmd_verify(verify_in, verbose);
  if (*transform) {
    if (!ta.selfdual && !ta.lcd && !ta.hull_target && !ta.histogram) {
      std::cerr << "isodual: transform: one of --selfdual, --lcd, --hull-target or --histogram is required\n";
      return kExitUsage;
    }
    return cmd_transform(ta);
  }
  if (*eaqecc) return cmd_eaqecc(eaq_in, eaq_csv);
  return cmd_search(table, qs, format, search_out);
}
