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

#include "report.hpp"

#include <json.hpp>

#include "error.hpp"
#include "search.hpp"

namespace isodual::report {

using njson = nlohmann::json;

struct Table::Rows {
  std::vector<njson> data;  // one array per row, aligned with columns_
};

TableKind parse_table_kind(const std::string& s) {
  if (s == "bounds") return TableKind::Bounds;
  if (s == "census") return TableKind::Census;
  if (s == "probe") return TableKind::Probe;
  if (s == "lemma-max") return TableKind::LemmaMax;
  throw InvalidArgument("unknown table '" + s + "' (expected bounds, census, probe or lemma-max)");
}

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::Bounds: return "bounds";
    case TableKind::Census: return "census";
    case TableKind::Probe: return "probe";
    case TableKind::LemmaMax: return "lemma-max";
  }
  return "?";
}

Table::Table(TableKind kind) : kind_(kind), rows_(std::make_unique<Rows>()) {
  switch (kind) {
    case TableKind::Bounds:
      columns_ = {"q", "parity_case", "bound_n", "achieved_n", "field", "curve", "construction", "k", "hull"};
      break;
    case TableKind::Census:
      columns_ = {"q", "order", "d1", "d2", "curves", "construction", "max_n"};
      break;
    case TableKind::Probe:
      columns_ = {"q", "curve", "order", "construction", "max_n", "certificates", "within_half_order", "self_dual"};
      break;
    case TableKind::LemmaMax:
      columns_ = {"group", "order", "n", "subsets", "admissible", "counterexamples", "first_counterexample"};
      break;
  }
}

Table::~Table() = default;
Table::Table(Table&&) noexcept = default;
Table& Table::operator=(Table&&) noexcept = default;

std::size_t Table::rows() const { return rows_->data.size(); }

namespace {

njson opt(bool present, njson v) { return present ? std::move(v) : njson(nullptr); }

std::string describe(const search::LemmaCounterexample& c) {
  std::string s = "A={";
  for (std::size_t i = 0; i < c.subset.size(); ++i) s += (i ? "," : "") + std::to_string(c.subset[i]);
  return s + "} g=" + std::to_string(c.g);
}

}  // namespace

void Table::add(std::uint64_t p) {
  auto& out = rows_->data;
  switch (kind_) {
    case TableKind::Bounds:
      for (const auto& r : search::bound_table({p}, true)) {
        const bool w = r.witness.has_value();
        out.push_back(njson::array({r.q, r.parity_case, r.bound_n, opt(r.achieved_n.has_value(), r.achieved_n.value_or(0)),
                                   opt(w, w ? r.witness->field : ""), opt(w, w ? r.witness->curve : ""),
                                   opt(w, w ? r.witness->construction : 0), opt(w, w ? r.witness->k : 0),
                                   opt(w, w ? r.witness->hull : 0)}));
      }
      break;
    case TableKind::Census:
      for (const auto& r : search::census(p))
        out.push_back(njson::array({p, r.order, r.d1, r.d2, r.curves, opt(r.construction != 0, r.construction),
                                   opt(r.construction != 0, r.max_n)}));
      break;
    case TableKind::Probe:
      for (const auto& r : search::max_length_probe(p))
        out.push_back(njson::array({p, r.curve, r.order, opt(r.construction != 0, r.construction),
                                   opt(r.construction != 0, r.max_n), r.certificates, r.within_half_order,
                                   r.self_dual}));
      break;
    case TableKind::LemmaMax: {
      if (p == 0 || p % 2 != 0) throw InvalidArgument("lemma-max needs an even group order, got " + std::to_string(p));
      std::uint64_t n0 = p / 2 + 1;
      if (n0 % 2) ++n0;
      for (const auto& g : search::abelian_groups_of_order(p))
        for (std::uint64_t n = n0; n <= p; n += 2) {
          const auto r = search::lemma_max_search(g, n);
          const bool any = !r.counterexamples.empty();
          out.push_back(njson::array({r.group, p, r.n, r.subsets, r.admissible, r.counterexamples.size(),
                                     opt(any, any ? describe(r.counterexamples.front()) : "")}));
        }
      break;
    }
  }
}

std::string Table::csv() const {
  std::string s;
  for (std::size_t i = 0; i < columns_.size(); ++i) s += (i ? "," : "") + columns_[i];
  s += "\n";
  for (const auto& row : rows_->data) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ",";
      const auto& v = row[i];
      if (v.is_null()) continue;
      if (v.is_string()) {
        const auto t = v.get<std::string>();
        if (t.find_first_of(",\"") != std::string::npos) {
          s += '"';
          for (char c : t) s += (c == '"') ? std::string("\"\"") : std::string(1, c);
          s += '"';
        } else {
          s += t;
        }
      } else {
        s += v.dump();
      }
    }
    s += "\n";
  }
  return s;
}

std::string Table::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows_->data) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  return nlohmann::json{{"table", to_string(kind_)}, {"rows", arr}}.dump(2) + "\n";
}

}  // namespace isodual::report
