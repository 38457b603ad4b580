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
 * @file report.hpp
 * @brief Search tables with fixed column order, rendered as CSV or JSON.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace isodual::report {

enum class TableKind { Bounds, Census, Probe, LemmaMax };

TableKind parse_table_kind(const std::string& s);
std::string to_string(TableKind k);

class Table {
 public:
  explicit Table(TableKind kind);
  ~Table();
  Table(Table&&) noexcept;
  Table& operator=(Table&&) noexcept;

  TableKind kind() const { return kind_; }
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const;

  /// Appends the rows for one parameter: q for bounds, census and probe;
  /// a group order for lemma-max (every group of that order, every
  /// admissible even n).
  void add(std::uint64_t param);

  /// Header line then one line per row. Empty cells for absent values.
  std::string csv() const;
  /// Array of objects keyed by column name.
  std::string json() const;

 private:
  struct Rows;
  TableKind kind_;
  std::vector<std::string> columns_;
  std::unique_ptr<Rows> rows_;
};

}  // namespace isodual::report
