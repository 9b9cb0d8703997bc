// Copyright 2026 The slecft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace slecft::cli {

enum class ColumnType { kReal, kInteger, kText };

struct Column {
  std::string name;
  ColumnType type = ColumnType::kReal;
};

/// An empty cell (monostate) marks a value that could not be computed; the
/// row then carries the reason in its `error` column.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct ResultTable {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  /// Ordered key/value pairs written as '#'-prefixed header lines.
  std::vector<std::pair<std::string, std::string>> metadata;
  /// Rows whose evaluation failed, or checks that did not pass.
  std::uint64_t n_failures = 0;

  void add_meta(std::string key, std::string value);
  /// Index of a column by name; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

/// Shortest decimal that parses back to exactly `x` ("nan", "inf", "-inf"
/// for non-finite values).
std::string format_real(double x);

/// RFC 4180 field quoting: quoted iff it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

void write_csv(const ResultTable& t, std::ostream& out);
nlohmann::json table_json(const ResultTable& t);

/// A CSV file as written by write_csv: metadata lines, header, raw fields.
struct CsvData {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvData parse_csv(std::istream& in);

}  // namespace slecft::cli
