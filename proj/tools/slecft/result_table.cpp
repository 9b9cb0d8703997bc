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

#include "result_table.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace slecft::cli {
namespace {

std::string type_name(ColumnType t) {
  switch (t) {
    case ColumnType::kReal: return "real";
    case ColumnType::kInteger: return "integer";
    default: return "text";
  }
}

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return "";
}

nlohmann::json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_real(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

// Splits one CSV record, honouring quotes; may consume further lines when a
// quoted field contains a newline.
std::vector<std::string> read_record(std::string line, std::istream& in) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0;; ++i) {
    if (i == line.size()) {
      if (quoted && std::getline(in, line)) {
        field += '\n';
        i = static_cast<std::size_t>(-1);
        continue;
      }
      if (quoted) throw std::runtime_error("csv: unterminated quoted field");
      break;
    }
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

void ResultTable::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

std::size_t ResultTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return i;
  throw std::out_of_range("no column named '" + name + "'");
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

void write_csv(const ResultTable& t, std::ostream& out) {
  for (const auto& [k, v] : t.metadata) {
    std::string value = v;
    for (char& ch : value)
      if (ch == '\n' || ch == '\r') ch = ' ';
    out << "# " << k << ": " << value << '\n';
  }
  std::string types;
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    types += (i ? "," : "") + t.columns[i].name + ":" + type_name(t.columns[i].type);
  out << "# columns: " << types << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << csv_field(t.columns[i].name);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
    out << '\n';
  }
}

nlohmann::json table_json(const ResultTable& t) {
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : t.metadata) meta[k] = v;
  nlohmann::json cols = nlohmann::json::array();
  for (const Column& c : t.columns) cols.push_back({{"name", c.name}, {"type", type_name(c.type)}});
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      r[t.columns[i].name] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  return {{"metadata", meta}, {"columns", cols}, {"rows", rows}};
}

CsvData parse_csv(std::istream& in) {
  CsvData d;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!have_header && !line.empty() && line[0] == '#') {
      const std::size_t colon = line.find(": ");
      if (line.size() > 2 && colon != std::string::npos)
        d.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    if (!have_header) {
      d.header = read_record(line, in);
      have_header = true;
      continue;
    }
    d.rows.push_back(read_record(line, in));
  }
  return d;
}

}  // namespace slecft::cli
