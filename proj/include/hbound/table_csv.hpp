// Copyright 2026 The hbound Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal reader for the numeric reference tables under data/reference: a header
// row, then comma-separated rows whose first field is the integer k. Empty
// cells are missing values.

#ifndef HBOUND_TABLE_CSV_HPP_
#define HBOUND_TABLE_CSV_HPP_

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbound/error.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

struct CsvTable {
  std::vector<std::string> columns;  // excluding the leading "k"
  struct Row {
    int k = 0;
    std::vector<std::optional<double>> values;
    std::vector<std::string> text;  // as printed, for rounding diagnostics
  };
  std::vector<Row> rows;

  int column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {
inline std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto c = line.find(',', start);
    out.emplace_back(trim(line.substr(start, c == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : c - start)));
    if (c == std::string_view::npos) break;
    start = c + 1;
  }
  return out;
}
}  // namespace detail

inline CsvTable parse_table_csv(std::string_view text) {
  CsvTable t;
  std::size_t pos = 0, line_no = 0;
  bool header = true;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    auto fields = detail::split_commas(line);
    if (header) {
      if (fields.empty() || fields[0] != "k")
        throw ParseError(line_no, "table header must start with 'k'");
      t.columns.assign(fields.begin() + 1, fields.end());
      header = false;
      continue;
    }
    if (fields.size() != t.columns.size() + 1)
      throw ParseError(line_no, "expected " +
                                    std::to_string(t.columns.size() + 1) +
                                    " fields, got " +
                                    std::to_string(fields.size()));
    CsvTable::Row row;
    char* end = nullptr;
    row.k = static_cast<int>(std::strtol(fields[0].c_str(), &end, 10));
    if (fields[0].empty() || *end != '\0')
      throw ParseError(line_no, "bad k '" + fields[0] + "'");
    for (std::size_t i = 1; i < fields.size(); ++i) {
      row.text.push_back(fields[i]);
      if (fields[i].empty()) {
        row.values.emplace_back();
        continue;
      }
      const double v = std::strtod(fields[i].c_str(), &end);
      if (*end != '\0')
        throw ParseError(line_no, "bad number '" + fields[i] + "'");
      row.values.emplace_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (header) throw ParseError(0, "empty table");
  return t;
}

}  // namespace hbound

#endif  // HBOUND_TABLE_CSV_HPP_
