// Copyright 2026 The readacuity Authors. All Rights Reserved.
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

// Minimal locale-independent CSV reading/writing shared by every file
// format in the toolkit.

#ifndef READACUITY_CSV_HPP_
#define READACUITY_CSV_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace readacuity::csv {

struct Record {
  std::size_t line = 0;  // 1-based physical line where the record starts
  std::vector<std::string> fields;
};

// Splits RFC 4180 text (quoted fields, "" escapes, LF or CRLF endings).
// Blank lines are skipped. Throws ParseError on an unterminated quote.
std::vector<Record> parse(std::string_view text);

// A parsed file whose first record is the header.
class Table {
 public:
  // Throws ParseError when the text is empty or has duplicate columns.
  static Table from_text(std::string_view text);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<Record>& rows() const { return rows_; }
  std::optional<std::size_t> column(std::string_view name) const;

  // Throws ParseError naming the first required column that is absent, or
  // the first header column that is not in `allowed` (when non-empty).
  void require_columns(const std::vector<std::string>& required,
                       const std::vector<std::string>& allowed = {}) const;

  // Field `name` of `row`; throws ParseError when the row is short.
  const std::string& field(const Record& row, std::string_view name) const;

 private:
  std::vector<std::string> header_;
  std::vector<Record> rows_;
};

// Quotes a field only when it contains a comma, quote, or line break.
std::string escape(std::string_view field);
std::string join_row(const std::vector<std::string>& fields);

// Shortest representation that parses back to the identical double.
std::string format_exact(double value);
// Six significant digits, dot decimal separator.
std::string format_sig6(double value);
// nullopt prints as "NA".
std::string format_sig6(std::optional<double> value);
// Rounds to six significant digits numerically (value of format_sig6).
double round_sig6(double value);

// Strict parses of the whole field; throw ParseError(row) on failure.
double parse_double(std::string_view text, std::size_t row,
                    std::string_view column);
std::int64_t parse_int(std::string_view text, std::size_t row,
                       std::string_view column);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace readacuity::csv

#endif  // READACUITY_CSV_HPP_
