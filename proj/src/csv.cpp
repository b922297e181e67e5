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

#include "readacuity/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "readacuity/error.hpp"

namespace readacuity::csv {

std::vector<Record> parse(std::string_view text) {
  std::vector<Record> out;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_record = [&]() {
    const bool blank = current.fields.empty() && field.empty() && !field_started;
    if (!blank) {
      current.fields.push_back(std::move(field));
      out.push_back(std::move(current));
    }
    current = Record{};
    field.clear();
    field_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        current.line = line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", current.line);
  end_record();
  return out;
}

Table Table::from_text(std::string_view text) {
  // Tolerate a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<Record> records = parse(text);
  if (records.empty()) throw ParseError("missing header row", 1);
  Table table;
  table.header_ = std::move(records.front().fields);
  std::set<std::string> seen;
  for (const std::string& name : table.header_) {
    if (!seen.insert(name).second) {
      throw ParseError("duplicate column '" + name + "'", 1);
    }
  }
  table.rows_.assign(std::make_move_iterator(records.begin() + 1),
                     std::make_move_iterator(records.end()));
  for (const Record& row : table.rows_) {
    if (row.fields.size() != table.header_.size()) {
      throw ParseError("expected " + std::to_string(table.header_.size()) +
                           " fields, found " + std::to_string(row.fields.size()),
                       row.line);
    }
  }
  return table;
}

std::optional<std::size_t> Table::column(std::string_view name) const {
  const auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header_.begin());
}

void Table::require_columns(const std::vector<std::string>& required,
                            const std::vector<std::string>& allowed) const {
  for (const std::string& name : required) {
    if (!column(name)) throw ParseError("missing column '" + name + "'", 1);
  }
  if (allowed.empty()) return;
  for (const std::string& name : header_) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      throw ParseError("unknown column '" + name + "'", 1);
    }
  }
}

const std::string& Table::field(const Record& row,
                                std::string_view name) const {
  const auto index = column(name);
  if (!index) throw ParseError("missing column '" + std::string(name) + "'", 1);
  return row.fields.at(*index);
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  out += '\n';
  return out;
}

std::string format_exact(double value) {
  if (value == 0.0) value = 0.0;  // fold -0
  std::array<char, 64> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string format_sig6(double value) {
  if (value == 0.0) value = 0.0;
  std::array<char, 64> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, 6);
  std::string out(buffer.data(), result.ptr);
  if (out == "-0") out = "0";
  return out;
}

std::string format_sig6(std::optional<double> value) {
  return value ? format_sig6(*value) : std::string("NA");
}

double round_sig6(double value) {
  const std::string text = format_sig6(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

double parse_double(std::string_view text, std::size_t row,
                    std::string_view column) {
  double value = 0.0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || result.ec != std::errc() ||
      result.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("column '" + std::string(column) +
                         "': not a number: '" + std::string(text) + "'",
                     row);
  }
  return value;
}

std::int64_t parse_int(std::string_view text, std::size_t row,
                       std::string_view column) {
  std::int64_t value = 0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || result.ec != std::errc() ||
      result.ptr != text.data() + text.size()) {
    throw ParseError("column '" + std::string(column) +
                         "': not an integer: '" + std::string(text) + "'",
                     row);
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace readacuity::csv
