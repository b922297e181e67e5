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

#include "readacuity/ssq.hpp"

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity {

namespace {

constexpr std::array<int, 7> kNauseaItems = {1, 6, 7, 8, 9, 15, 16};
constexpr std::array<int, 7> kOculomotorItems = {1, 2, 3, 4, 5, 9, 11};
constexpr std::array<int, 7> kDisorientationItems = {5, 8, 10, 11, 12, 13, 14};

const std::vector<std::string> kScoreColumns = {"nausea", "oculomotor",
                                                "disorientation", "total"};

std::string item_column(std::size_t index) {
  return "item_" + std::to_string(index + 1);
}

int raw_sum(const SsqResponse& r, const std::array<int, 7>& items) {
  int sum = 0;
  for (int item : items) sum += r.ratings[static_cast<std::size_t>(item - 1)];
  return sum;
}

}  // namespace

const std::array<int, 7>& ssq_items(SsqSubscale subscale) {
  switch (subscale) {
    case SsqSubscale::kNausea:
      return kNauseaItems;
    case SsqSubscale::kOculomotor:
      return kOculomotorItems;
    case SsqSubscale::kDisorientation:
      return kDisorientationItems;
  }
  return kNauseaItems;
}

SsqScore score_ssq(const SsqResponse& response) {
  for (std::size_t i = 0; i < kSsqItems; ++i) {
    const int rating = response.ratings[i];
    if (rating < 0 || rating > 3) {
      throw ValidationError(item_column(i) + " must be rated 0..3");
    }
  }
  const int n = raw_sum(response, kNauseaItems);
  const int o = raw_sum(response, kOculomotorItems);
  const int d = raw_sum(response, kDisorientationItems);
  return SsqScore{kNauseaWeight * n, kOculomotorWeight * o,
                  kDisorientationWeight * d, kTotalWeight * (n + o + d)};
}

std::vector<SsqRecord> import_ssq_csv(std::string_view text) {
  const csv::Table table = csv::Table::from_text(text);
  std::vector<std::string> required = {"participant_id", "phase"};
  for (std::size_t i = 0; i < kSsqItems; ++i) required.push_back(item_column(i));
  std::vector<std::string> allowed = required;
  allowed.insert(allowed.end(), kScoreColumns.begin(), kScoreColumns.end());
  table.require_columns(required, allowed);

  std::vector<SsqRecord> out;
  for (const csv::Record& row : table.rows()) {
    SsqRecord record;
    record.participant_id = table.field(row, "participant_id");
    record.phase = table.field(row, "phase");
    if (record.participant_id.empty()) {
      throw ParseError("participant_id is required", row.line);
    }
    for (std::size_t i = 0; i < kSsqItems; ++i) {
      const std::string name = item_column(i);
      const auto rating = csv::parse_int(table.field(row, name), row.line, name);
      if (rating < 0 || rating > 3) {
        throw ParseError(name + " must be rated 0..3", row.line);
      }
      record.response.ratings[i] = static_cast<int>(rating);
    }
    out.push_back(std::move(record));
  }
  return out;
}

std::string export_ssq_csv(const std::vector<SsqRecord>& records) {
  std::vector<std::string> header = {"participant_id", "phase"};
  for (std::size_t i = 0; i < kSsqItems; ++i) header.push_back(item_column(i));
  header.insert(header.end(), kScoreColumns.begin(), kScoreColumns.end());
  std::string out = csv::join_row(header);
  for (const SsqRecord& r : records) {
    const SsqScore s = score_ssq(r.response);
    std::vector<std::string> fields = {r.participant_id, r.phase};
    for (int rating : r.response.ratings) fields.push_back(std::to_string(rating));
    for (double v : {s.nausea, s.oculomotor, s.disorientation, s.total}) {
      fields.push_back(csv::format_sig6(v));
    }
    out += csv::join_row(fields);
  }
  return out;
}

}  // namespace readacuity
