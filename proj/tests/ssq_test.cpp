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

#include <random>

#include <gtest/gtest.h>

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity {
namespace {

SsqResponse uniform(int rating) {
  SsqResponse r;
  r.ratings.fill(rating);
  return r;
}

TEST(Ssq, AllZero) {
  const SsqScore s = score_ssq(uniform(0));
  EXPECT_EQ(s.nausea, 0.0);
  EXPECT_EQ(s.oculomotor, 0.0);
  EXPECT_EQ(s.disorientation, 0.0);
  EXPECT_EQ(s.total, 0.0);
}

TEST(Ssq, SingleNauseaOnlyItem) {
  // Items 6, 7, 15 and 16 load on nausea alone.
  for (int item : {6, 7, 15, 16}) {
    SsqResponse r;
    r.ratings[static_cast<std::size_t>(item - 1)] = 1;
    const SsqScore s = score_ssq(r);
    EXPECT_DOUBLE_EQ(s.nausea, 9.54);
    EXPECT_EQ(s.oculomotor, 0.0);
    EXPECT_EQ(s.disorientation, 0.0);
    EXPECT_DOUBLE_EQ(s.total, 3.74);
  }
}

TEST(Ssq, SharedItemCountsTwice) {
  SsqResponse r;
  r.ratings[0] = 2;  // general discomfort: nausea and oculomotor
  const SsqScore s = score_ssq(r);
  EXPECT_DOUBLE_EQ(s.nausea, 19.08);
  EXPECT_DOUBLE_EQ(s.oculomotor, 15.16);
  EXPECT_EQ(s.disorientation, 0.0);
  EXPECT_DOUBLE_EQ(s.total, 14.96);
}

TEST(Ssq, AllMax) {
  const SsqScore s = score_ssq(uniform(3));
  EXPECT_NEAR(s.nausea, 200.34, 1e-9);
  EXPECT_NEAR(s.oculomotor, 159.18, 1e-9);
  EXPECT_NEAR(s.disorientation, 292.32, 1e-9);
  EXPECT_NEAR(s.total, 235.62, 1e-9);
}

TEST(Ssq, ItemMapCoversEveryItem) {
  std::array<int, kSsqItems> loads{};
  for (SsqSubscale sub : {SsqSubscale::kNausea, SsqSubscale::kOculomotor,
                          SsqSubscale::kDisorientation}) {
    for (int item : ssq_items(sub)) ++loads[static_cast<std::size_t>(item - 1)];
  }
  for (int n : loads) {
    EXPECT_GE(n, 1);
    EXPECT_LE(n, 2);
  }
}

TEST(Ssq, RejectsOutOfRangeRatings) {
  SsqResponse r;
  r.ratings[4] = 4;
  EXPECT_THROW(score_ssq(r), ValidationError);
  r.ratings[4] = -1;
  EXPECT_THROW(score_ssq(r), ValidationError);
}

TEST(Ssq, MonotoneInEveryItem) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> rating(0, 3);
  std::uniform_int_distribution<std::size_t> item(0, kSsqItems - 1);
  for (int i = 0; i < 2000; ++i) {
    SsqResponse low;
    for (int& v : low.ratings) v = rating(rng);
    const std::size_t j = item(rng);
    if (low.ratings[j] == 3) low.ratings[j] = 2;
    SsqResponse high = low;
    high.ratings[j] += 1;
    const SsqScore a = score_ssq(low);
    const SsqScore b = score_ssq(high);
    EXPECT_LE(a.nausea, b.nausea);
    EXPECT_LE(a.oculomotor, b.oculomotor);
    EXPECT_LE(a.disorientation, b.disorientation);
    EXPECT_LT(a.total, b.total);
  }
}

TEST(SsqCsv, RoundTripAndScoreColumns) {
  std::vector<SsqRecord> records = {{"P01", "VR_A", uniform(1)},
                                    {"P02", "VST_D", uniform(3)}};
  const std::string text = export_ssq_csv(records);
  const auto rows = csv::parse(text);
  ASSERT_EQ(rows.size(), 3u);
  ASSERT_EQ(rows[0].fields.size(), 22u);
  EXPECT_EQ(rows[0].fields[2], "item_1");
  EXPECT_EQ(rows[0].fields[21], "total");
  EXPECT_EQ(rows[2].fields[21], "235.62");
  EXPECT_EQ(rows[1].fields[18], "66.78");

  const auto back = import_ssq_csv(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].participant_id, "P02");
  EXPECT_EQ(back[1].phase, "VST_D");
  EXPECT_EQ(back[1].response.ratings, records[1].response.ratings);
}

TEST(SsqCsv, ScoreColumnsOptional) {
  std::string text = "participant_id,phase";
  for (int i = 1; i <= 16; ++i) text += ",item_" + std::to_string(i);
  text += "\nP01,baseline";
  for (int i = 0; i < 16; ++i) text += ",0";
  text += "\n";
  EXPECT_EQ(import_ssq_csv(text).size(), 1u);
}

TEST(SsqCsv, BadRatingReportsRow) {
  std::string text = "participant_id,phase";
  for (int i = 1; i <= 16; ++i) text += ",item_" + std::to_string(i);
  text += "\nP01,VR_A";
  for (int i = 0; i < 16; ++i) text += i == 7 ? ",5" : ",1";
  text += "\n";
  try {
    import_ssq_csv(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
  }
}

}  // namespace
}  // namespace readacuity
