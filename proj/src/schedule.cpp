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

#include "readacuity/schedule.hpp"

#include <algorithm>

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity {

std::vector<std::vector<std::size_t>> latin_square(std::size_t k) {
  std::vector<std::size_t> first(k);
  if (k % 2 == 0) {
    // 0, 1, k-1, 2, k-2, ...
    std::size_t low = 1;
    std::size_t high = k - 1;
    for (std::size_t j = 1; j < k; ++j) {
      first[j] = (j % 2 == 1) ? low++ : high--;
    }
  } else {
    for (std::size_t j = 0; j < k; ++j) first[j] = j;
  }
  std::vector<std::vector<std::size_t>> square(k, std::vector<std::size_t>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) square[r][j] = (first[j] + r) % k;
  }
  return square;
}

std::vector<std::vector<Condition>> build_schedule(
    std::size_t participants, const std::vector<Condition>& conditions) {
  if (participants == 0) throw ValidationError("need at least one participant");
  if (conditions.empty()) throw ValidationError("need at least one condition");
  const auto square = latin_square(conditions.size());
  std::vector<std::vector<Condition>> out(participants);
  for (std::size_t p = 0; p < participants; ++p) {
    for (std::size_t index : square[p % conditions.size()]) {
      out[p].push_back(conditions[index]);
    }
  }
  return out;
}

std::string participant_label(std::size_t index, std::size_t participants) {
  const std::size_t width =
      std::max<std::size_t>(2, std::to_string(participants).size());
  std::string digits = std::to_string(index + 1);
  return "P" + std::string(width - std::min(width, digits.size()), '0') +
         digits;
}

std::string schedule_csv(const std::vector<std::vector<Condition>>& schedule) {
  std::string out =
      "participant_id,position,language,display,resolution_level\n";
  for (std::size_t p = 0; p < schedule.size(); ++p) {
    for (std::size_t pos = 0; pos < schedule[p].size(); ++pos) {
      const Condition& c = schedule[p][pos];
      out += csv::join_row(
          {participant_label(p, schedule.size()), std::to_string(pos + 1),
           std::string(to_string(c.language)), std::string(to_string(c.display)),
           c.level ? std::string(to_string(*c.level)) : std::string()});
    }
  }
  return out;
}

}  // namespace readacuity
