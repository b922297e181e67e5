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

// Simulator Sickness Questionnaire scoring (Kennedy et al., 1993).
//
// Sixteen symptoms rated 0 (none) to 3 (severe). Each symptom loads on one
// or two of the Nausea, Oculomotor and Disorientation subscales:
//
//   item  symptom                    N  O  D
//    1    general discomfort         x  x
//    2    fatigue                       x
//    3    headache                      x
//    4    eyestrain                     x
//    5    difficulty focusing           x  x
//    6    increased salivation       x
//    7    sweating                   x
//    8    nausea                     x     x
//    9    difficulty concentrating   x  x
//   10    fullness of head                 x
//   11    blurred vision                x  x
//   12    dizzy (eyes open)                x
//   13    dizzy (eyes closed)              x
//   14    vertigo                          x
//   15    stomach awareness          x
//   16    burping                    x
//
// Weighted scores: N = 9.54 * raw_N, O = 7.58 * raw_O, D = 13.92 * raw_D,
// Total = 3.74 * (raw_N + raw_O + raw_D).

#ifndef READACUITY_SSQ_HPP_
#define READACUITY_SSQ_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace readacuity {

inline constexpr std::size_t kSsqItems = 16;

inline constexpr double kNauseaWeight = 9.54;
inline constexpr double kOculomotorWeight = 7.58;
inline constexpr double kDisorientationWeight = 13.92;
inline constexpr double kTotalWeight = 3.74;

enum class SsqSubscale { kNausea, kOculomotor, kDisorientation };

// 1-based item numbers per subscale.
const std::array<int, 7>& ssq_items(SsqSubscale subscale);

struct SsqResponse {
  std::array<int, kSsqItems> ratings{};
};

struct SsqScore {
  double nausea = 0.0;
  double oculomotor = 0.0;
  double disorientation = 0.0;
  double total = 0.0;
};

// Throws ValidationError for a rating outside 0..3.
SsqScore score_ssq(const SsqResponse& response);

struct SsqRecord {
  std::string participant_id;
  std::string phase;
  SsqResponse response;
};

// Reads participant_id,phase,item_1..item_16 with optional score columns
// (nausea,oculomotor,disorientation,total), which are ignored and
// recomputed on export. Throws ParseError.
std::vector<SsqRecord> import_ssq_csv(std::string_view text);

// participant_id,phase,item_1..item_16,nausea,oculomotor,disorientation,total
std::string export_ssq_csv(const std::vector<SsqRecord>& records);

}  // namespace readacuity

#endif  // READACUITY_SSQ_HPP_
