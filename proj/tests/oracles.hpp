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

// Brute-force reference computations and random generators used by the
// unit and acceptance suites. Nothing here calls into the code paths it is
// used to check.

#ifndef READACUITY_TESTS_ORACLES_HPP_
#define READACUITY_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "readacuity/condition.hpp"
#include "readacuity/metrics.hpp"
#include "readacuity/session.hpp"

namespace readacuity::oracle {

// Ranks by counting: rank(v) = #(< v) + (#(== v) + 1) / 2.
inline std::vector<double> counting_ranks(const std::vector<double>& values) {
  std::vector<double> ranks;
  for (double v : values) {
    double less = 0.0;
    double equal = 0.0;
    for (double w : values) {
      if (w < v) less += 1.0;
      if (w == v) equal += 1.0;
    }
    ranks.push_back(less + (equal + 1.0) / 2.0);
  }
  return ranks;
}

// Two-sided exact Wilcoxon p by visiting every one of the 2^n sign patterns
// of the non-zero |differences| and counting those whose min(W+, W-) is at
// most the observed one.
inline double wilcoxon_enumeration_p(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  std::vector<double> magnitudes;
  std::vector<bool> positive;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d == 0.0) continue;
    magnitudes.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  const std::size_t n = magnitudes.size();
  if (n == 0) return 1.0;
  const std::vector<double> ranks = counting_ranks(magnitudes);
  double total = 0.0;
  double observed_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += ranks[i];
    if (positive[i]) observed_plus += ranks[i];
  }
  const double observed = std::min(observed_plus, total - observed_plus);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double plus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) plus += ranks[i];
    }
    // Half-integer rank sums are exact in binary floating point.
    if (std::min(plus, total - plus) <= observed) ++count;
  }
  return std::ldexp(static_cast<double>(count), -static_cast<int>(n));
}

// min{ S : RS(S) >= p * mrs } by scanning every point.
inline std::optional<double> cps_scan(const std::vector<CurvePoint>& points,
                                      double p, double mrs) {
  std::optional<double> best;
  for (const CurvePoint& pt : points) {
    if (pt.wpm >= p * mrs) {
      if (!best || pt.size.logmar < *best) best = pt.size.logmar;
    }
  }
  return best;
}

// Smallest size with e < n, plus 0.01 * e there, by scanning every trial.
inline std::optional<double> ra_scan(const std::vector<TrialRecord>& trials) {
  std::optional<double> best_size;
  int best_errors = 0;
  for (const TrialRecord& t : trials) {
    if (t.errors >= t.word_count) continue;
    if (!best_size || t.size.logmar < *best_size) {
      best_size = t.size.logmar;
      best_errors = t.errors;
    }
  }
  if (!best_size) return std::nullopt;
  return *best_size + 0.01 * best_errors;
}

// Textbook Friedman statistic from rank sums, no ties.
inline double friedman_from_rank_sums(const std::vector<double>& rank_sums,
                                      double n, double k) {
  double sum_sq = 0.0;
  for (double r : rank_sums) sum_sq += r * r;
  return 12.0 / (n * k * (k + 1.0)) * sum_sq - 3.0 * n * (k + 1.0);
}

// A random protocol session: a 16-sentence descending run from 1.0 logMAR
// with random durations and error tallies, stopped at the first fully
// missed sentence.
inline Session random_session(std::mt19937_64& rng, int index) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> level(0, 3);
  std::uniform_int_distribution<std::int64_t> duration_ms(500, 15000);
  std::uniform_int_distribution<std::int64_t> gap_ms(0, 3000);
  std::uniform_real_distribution<double> distance(25.0, 80.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Session s;
  s.participant_id = "P" + std::to_string(index);
  const Language lang = coin(rng) ? Language::kEN : Language::kCN;
  s.condition = Condition{lang, coin(rng) ? Display::kVR : Display::kVST,
                          kAllLevels[static_cast<std::size_t>(level(rng))]};
  s.viewing_distance = ViewingDistance(std::round(distance(rng) * 10.0) / 10.0);
  const int n = lang == Language::kEN ? 10 : 12;
  std::int64_t clock = 1'700'000'000'000 + static_cast<std::int64_t>(index) * 1000;
  for (int i = 0; i < 16; ++i) {
    // Errors become likelier as size shrinks.
    const double difficulty = static_cast<double>(i) / 15.0;
    std::binomial_distribution<int> errors(n, std::min(1.0, difficulty * difficulty * unit(rng) * 1.6));
    TrialRecord t;
    t.sentence_id = "S" + std::to_string(i + 1);
    t.size = PrintSize{1.0 - 0.1 * i};
    t.word_count = n;
    t.errors = errors(rng);
    clock += gap_ms(rng);
    t.start_ts_ms = clock;
    clock += duration_ms(rng);
    t.end_ts_ms = clock;
    s.trials.push_back(t);
    if (t.errors == n) {
      s.stopped_early = true;
      break;
    }
  }
  return s;
}

// Random curve of 1..16 points in 0.1 steps from a random top size.
inline std::vector<CurvePoint> random_curve_points(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(1, 16);
  std::uniform_int_distribution<int> top(5, 13);
  std::uniform_real_distribution<double> speed(0.0, 260.0);
  std::uniform_int_distribution<int> zero_chance(0, 9);
  std::vector<CurvePoint> points;
  const int n = length(rng);
  const double start = top(rng) / 10.0;
  for (int i = 0; i < n; ++i) {
    const double wpm = zero_chance(rng) == 0 ? 0.0 : speed(rng);
    points.push_back({PrintSize{start - 0.1 * i}, wpm});
  }
  return points;
}

}  // namespace readacuity::oracle

#endif  // READACUITY_TESTS_ORACLES_HPP_
