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

#include "readacuity/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "readacuity/error.hpp"

namespace readacuity::stats {

namespace {

constexpr int kMaxIterations = 1000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// P(a, x) by its power series; converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by modified Lentz evaluation of its continued fraction.
double gamma_q_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Sum of (t^3 - t) over groups of tied values.
double tie_term(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    term += t * t * t - t;
    i = j;
  }
  return term;
}

// Counts sign assignments (out of 2^n) whose smaller signed-rank sum is at
// most `observed_doubled`. Ranks are passed doubled so ties stay integral.
std::uint64_t exact_tail_count(std::span<const std::int64_t> doubled_ranks,
                               std::int64_t observed_doubled) {
  const std::int64_t total =
      std::accumulate(doubled_ranks.begin(), doubled_ranks.end(),
                      std::int64_t{0});
  // ways[s]: number of subsets (positive signs) with doubled W+ == s.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  std::int64_t reach = 0;
  for (std::int64_t r : doubled_ranks) {
    for (std::int64_t s = reach; s >= 0; --s) {
      ways[static_cast<std::size_t>(s + r)] += ways[static_cast<std::size_t>(s)];
    }
    reach += r;
  }
  std::uint64_t count = 0;
  for (std::int64_t s = 0; s <= total; ++s) {
    if (std::min(s, total - s) <= observed_doubled) {
      count += ways[static_cast<std::size_t>(s)];
    }
  }
  return count;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || std::isnan(x)) {
    throw DomainError("incomplete gamma needs a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return std::clamp(1.0 - gamma_p_series(a, x), 0.0, 1.0);
  return std::clamp(gamma_q_continued_fraction(a, x), 0.0, 1.0);
}

double chi_square_upper_tail(double x, double df) {
  if (!(df > 0.0)) throw DomainError("chi-square needs df > 0");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(df / 2.0, x / 2.0);
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Ranks i+1 .. j share their mean.
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t m = i; m < j; ++m) ranks[order[m]] = shared;
    i = j;
  }
  return ranks;
}

RepeatedMeasures::RepeatedMeasures(std::vector<std::vector<double>> rows,
                                   std::vector<std::string> labels)
    : rows_(std::move(rows)), labels_(std::move(labels)) {
  if (rows_.size() < 2) throw ValidationError("need at least two participants");
  const std::size_t k = rows_.front().size();
  if (k < 2) throw ValidationError("need at least two conditions");
  for (const auto& row : rows_) {
    if (row.size() != k) throw ValidationError("ragged repeated-measures matrix");
    for (double v : row) {
      if (!std::isfinite(v)) throw ValidationError("missing or non-finite cell");
    }
  }
  if (!labels_.empty() && labels_.size() != k) {
    throw ValidationError("one label per condition");
  }
}

std::vector<double> RepeatedMeasures::column(std::size_t j) const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.at(j));
  return out;
}

FriedmanResult friedman(const RepeatedMeasures& data) {
  const std::size_t n = data.participants();
  const std::size_t k = data.conditions();
  std::vector<double> rank_sums(k, 0.0);
  double ties = 0.0;
  for (const auto& row : data.rows()) {
    const std::vector<double> ranks = average_ranks(row);
    for (std::size_t j = 0; j < k; ++j) rank_sums[j] += ranks[j];
    ties += tie_term(row);
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  double sum_sq = 0.0;
  for (double r : rank_sums) sum_sq += r * r;
  const double uncorrected =
      12.0 * sum_sq / (nd * kd * (kd + 1.0)) - 3.0 * nd * (kd + 1.0);
  const double correction = 1.0 - ties / (nd * kd * (kd * kd - 1.0));

  FriedmanResult result;
  result.df = static_cast<int>(k) - 1;
  if (correction <= 1e-12) return result;  // every row constant
  result.chi2 = std::max(0.0, uncorrected / correction);
  result.p = chi_square_upper_tail(result.chi2, result.df);
  result.kendall_w = kendall_w(result.chi2, n, k);
  return result;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y,
                                    const WilcoxonOptions& options) {
  if (x.size() != y.size()) throw ValidationError("paired samples differ in length");
  if (x.empty()) throw ValidationError("paired samples are empty");

  std::vector<double> diffs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (!std::isfinite(d)) throw ValidationError("non-finite paired value");
    if (d != 0.0 || options.zeros == ZeroHandling::kPratt) diffs.push_back(d);
  }
  std::vector<double> magnitudes(diffs.size());
  std::transform(diffs.begin(), diffs.end(), magnitudes.begin(),
                 [](double d) { return std::abs(d); });
  const std::vector<double> ranks = average_ranks(magnitudes);

  WilcoxonResult result;
  std::vector<std::int64_t> doubled;
  double mean = 0.0;
  double variance = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] == 0.0) continue;
    if (diffs[i] > 0.0) {
      result.w_plus += ranks[i];
    } else {
      result.w_minus += ranks[i];
    }
    doubled.push_back(std::llround(2.0 * ranks[i]));
    mean += ranks[i] / 2.0;
    variance += ranks[i] * ranks[i] / 4.0;
  }
  result.n_effective = doubled.size();
  result.w_stat = std::min(result.w_plus, result.w_minus);
  if (result.n_effective == 0) {
    result.degenerate = true;
    return result;
  }

  const bool exact =
      options.mode == WilcoxonMode::kExact ||
      (options.mode == WilcoxonMode::kAuto && result.n_effective <= kExactThreshold);
  if (exact) {
    if (result.n_effective > kExactLimit) {
      throw DomainError("exact Wilcoxon supports at most 62 non-zero pairs");
    }
    const std::uint64_t count =
        exact_tail_count(doubled, std::llround(2.0 * result.w_stat));
    result.p_raw = std::ldexp(static_cast<double>(count),
                              -static_cast<int>(result.n_effective));
    result.exact = true;
  } else {
    if (variance <= 0.0) {
      result.p_raw = 1.0;
    } else {
      const double z = std::max(
          0.0, (std::abs(result.w_plus - mean) - 0.5) / std::sqrt(variance));
      result.p_raw = std::min(1.0, 2.0 * normal_upper_tail(z));
    }
  }
  result.p_adjusted = result.p_raw;
  return result;
}

std::vector<double> bonferroni(std::span<const double> p_values,
                               std::size_t comparisons) {
  if (comparisons < p_values.size()) {
    throw DomainError("Bonferroni m is smaller than the number of tests");
  }
  std::vector<double> out;
  out.reserve(p_values.size());
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p-value outside [0, 1]");
    out.push_back(std::min(1.0, static_cast<double>(comparisons) * p));
  }
  return out;
}

std::string_view significance_stars(double p_adjusted) {
  if (p_adjusted < 0.001) return "***";
  if (p_adjusted < 0.01) return "**";
  if (p_adjusted < 0.05) return "*";
  return "ns";
}

std::vector<PairwiseResult> pairwise_wilcoxon(const RepeatedMeasures& data,
                                              const WilcoxonOptions& options,
                                              std::size_t comparisons) {
  const std::size_t k = data.conditions();
  std::vector<PairwiseResult> out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto a = data.column(i);
      const auto b = data.column(j);
      out.push_back({i, j, wilcoxon_signed_rank(a, b, options)});
    }
  }
  std::vector<double> raw;
  for (const auto& r : out) raw.push_back(r.test.p_raw);
  const auto adjusted = bonferroni(raw, comparisons == 0 ? out.size() : comparisons);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].test.p_adjusted = adjusted[i];
  return out;
}

}  // namespace readacuity::stats
