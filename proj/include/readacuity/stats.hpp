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

// Nonparametric within-subjects statistics: Friedman test with Kendall's W,
// Wilcoxon signed-rank test (exact or normal approximation) and Bonferroni
// adjustment.

#ifndef READACUITY_STATS_HPP_
#define READACUITY_STATS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace readacuity::stats {

// Upper tail Q(a, x) of the regularized incomplete gamma function
// (series below a + 1, Lentz continued fraction above).
double regularized_gamma_q(double a, double x);

// P(X >= x) for a chi-square variable with `df` degrees of freedom.
double chi_square_upper_tail(double x, double df);

// Standard normal upper tail P(Z >= z).
double normal_upper_tail(double z);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// N participants (rows) x k conditions (columns), no missing cells.
class RepeatedMeasures {
 public:
  // Throws ValidationError for N < 2, k < 2, ragged rows, non-finite cells,
  // or a label count that differs from k (labels may be empty).
  RepeatedMeasures(std::vector<std::vector<double>> rows,
                   std::vector<std::string> labels = {});

  std::size_t participants() const { return rows_.size(); }
  std::size_t conditions() const { return rows_.front().size(); }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<double> column(std::size_t j) const;

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<std::string> labels_;
};

struct FriedmanResult {
  double chi2 = 0.0;
  int df = 0;
  double p = 1.0;
  double kendall_w = 0.0;
};

inline double kendall_w(double chi2, std::size_t participants,
                        std::size_t conditions) {
  return chi2 / (static_cast<double>(participants) *
                 static_cast<double>(conditions - 1));
}

// Within-row average ranks with the usual tie correction. A matrix whose
// rows are all constant yields chi2 = 0, p = 1.
FriedmanResult friedman(const RepeatedMeasures& data);

enum class WilcoxonMode {
  kAuto,  // exact when n_effective <= kExactThreshold
  kExact,
  kNormalApprox,
};

enum class ZeroHandling {
  kDrop,   // discard zero differences before ranking (Wilcoxon)
  kPratt,  // rank zeros with the rest, then leave them out of the sums
};

inline constexpr std::size_t kExactThreshold = 25;
// Largest n for which the exact null distribution is tabulated.
inline constexpr std::size_t kExactLimit = 62;

struct WilcoxonOptions {
  WilcoxonMode mode = WilcoxonMode::kAuto;
  ZeroHandling zeros = ZeroHandling::kDrop;
};

struct WilcoxonResult {
  double w_stat = 0.0;  // min(W+, W-)
  double w_plus = 0.0;
  double w_minus = 0.0;
  double p_raw = 1.0;
  double p_adjusted = 1.0;  // equals p_raw until bonferroni is applied
  std::size_t n_effective = 0;
  bool exact = false;
  bool degenerate = false;  // every difference was zero
};

// Two-sided test on the paired differences x - y. Exact mode counts the
// sign assignments whose min(W+, W-) is at most the observed one, out of
// 2^n. Normal mode uses the tie-corrected variance and a 0.5 continuity
// correction. Throws ValidationError for unequal or empty inputs and
// DomainError for an exact request above kExactLimit.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y,
                                    const WilcoxonOptions& options = {});

// min(1, m * p) for each p. Throws DomainError for p outside [0, 1] or
// m smaller than the number of p-values.
std::vector<double> bonferroni(std::span<const double> p_values,
                               std::size_t comparisons);

// "***" below .001, "**" below .01, "*" below .05, otherwise "ns".
std::string_view significance_stars(double p_adjusted);

struct PairwiseResult {
  std::size_t first = 0;
  std::size_t second = 0;
  WilcoxonResult test;
};

// All k(k-1)/2 column pairs in (0,1), (0,2), ... order, Bonferroni
// adjusted with m = `comparisons` (0 means the number of pairs).
std::vector<PairwiseResult> pairwise_wilcoxon(const RepeatedMeasures& data,
                                              const WilcoxonOptions& options,
                                              std::size_t comparisons = 0);

}  // namespace readacuity::stats

#endif  // READACUITY_STATS_HPP_
