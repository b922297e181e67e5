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
#include <array>
#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "readacuity/error.hpp"

namespace readacuity::stats {
namespace {

TEST(IncompleteGamma, MatchesBoost) {
  for (double a : {0.5, 1.0, 1.5, 2.0, 3.0, 7.5, 20.0, 60.0}) {
    for (double x : {1e-6, 0.01, 0.3, 1.0, 2.5, 5.0, 10.0, 30.0, 80.0, 150.0}) {
      const double want = boost::math::gamma_q(a, x);
      EXPECT_NEAR(regularized_gamma_q(a, x), want, 1e-10) << a << " " << x;
    }
  }
}

TEST(IncompleteGamma, ChiSquareTable) {
  // Upper 5% and 1% points for df = 1 and 3.
  EXPECT_NEAR(chi_square_upper_tail(3.841459, 1), 0.05, 1e-7);
  EXPECT_NEAR(chi_square_upper_tail(7.814728, 3), 0.05, 1e-7);
  EXPECT_NEAR(chi_square_upper_tail(11.344867, 3), 0.01, 1e-7);
  EXPECT_EQ(chi_square_upper_tail(0.0, 3), 1.0);
  EXPECT_THROW(regularized_gamma_q(0.0, 1.0), DomainError);
  EXPECT_THROW(chi_square_upper_tail(1.0, 0.0), DomainError);
}

TEST(Ranks, AverageRanksMatchCounting) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> v(0, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> values(12);
    for (double& x : values) x = v(rng);
    EXPECT_EQ(average_ranks(values), oracle::counting_ranks(values));
  }
}

TEST(Friedman, IdenticalColumns) {
  const RepeatedMeasures data({{1, 1, 1}, {2, 2, 2}, {5, 5, 5}});
  const FriedmanResult r = friedman(data);
  EXPECT_EQ(r.chi2, 0.0);
  EXPECT_EQ(r.kendall_w, 0.0);
  EXPECT_EQ(r.p, 1.0);
  EXPECT_EQ(r.df, 2);
}

TEST(Friedman, StrictOrderingThreeByThree) {
  const RepeatedMeasures data({{1, 2, 3}, {10, 20, 30}, {0.1, 0.5, 0.9}});
  const FriedmanResult r = friedman(data);
  EXPECT_DOUBLE_EQ(r.chi2, 6.0);
  EXPECT_NEAR(r.p, std::exp(-3.0), 1e-12);
  EXPECT_NEAR(r.p, 0.0498, 1e-4);
  EXPECT_DOUBLE_EQ(r.kendall_w, 1.0);

  // Permutation distribution over all (3!)^3 rank configurations.
  std::array<std::array<double, 3>, 6> perms;
  std::array<double, 3> base = {1, 2, 3};
  for (std::size_t i = 0; i < 6; ++i) {
    perms[i] = base;
    std::next_permutation(base.begin(), base.end());
  }
  int at_least = 0;
  int total = 0;
  for (const auto& p : perms) {
    for (const auto& q : perms) {
      for (const auto& s : perms) {
        const std::vector<double> sums = {p[0] + q[0] + s[0], p[1] + q[1] + s[1],
                                          p[2] + q[2] + s[2]};
        const double chi2 = oracle::friedman_from_rank_sums(sums, 3, 3);
        const RepeatedMeasures m({{p[0], p[1], p[2]},
                                  {q[0], q[1], q[2]},
                                  {s[0], s[1], s[2]}});
        EXPECT_NEAR(friedman(m).chi2, chi2, 1e-12);
        ++total;
        if (chi2 >= 6.0 - 1e-12) ++at_least;
      }
    }
  }
  EXPECT_EQ(total, 216);
  EXPECT_EQ(at_least, 6);
  // The asymptotic tail is conservative relative to the permutation one here.
  EXPECT_GT(r.p, static_cast<double>(at_least) / total);
}

TEST(Friedman, TieCorrection) {
  // Two rows with a tie: ranks {1.5, 1.5, 3} and {1, 2, 3}.
  const RepeatedMeasures data({{4, 4, 9}, {1, 2, 3}});
  const FriedmanResult r = friedman(data);
  // Rank sums 2.5, 3.5, 6: uncorrected 12/24 * 54.5 - 24 = 3.25,
  // correction 1 - 6/48.
  EXPECT_NEAR(r.chi2, 3.25 / (1.0 - 6.0 / 48.0), 1e-12);
}

TEST(Friedman, InvariantUnderMonotoneTransform) {
  std::mt19937_64 rng(62);
  std::normal_distribution<double> z(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> rows(16, std::vector<double>(4));
    std::vector<std::vector<double>> moved = rows;
    for (std::size_t i = 0; i < 16; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        rows[i][j] = std::round(z(rng) * 3.0) / 3.0 + 0.1 * j;
        moved[i][j] = std::exp(2.0 * rows[i][j]) + 7.0;
      }
    }
    const FriedmanResult a = friedman(RepeatedMeasures(rows));
    const FriedmanResult b = friedman(RepeatedMeasures(moved));
    EXPECT_EQ(a.chi2, b.chi2);
    EXPECT_EQ(a.p, b.p);
  }
}

TEST(Friedman, KendallIdentityOnOutputs) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> rows(16, std::vector<double>(4));
    for (auto& row : rows) {
      for (double& v : row) v = u(rng);
    }
    const FriedmanResult r = friedman(RepeatedMeasures(rows));
    EXPECT_EQ(r.kendall_w, r.chi2 / (16.0 * 3.0));
    EXPECT_GE(r.kendall_w, 0.0);
    EXPECT_LE(r.kendall_w, 1.0 + 1e-12);
  }
}

TEST(Friedman, PublishedChiSquareAndW) {
  struct Row {
    double chi2;
    double w;
  };
  // Reading metrics (VST then VR), then SSQ subscales (VST then VR).
  const Row rows[] = {
      {15.4, 0.320}, {18.7, 0.389}, {7.9, 0.164},  {9.2, 0.192},
      {8.0, 0.167},  {9.5, 0.198},  {15.6, 0.324}, {21.4, 0.446},
      {37.3, 0.778}, {39.2, 0.817}, {36.1, 0.752}, {40.2, 0.838},
      {18.5, 0.386}, {2.5, 0.052},  {44.4, 0.926}, {45.5, 0.947},
      {11.2, 0.233}, {10.7, 0.223}, {5.3, 0.111},  {11.2, 0.232},
      {20.6, 0.429}, {28.8, 0.600}, {33.0, 0.688}, {32.2, 0.671},
  };
  for (const Row& r : rows) {
    EXPECT_NEAR(kendall_w(r.chi2, 16, 4), r.w, 0.002) << r.chi2;
  }
}

TEST(RepeatedMeasures, Validation) {
  using Rows = std::vector<std::vector<double>>;
  EXPECT_THROW(RepeatedMeasures(Rows{{1, 2}}), ValidationError);
  EXPECT_THROW(RepeatedMeasures(Rows{{1}, {2}}), ValidationError);
  EXPECT_THROW(RepeatedMeasures(Rows{{1, 2}, {1, 2, 3}}), ValidationError);
  EXPECT_THROW(RepeatedMeasures(Rows{{1, NAN}, {1, 2}}), ValidationError);
  EXPECT_THROW(RepeatedMeasures(Rows{{1, 2}, {3, 4}}, {"A"}), ValidationError);
}

TEST(Wilcoxon, IdenticalSamplesAreDegenerate) {
  const std::vector<double> x = {1, 2, 3, 4};
  const WilcoxonResult r = wilcoxon_signed_rank(x, x);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.p_raw, 1.0);
  EXPECT_EQ(r.n_effective, 0u);
}

TEST(Wilcoxon, ThreePositiveDifferences) {
  const std::vector<double> x = {1, 2, 3};
  const std::vector<double> y = {0, 0, 0};
  const WilcoxonResult r = wilcoxon_signed_rank(x, y);
  EXPECT_EQ(r.w_stat, 0.0);
  EXPECT_EQ(r.w_plus, 6.0);
  EXPECT_EQ(r.p_raw, 0.25);
  EXPECT_TRUE(r.exact);
}

TEST(Wilcoxon, SixteenOneSided) {
  std::vector<double> x(16);
  std::vector<double> y(16, 0.0);
  for (int i = 0; i < 16; ++i) x[static_cast<std::size_t>(i)] = -(i + 1.0);
  const WilcoxonResult r = wilcoxon_signed_rank(x, y);
  EXPECT_EQ(r.w_stat, 0.0);
  EXPECT_EQ(r.p_raw, 2.0 / 65536.0);
  EXPECT_TRUE(r.exact);
}

TEST(Wilcoxon, ExactMatchesEnumeration) {
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<std::size_t> n(1, 14);
  std::uniform_int_distribution<int> v(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = n(rng);
    std::vector<double> x(size);
    std::vector<double> y(size);
    for (std::size_t i = 0; i < size; ++i) {
      x[i] = v(rng) * 0.5;
      y[i] = v(rng) * 0.5;
    }
    WilcoxonOptions exact;
    exact.mode = WilcoxonMode::kExact;
    const WilcoxonResult r = wilcoxon_signed_rank(x, y, exact);
    EXPECT_EQ(r.p_raw, oracle::wilcoxon_enumeration_p(x, y));
  }
}

TEST(Wilcoxon, PrattKeepsZerosInRanking) {
  // Differences {0, 1, -2, 3}: Pratt ranks {1, 2, 3, 4}, zero left out.
  const std::vector<double> x = {5, 6, 3, 8};
  const std::vector<double> y = {5, 5, 5, 5};
  WilcoxonOptions pratt;
  pratt.zeros = ZeroHandling::kPratt;
  const WilcoxonResult r = wilcoxon_signed_rank(x, y, pratt);
  EXPECT_EQ(r.w_plus, 6.0);
  EXPECT_EQ(r.w_minus, 3.0);
  EXPECT_EQ(r.n_effective, 3u);
  // Sign patterns over ranks {2, 3, 4}: min(W+, W-) <= 3 in 6 of 8.
  EXPECT_EQ(r.p_raw, 0.75);
  const WilcoxonResult dropped = wilcoxon_signed_rank(x, y);
  EXPECT_EQ(dropped.w_plus, 4.0);
  EXPECT_EQ(dropped.w_minus, 2.0);
}

TEST(Wilcoxon, AutoSwitchesToNormalAboveThreshold) {
  std::mt19937_64 rng(65);
  std::normal_distribution<double> z(0.3, 1.0);
  std::vector<double> x(30);
  std::vector<double> y(30, 0.0);
  for (double& v : x) v = z(rng);
  const WilcoxonResult r = wilcoxon_signed_rank(x, y);
  EXPECT_FALSE(r.exact);
  WilcoxonOptions exact;
  exact.mode = WilcoxonMode::kExact;
  const WilcoxonResult e = wilcoxon_signed_rank(x, y, exact);
  EXPECT_TRUE(e.exact);
  EXPECT_NEAR(r.p_raw, e.p_raw, 0.01);
}

TEST(Wilcoxon, NormalApproxFormula) {
  const std::vector<double> x = {1, 2, 3, 4, 5, -6, 7, 8};
  const std::vector<double> y(8, 0.0);
  WilcoxonOptions approx;
  approx.mode = WilcoxonMode::kNormalApprox;
  const WilcoxonResult r = wilcoxon_signed_rank(x, y, approx);
  // W+ = 30, mean 18, variance 8*9*17/24 = 51.
  const double z = (30.0 - 18.0 - 0.5) / std::sqrt(51.0);
  EXPECT_NEAR(r.p_raw, std::erfc(z / std::sqrt(2.0)), 1e-14);
}

TEST(Wilcoxon, ExactLimit) {
  std::vector<double> x(63);
  std::vector<double> y(63, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i + 1);
  WilcoxonOptions exact;
  exact.mode = WilcoxonMode::kExact;
  EXPECT_THROW(wilcoxon_signed_rank(x, y, exact), DomainError);
  EXPECT_THROW(wilcoxon_signed_rank(std::vector<double>{1.0}, std::vector<double>{}),
               ValidationError);
}

TEST(Bonferroni, Examples) {
  const std::vector<double> p = {0.01, 0.5, 0.0};
  const auto adj = bonferroni(p, 6);
  EXPECT_DOUBLE_EQ(adj[0], 0.06);
  EXPECT_EQ(adj[1], 1.0);
  EXPECT_EQ(adj[2], 0.0);
  EXPECT_THROW(bonferroni(p, 2), DomainError);
  const std::vector<double> bad = {1.5};
  EXPECT_THROW(bonferroni(bad, 1), DomainError);
}

TEST(Bonferroni, NeverDecreasesAndIdempotentForOne) {
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const std::vector<double> p = {u(rng)};
    EXPECT_EQ(bonferroni(p, 1)[0], p[0]);
    EXPECT_GE(bonferroni(p, 1 + i % 10)[0], p[0]);
  }
}

TEST(Significance, Stars) {
  EXPECT_EQ(significance_stars(0.0004), "***");
  EXPECT_EQ(significance_stars(0.004), "**");
  EXPECT_EQ(significance_stars(0.04), "*");
  EXPECT_EQ(significance_stars(0.05), "ns");
}

TEST(Pairwise, SixPairsForFourLevels) {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < 16; ++i) rows.push_back({0.0 + i, 1.0 + i, 2.0 + i, 10.0 + i});
  const RepeatedMeasures data(rows, {"A", "B", "C", "D"});
  const auto results = pairwise_wilcoxon(data, {});
  ASSERT_EQ(results.size(), 6u);
  for (const auto& r : results) {
    EXPECT_EQ(r.test.p_raw, 2.0 / 65536.0);
    EXPECT_DOUBLE_EQ(r.test.p_adjusted, 6.0 * 2.0 / 65536.0);
  }
  EXPECT_EQ(results[0].first, 0u);
  EXPECT_EQ(results[5].second, 3u);
  const auto wider = pairwise_wilcoxon(data, {}, 12);
  EXPECT_DOUBLE_EQ(wider[0].test.p_adjusted, 12.0 * 2.0 / 65536.0);
}

}  // namespace
}  // namespace readacuity::stats
