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

#include "readacuity/cli/config.hpp"

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(stats::WilcoxonMode mode) {
  switch (mode) {
    case stats::WilcoxonMode::kAuto:
      return "auto";
    case stats::WilcoxonMode::kExact:
      return "exact";
    case stats::WilcoxonMode::kNormalApprox:
      return "approx";
  }
  return "";
}

std::string_view to_string(stats::ZeroHandling zeros) {
  return zeros == stats::ZeroHandling::kDrop ? "drop" : "pratt";
}

AnalysisConfig parse_config(std::string_view text, AnalysisConfig base) {
  AnalysisConfig config = base;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{}
                                             : text.substr(newline + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    auto bad = [&]() {
      return ParseError("invalid value '" + std::string(value) + "' for " +
                            std::string(key),
                        line_no);
    };

    if (key == "cps_method") {
      if (value == "fraction") {
        config.metrics.cps_method = CpsMethod::kFraction;
      } else if (value == "sd") {
        config.metrics.cps_method = CpsMethod::kSd;
      } else {
        throw bad();
      }
    } else if (key == "p") {
      const double p = csv::parse_double(value, line_no, key);
      if (!(p >= 0.80 && p <= 1.00)) throw bad();
      config.metrics.p = p;
    } else if (key == "mrs_method") {
      if (value == "sd_plateau") {
        config.metrics.mrs_method = MrsMethod::kSdPlateau;
      } else if (value == "fraction_max") {
        config.metrics.mrs_method = MrsMethod::kFractionMax;
      } else {
        throw bad();
      }
    } else if (key == "wilcoxon") {
      if (value == "auto") {
        config.wilcoxon.mode = stats::WilcoxonMode::kAuto;
      } else if (value == "exact") {
        config.wilcoxon.mode = stats::WilcoxonMode::kExact;
      } else if (value == "approx") {
        config.wilcoxon.mode = stats::WilcoxonMode::kNormalApprox;
      } else {
        throw bad();
      }
    } else if (key == "zero_handling") {
      if (value == "drop") {
        config.wilcoxon.zeros = stats::ZeroHandling::kDrop;
      } else if (value == "pratt") {
        config.wilcoxon.zeros = stats::ZeroHandling::kPratt;
      } else {
        throw bad();
      }
    } else if (key == "bonferroni_m") {
      const auto m = csv::parse_int(value, line_no, key);
      if (m < 0) throw bad();
      config.bonferroni_m = static_cast<std::size_t>(m);
    } else if (key == "standardize_distance_cm") {
      if (value == "none") {
        config.metrics.standardize_distance_cm.reset();
      } else {
        const double d = csv::parse_double(value, line_no, key);
        if (!(d > 0.0)) throw bad();
        config.metrics.standardize_distance_cm = d;
      }
    } else {
      throw ParseError("unknown setting '" + std::string(key) + "'", line_no);
    }
  }
  return config;
}

std::vector<std::pair<std::string, std::string>> describe(
    const AnalysisConfig& config) {
  const auto& m = config.metrics;
  return {
      {"cps_method", std::string(to_string(m.cps_method))},
      {"p", csv::format_sig6(m.p)},
      {"mrs_method", std::string(to_string(m.mrs_method))},
      {"wilcoxon", std::string(to_string(config.wilcoxon.mode))},
      {"zero_handling", std::string(to_string(config.wilcoxon.zeros))},
      {"bonferroni_m", std::to_string(config.bonferroni_m)},
      {"standardize_distance_cm",
       m.standardize_distance_cm ? csv::format_sig6(*m.standardize_distance_cm)
                                 : std::string("none")},
  };
}

}  // namespace readacuity::cli
