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

// Analysis configuration: a `key = value` text file, `#` starts a comment.
//
//   cps_method        fraction | sd               (default fraction)
//   p                 0.80 .. 1.00                (default 0.90)
//   mrs_method        sd_plateau | fraction_max   (default sd_plateau)
//   wilcoxon          auto | exact | approx       (default auto)
//   zero_handling     drop | pratt                (default drop)
//   bonferroni_m      integer >= 1, 0 = per-family pair count (default 0)
//   standardize_distance_cm   number > 0 | none   (default 40)

#ifndef READACUITY_CLI_CONFIG_HPP_
#define READACUITY_CLI_CONFIG_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "readacuity/metrics.hpp"
#include "readacuity/stats.hpp"

namespace readacuity::cli {

struct AnalysisConfig {
  MetricsOptions metrics;
  stats::WilcoxonOptions wilcoxon;
  std::size_t bonferroni_m = 0;
};

// Applies the settings in `text` on top of `base`. Unknown keys and bad
// values throw ParseError with the line number.
AnalysisConfig parse_config(std::string_view text, AnalysisConfig base = {});

// Resolved settings as ordered (key, value) pairs, in canonical text form.
std::vector<std::pair<std::string, std::string>> describe(
    const AnalysisConfig& config);

std::string_view to_string(stats::WilcoxonMode mode);
std::string_view to_string(stats::ZeroHandling zeros);

}  // namespace readacuity::cli

#endif  // READACUITY_CLI_CONFIG_HPP_
