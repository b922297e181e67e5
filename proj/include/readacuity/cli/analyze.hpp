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

// The full analysis pipeline behind `readacuity analyze`: per-session
// metrics, Friedman and pairwise Wilcoxon tests across resolution levels,
// and exponential reference curves through the per-level medians.

#ifndef READACUITY_CLI_ANALYZE_HPP_
#define READACUITY_CLI_ANALYZE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "readacuity/cli/config.hpp"
#include "readacuity/cli/reports.hpp"
#include "readacuity/ssq.hpp"

namespace readacuity::cli {

inline constexpr std::string_view kToolVersion = "readacuity 1.0.0";

// A file's name (as given on the command line) and its bytes.
struct NamedInput {
  std::string name;
  std::string contents;
};

// Bad input data; the message starts with "file:row:" when a row is known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputSummary {
  std::string name;
  std::string kind;  // "session" or "ssq"
  std::string sha256;
  std::size_t rows = 0;
};

struct AnalysisBundle {
  AnalysisConfig config;
  std::vector<InputSummary> inputs;
  std::vector<MetricsRow> metrics;     // one per session, input order
  std::vector<std::string> metrics_source;  // input name per metrics row
  std::vector<FriedmanRow> friedman;
  std::vector<PosthocRow> posthoc;
  std::vector<CurveRecord> curves;
  std::vector<SsqRecord> ssq;
  std::vector<std::string> warnings;
};

// Throws InputError for unparseable or inconsistent inputs.
AnalysisBundle analyze(const std::vector<NamedInput>& sessions,
                       const std::vector<NamedInput>& ssq,
                       const AnalysisConfig& config);

// Writes metrics.csv, friedman.csv, posthoc.csv, curves.json, one
// plot_*.csv per curve, ssq_scores.csv (when SSQ input was given) and
// provenance.json into `out_dir`, creating it if needed.
void write_bundle(const AnalysisBundle& bundle, const std::string& out_dir);

std::string provenance_json(const AnalysisBundle& bundle);

double median(std::vector<double> values);

}  // namespace readacuity::cli

#endif  // READACUITY_CLI_ANALYZE_HPP_
