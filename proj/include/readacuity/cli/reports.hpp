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

// Output file writers. Every float goes through csv::format_sig6 (or its
// numeric equivalent for JSON), so identical inputs give identical bytes.

#ifndef READACUITY_CLI_REPORTS_HPP_
#define READACUITY_CLI_REPORTS_HPP_

#include <string>
#include <vector>

#include "readacuity/calibration.hpp"
#include "readacuity/condition.hpp"
#include "readacuity/curves.hpp"
#include "readacuity/metrics.hpp"
#include "readacuity/stats.hpp"

namespace readacuity::cli {

struct MetricsRow {
  std::string participant_id;
  Condition condition;
  ReadingMetrics metrics;
};

// participant_id,language,display,resolution_level,mrs_wpm,cps_logmar,
// ra_logmar,acc,cps_method,p
std::string metrics_csv(const std::vector<MetricsRow>& rows);

struct FriedmanRow {
  std::string family;
  std::string metric;
  stats::FriedmanResult result;
};

// family,metric,chi2,df,p,kendall_w
std::string friedman_csv(const std::vector<FriedmanRow>& rows);

struct PosthocRow {
  std::string family;
  std::string metric;
  std::string pair;  // "A vs. B"
  stats::WilcoxonResult result;
};

// family,metric,pair,W_stat,p_raw,p_adj,significance
std::string posthoc_csv(const std::vector<PosthocRow>& rows);

struct CurveRecord {
  std::string metric;
  std::string language;
  std::string display;
  ExpCurve curve;
  std::vector<CurveSample> samples;
};

// JSON array of {metric, language, display, a, b, c, r2, n_points}.
std::string curves_json(const std::vector<CurveRecord>& records);

// x,y_observed,y_fitted
std::string plot_csv(const CurveRecord& record);
std::string plot_file_name(const CurveRecord& record);

// {a, b, r2, n} plus a warnings array.
std::string calibration_json(const CalibrationModel& model,
                             const std::vector<std::string>& warnings);

struct TargetRow {
  std::string level;
  double target_logmar = 0.0;
  ScaleTarget scale;
};

// level,target_logmar,scale,clamped
std::string targets_csv(const std::vector<TargetRow>& rows);

}  // namespace readacuity::cli

#endif  // READACUITY_CLI_REPORTS_HPP_
