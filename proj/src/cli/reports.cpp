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

#include "readacuity/cli/reports.hpp"

#include <json.hpp>

#include "readacuity/csv.hpp"

namespace readacuity::cli {

namespace {

using csv::format_sig6;
using Json = nlohmann::ordered_json;

std::optional<double> logmar_of(const std::optional<PrintSize>& s) {
  if (!s) return std::nullopt;
  return s->logmar;
}

std::string level_text(const Condition& c) {
  return c.level ? std::string(to_string(*c.level)) : std::string();
}

}  // namespace

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::string out =
      "participant_id,language,display,resolution_level,mrs_wpm,cps_logmar,"
      "ra_logmar,acc,cps_method,p\n";
  for (const MetricsRow& r : rows) {
    const ReadingMetrics& m = r.metrics;
    out += csv::join_row({r.participant_id,
                          std::string(to_string(r.condition.language)),
                          std::string(to_string(r.condition.display)),
                          level_text(r.condition), format_sig6(m.mrs_wpm),
                          format_sig6(logmar_of(m.cps)),
                          format_sig6(logmar_of(m.ra)), format_sig6(m.acc.value),
                          std::string(to_string(m.options.cps_method)),
                          format_sig6(m.options.p)});
  }
  return out;
}

std::string friedman_csv(const std::vector<FriedmanRow>& rows) {
  std::string out = "family,metric,chi2,df,p,kendall_w\n";
  for (const FriedmanRow& r : rows) {
    out += csv::join_row({r.family, r.metric, format_sig6(r.result.chi2),
                          std::to_string(r.result.df), format_sig6(r.result.p),
                          format_sig6(r.result.kendall_w)});
  }
  return out;
}

std::string posthoc_csv(const std::vector<PosthocRow>& rows) {
  std::string out = "family,metric,pair,W_stat,p_raw,p_adj,significance\n";
  for (const PosthocRow& r : rows) {
    out += csv::join_row(
        {r.family, r.metric, r.pair, format_sig6(r.result.w_stat),
         format_sig6(r.result.p_raw), format_sig6(r.result.p_adjusted),
         std::string(stats::significance_stars(r.result.p_adjusted))});
  }
  return out;
}

std::string curves_json(const std::vector<CurveRecord>& records) {
  Json array = Json::array();
  for (const CurveRecord& r : records) {
    Json entry;
    entry["metric"] = r.metric;
    entry["language"] = r.language;
    entry["display"] = r.display;
    entry["a"] = csv::round_sig6(r.curve.a);
    entry["b"] = csv::round_sig6(r.curve.b);
    entry["c"] = csv::round_sig6(r.curve.c);
    entry["r2"] = csv::round_sig6(r.curve.r2);
    entry["n_points"] = r.curve.n_points;
    entry["with_offset"] = r.curve.with_offset;
    entry["dof"] = r.curve.dof;
    if (r.curve.rate_indeterminate) entry["rate_indeterminate"] = true;
    array.push_back(std::move(entry));
  }
  return array.dump(2) + "\n";
}

std::string plot_csv(const CurveRecord& record) {
  std::string out = "x,y_observed,y_fitted\n";
  for (const CurveSample& s : record.samples) {
    out += csv::join_row({format_sig6(s.x), format_sig6(s.y),
                          format_sig6(eval_curve(record.curve, s.x))});
  }
  return out;
}

std::string plot_file_name(const CurveRecord& record) {
  std::string name = "plot_";
  if (!record.display.empty()) name += record.display + "_";
  if (!record.language.empty()) name += record.language + "_";
  name += record.metric + ".csv";
  return name;
}

std::string calibration_json(const CalibrationModel& model,
                             const std::vector<std::string>& warnings) {
  Json json;
  json["a"] = csv::round_sig6(model.a);
  json["b"] = csv::round_sig6(model.b);
  json["r2"] = csv::round_sig6(model.r2);
  json["n"] = model.n;
  json["rmse"] = csv::round_sig6(model.rmse);
  json["warnings"] = warnings;
  return json.dump(2) + "\n";
}

std::string targets_csv(const std::vector<TargetRow>& rows) {
  std::string out = "level,target_logmar,scale,clamped\n";
  for (const TargetRow& r : rows) {
    out += csv::join_row({r.level, format_sig6(r.target_logmar),
                          format_sig6(r.scale.scale),
                          r.scale.clamped ? "true" : "false"});
  }
  return out;
}

}  // namespace readacuity::cli
