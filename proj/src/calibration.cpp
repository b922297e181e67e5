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

#include "readacuity/calibration.hpp"

#include <cmath>
#include <limits>

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity {

CalibrationModel fit_log_model(std::span<const CalibrationPoint> points) {
  if (points.size() < 2) {
    throw ValidationError("calibration needs at least two points");
  }
  const double n = static_cast<double>(points.size());
  double mean_u = 0.0;
  double mean_y = 0.0;
  for (const CalibrationPoint& p : points) {
    if (!(p.scale > 0.0 && p.scale <= 1.0)) {
      throw DomainError("render scale must lie in (0, 1]");
    }
    mean_u += std::log(p.scale);
    mean_y += p.acuity.logmar;
  }
  mean_u /= n;
  mean_y /= n;

  // Centered sums keep the 2x2 normal equations well conditioned.
  double suu = 0.0;
  double suy = 0.0;
  double syy = 0.0;
  for (const CalibrationPoint& p : points) {
    const double du = std::log(p.scale) - mean_u;
    const double dy = p.acuity.logmar - mean_y;
    suu += du * du;
    suy += du * dy;
    syy += dy * dy;
  }
  if (suu <= 0.0) {
    throw ValidationError("calibration scales are all identical; fit is singular");
  }

  CalibrationModel model;
  model.a = suy / suu;
  model.b = mean_y - model.a * mean_u;
  model.n = points.size();
  double ss_res = 0.0;
  for (const CalibrationPoint& p : points) {
    const double r = p.acuity.logmar - (model.a * std::log(p.scale) + model.b);
    ss_res += r * r;
  }
  model.rmse = std::sqrt(ss_res / n);
  model.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return model;
}

PrintSize acuity_for_scale(const CalibrationModel& model, double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw DomainError("render scale must lie in (0, 1]");
  }
  return PrintSize{model.a * std::log(scale) + model.b};
}

ScaleTarget scale_for_target(const CalibrationModel& model, PrintSize target) {
  if (model.a == 0.0) throw DomainError("flat calibration cannot be inverted");
  const double raw = std::exp((target.logmar - model.b) / model.a);
  if (raw > 1.0) return ScaleTarget{1.0, true};
  if (!(raw > 0.0)) {
    return ScaleTarget{std::numeric_limits<double>::min(), true};
  }
  return ScaleTarget{raw, false};
}

LensLevel lens_for_level(ResolutionLevel level) {
  switch (level) {
    case ResolutionLevel::kA:
      return {level, 0.0, PrintSize{0.00}};
    case ResolutionLevel::kB:
      return {level, -4.00, PrintSize{0.22}};
    case ResolutionLevel::kC:
      return {level, -5.00, PrintSize{0.40}};
    case ResolutionLevel::kD:
      return {level, -6.00, PrintSize{0.60}};
  }
  return {level, 0.0, PrintSize{0.0}};
}

std::vector<CalibrationPoint> import_calibration_csv(std::string_view text) {
  const csv::Table table = csv::Table::from_text(text);
  table.require_columns({"scale", "logmar"}, {"scale", "logmar"});
  std::vector<CalibrationPoint> out;
  for (const csv::Record& row : table.rows()) {
    const double scale =
        csv::parse_double(table.field(row, "scale"), row.line, "scale");
    if (!(scale > 0.0 && scale <= 1.0)) {
      throw ParseError("scale must lie in (0, 1]", row.line);
    }
    out.push_back({scale, PrintSize{csv::parse_double(table.field(row, "logmar"),
                                                      row.line, "logmar")}});
  }
  return out;
}

}  // namespace readacuity
