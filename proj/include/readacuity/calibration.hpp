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

// Effective-resolution calibration: measured acuity y (logMAR) against the
// render resolution scale x, modelled as y = a ln(x) + b.

#ifndef READACUITY_CALIBRATION_HPP_
#define READACUITY_CALIBRATION_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readacuity/condition.hpp"
#include "readacuity/units.hpp"

namespace readacuity {

struct CalibrationPoint {
  double scale = 1.0;  // (0, 1]
  PrintSize acuity;
};

struct CalibrationModel {
  double a = 0.0;  // logMAR per unit ln(scale); negative for a real device
  double b = 0.0;  // logMAR at scale 1
  double r2 = 0.0;
  double rmse = 0.0;
  std::size_t n = 0;
};

// Published VR calibration of the reference headset.
inline constexpr CalibrationModel kReferenceVrModel{-0.2796, -0.0232, 1.0, 0.0,
                                                    4};

// Closed-form least squares on (ln x, y). Throws DomainError for a scale
// outside (0, 1] and ValidationError for fewer than two distinct scales.
CalibrationModel fit_log_model(std::span<const CalibrationPoint> points);

PrintSize acuity_for_scale(const CalibrationModel& model, double scale);

struct ScaleTarget {
  double scale = 1.0;
  bool clamped = false;  // raw solution fell outside (0, 1]
};

// Inverse of acuity_for_scale, clamped into (0, 1]. Throws DomainError
// when a == 0.
ScaleTarget scale_for_target(const CalibrationModel& model, PrintSize target);

struct LensLevel {
  ResolutionLevel level;
  double diopter = 0.0;  // 0 means no lens
  PrintSize acuity;
};

// Trial lens mounted in front of the passthrough cameras for each level.
LensLevel lens_for_level(ResolutionLevel level);

// scale,logmar
std::vector<CalibrationPoint> import_calibration_csv(std::string_view text);

}  // namespace readacuity

#endif  // READACUITY_CALIBRATION_HPP_
