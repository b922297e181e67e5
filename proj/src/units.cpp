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

#include "readacuity/units.hpp"

#include <cmath>
#include <numbers>

#include "readacuity/error.hpp"

namespace readacuity {

namespace {

constexpr double kArcminPerRadian = 60.0 * 180.0 / std::numbers::pi;

}  // namespace

XHeight::XHeight(double cm) : cm_(cm) {
  if (!std::isfinite(cm) || cm < 0.0) {
    throw DomainError("x-height must be a finite non-negative length");
  }
}

ViewingDistance::ViewingDistance(double cm) : cm_(cm) {
  if (!std::isfinite(cm) || cm <= 0.0) {
    throw DomainError("viewing distance must be positive");
  }
}

VisualAngle::VisualAngle(double arcmin) : arcmin_(arcmin) {
  if (!std::isfinite(arcmin) || arcmin < 0.0) {
    throw DomainError("visual angle must be finite and non-negative");
  }
}

DecimalAcuity::DecimalAcuity(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("decimal acuity must be positive");
  }
}

VisualAngle visual_angle(XHeight h, ViewingDistance d) {
  return VisualAngle(2.0 * std::atan(h.cm() / (2.0 * d.cm())) *
                     kArcminPerRadian);
}

PrintSize logmar_from_angle(VisualAngle theta) {
  if (theta.arcmin() <= 0.0) {
    throw DomainError("logMAR is undefined for a zero visual angle");
  }
  return PrintSize{std::log10(theta.arcmin() / kReferenceArcmin)};
}

VisualAngle angle_from_logmar(PrintSize s) {
  if (!std::isfinite(s.logmar)) {
    throw DomainError("print size must be finite");
  }
  return VisualAngle(kReferenceArcmin * std::pow(10.0, s.logmar));
}

XHeight xheight_for(PrintSize s, ViewingDistance d) {
  const double half_angle_rad =
      angle_from_logmar(s).arcmin() / kArcminPerRadian / 2.0;
  if (half_angle_rad >= std::numbers::pi / 2.0) {
    throw DomainError("print size subtends more than 180 degrees");
  }
  return XHeight(2.0 * d.cm() * std::tan(half_angle_rad));
}

DecimalAcuity decimal_from_logmar(PrintSize s) {
  if (!std::isfinite(s.logmar)) {
    throw DomainError("print size must be finite");
  }
  return DecimalAcuity(std::pow(10.0, -s.logmar));
}

PrintSize logmar_from_decimal(DecimalAcuity a) {
  return PrintSize{-std::log10(a.value())};
}

PrintSize distance_shift(PrintSize s, ViewingDistance d,
                         ViewingDistance d_prime) {
  return PrintSize{s.logmar + std::log10(d_prime.cm() / d.cm())};
}

}  // namespace readacuity
