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

// Conversions between physical print size, viewing distance, visual angle,
// logMAR and decimal acuity.
//
// Angles are carried in arc minutes and lengths in centimeters. The exact
// arctan relation is used throughout; there is no small-angle shortcut.

#ifndef READACUITY_UNITS_HPP_
#define READACUITY_UNITS_HPP_

#include <compare>

namespace readacuity {

// Height of a lower-case "x", in centimeters. Zero is admitted as the
// zero-size limit; negative or non-finite values throw DomainError.
class XHeight {
 public:
  explicit XHeight(double cm);
  double cm() const noexcept { return cm_; }

 private:
  double cm_;
};

// Eye-to-text distance in centimeters, strictly positive.
class ViewingDistance {
 public:
  explicit ViewingDistance(double cm);
  double cm() const noexcept { return cm_; }

  friend auto operator<=>(const ViewingDistance&,
                          const ViewingDistance&) = default;

 private:
  double cm_;
};

// Angle subtended by the x-height, in arc minutes, non-negative.
class VisualAngle {
 public:
  explicit VisualAngle(double arcmin);
  double arcmin() const noexcept { return arcmin_; }

 private:
  double arcmin_;
};

// Angular print size in logMAR. May be negative (finer than 5 arcmin).
struct PrintSize {
  double logmar = 0.0;

  friend auto operator<=>(const PrintSize&, const PrintSize&) = default;
};

// Decimal acuity, strictly positive. 1.0 corresponds to 0 logMAR (20/20).
class DecimalAcuity {
 public:
  explicit DecimalAcuity(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

inline constexpr double kReferenceArcmin = 5.0;
inline constexpr double kStandardDistanceCm = 40.0;

VisualAngle visual_angle(XHeight h, ViewingDistance d);

// Throws DomainError for a zero angle.
PrintSize logmar_from_angle(VisualAngle theta);
VisualAngle angle_from_logmar(PrintSize s);

// Physical x-height that subtends `s` at distance `d`.
XHeight xheight_for(PrintSize s, ViewingDistance d);

DecimalAcuity decimal_from_logmar(PrintSize s);
PrintSize logmar_from_decimal(DecimalAcuity a);

// Re-expresses a size measured at `d` as the equivalent size at `d_prime`.
// Reading speed needs no correction; only sizes move.
PrintSize distance_shift(PrintSize s, ViewingDistance d,
                         ViewingDistance d_prime);

inline PrintSize standardize_to_40cm(PrintSize s, ViewingDistance d) {
  return distance_shift(s, d, ViewingDistance(kStandardDistanceCm));
}

}  // namespace readacuity

#endif  // READACUITY_UNITS_HPP_
