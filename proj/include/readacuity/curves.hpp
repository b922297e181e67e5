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

// Exponential reference curves y = a * exp(b * x) + c relating effective
// resolution x (logMAR) to a reading metric or sickness score.
//
// Fitting is variable projection: for a fixed rate b the model is linear in
// (a, c) and solved in closed form, so only b is searched. A log-spaced
// grid over +-[1e-3, 10] picks the basin and golden-section search refines
// b inside the neighbouring grid cells. No derivatives, no starting guess,
// and the result depends only on the input.

#ifndef READACUITY_CURVES_HPP_
#define READACUITY_CURVES_HPP_

#include <array>
#include <span>
#include <stdexcept>
#include <string_view>

namespace readacuity {

struct CurveSample {
  double x = 0.0;
  double y = 0.0;
};

struct ExpCurve {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;  // identically 0 when fitted without offset
  double r2 = 0.0;
  bool with_offset = true;
  std::size_t n_points = 0;
  int dof = 0;  // n_points minus fitted parameters
  // The data were constant, so the rate is not determined (b reported 0).
  bool rate_indeterminate = false;
  double sse = 0.0;
};

double eval_curve(const ExpCurve& curve, double x);

// Thrown when the optimum lies on the edge of the searched rate range.
class FitError : public std::runtime_error {
 public:
  FitError(const std::string& message, ExpCurve best)
      : std::runtime_error(message), best_(best) {}
  const ExpCurve& best() const noexcept { return best_; }
  double residual() const noexcept { return best_.sse; }

 private:
  ExpCurve best_;
};

inline constexpr double kMinRate = 1e-3;
inline constexpr double kMaxRate = 10.0;

// Least-squares fit. Needs at least 3 points (4 with offset) at distinct x;
// throws ValidationError otherwise.
ExpCurve fit_exp(std::span<const CurveSample> points, bool with_offset);

// A fit reported for the VR condition of the reference study.
struct PublishedCurve {
  std::string_view metric;
  std::string_view language;  // empty for the SSQ total
  double a;
  double b;
  double c;
  double r2;
  bool with_offset;

  ExpCurve curve() const {
    ExpCurve out;
    out.a = a;
    out.b = b;
    out.c = c;
    out.r2 = r2;
    out.with_offset = with_offset;
    return out;
  }
};

inline constexpr std::array<PublishedCurve, 7> kPublishedCurves = {{
    {"CPS", "EN", 0.1091, 2.5400, 0.3000, 0.9981, true},
    {"CPS", "CN", 0.1202, 2.7200, 0.2000, 0.9807, true},
    {"RA", "EN", 0.1228, 2.9600, -0.2200, 0.9970, true},
    {"RA", "CN", 0.1838, 2.5600, -0.2200, 0.9880, true},
    {"ACC", "EN", -0.0942, 2.0000, 0.5822, 0.9739, true},
    {"ACC", "CN", -0.1015, 2.7400, 1.0093, 0.9956, true},
    {"SSQ_TOTAL", "", 9.7505, 3.0099, 0.0, 0.988, false},
}};

// Nominal x positions of the four effective-resolution levels.
inline constexpr std::array<double, 4> kLevelLogmar = {0.00, 0.22, 0.40, 0.60};

}  // namespace readacuity

#endif  // READACUITY_CURVES_HPP_
