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

// Reading speed and the four chart summary metrics: maximum reading speed
// (MRS), critical print size (CPS), reading acuity (RA) and the reading
// accessibility index (ACC).
//
// Metrics that cannot be determined from the data come back as nullopt
// ("unmeasurable") rather than throwing.

#ifndef READACUITY_METRICS_HPP_
#define READACUITY_METRICS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "readacuity/session.hpp"
#include "readacuity/units.hpp"

namespace readacuity {

struct CurvePoint {
  PrintSize size;
  double wpm = 0.0;
};

// Size/speed pairs in strictly descending size order.
class ReadingCurve {
 public:
  ReadingCurve() = default;
  // Throws ValidationError unless sizes strictly descend and speeds are
  // finite and non-negative.
  explicit ReadingCurve(std::vector<CurvePoint> points);

  const std::vector<CurvePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<CurvePoint> points_;
};

// 60 * (n - e) / t words per minute, floored at zero. `n` is the sentence's
// word count (10 for the English chart, 12 characters for Chinese).
// Throws DomainError for t <= 0.
double reading_speed(int word_count, int errors, double seconds);

ReadingCurve curve_from_trials(std::span<const TrialRecord> trials);

enum class MrsMethod { kSdPlateau, kFractionMax };
enum class CpsMethod { kFraction, kSd };

std::string_view to_string(MrsMethod method);
std::string_view to_string(CpsMethod method);

inline constexpr double kPlateauSdCriterion = 1.96;
inline constexpr double kDefaultCpsFraction = 0.90;
inline constexpr double kAccReferenceWpm = 200.0;
inline constexpr std::size_t kAccSizes = 10;

// Leading run of the curve (largest sizes) forming the speed plateau.
struct Plateau {
  std::size_t length = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
};

// Starting from the two largest sizes, the next smaller size joins the
// plateau while its speed is at least mean - 1.96 SD of the plateau so far.
// The first point falling below that bound, and every smaller size, is
// excluded. Requires at least three readable (RS > 0) points.
std::optional<Plateau> find_plateau(const ReadingCurve& curve);

// kSdPlateau: plateau mean. kFractionMax: fastest observed speed. Both need
// at least three readable points.
std::optional<double> mrs(const ReadingCurve& curve, MrsMethod method);

// kFraction: smallest size with RS >= p * MRS (MRS by `mrs_method`).
// kSd: smallest size on the plateau. `p` must lie in [0.80, 1.00] and is
// only used by kFraction; throws DomainError otherwise.
std::optional<PrintSize> cps(const ReadingCurve& curve, double p,
                             CpsMethod method,
                             MrsMethod mrs_method = MrsMethod::kSdPlateau);

// Smallest size read with at least one word right, plus 0.01 logMAR per
// error at that size.
std::optional<PrintSize> ra(std::span<const TrialRecord> trials);

struct AccResult {
  double value = 0.0;
  // Fewer than ten sizes were presented; the missing ones counted as 0 wpm.
  bool padded = false;
};

// Mean of RS / 200 over the ten largest sizes.
AccResult acc(const ReadingCurve& curve);

struct MetricsOptions {
  CpsMethod cps_method = CpsMethod::kFraction;
  double p = kDefaultCpsFraction;
  MrsMethod mrs_method = MrsMethod::kSdPlateau;
  // Re-express sizes at this distance before scoring; nullopt keeps the
  // session's own distance.
  std::optional<double> standardize_distance_cm = kStandardDistanceCm;
};

struct ReadingMetrics {
  std::optional<double> mrs_wpm;
  std::optional<PrintSize> cps;
  std::optional<PrintSize> ra;
  AccResult acc;
  MetricsOptions options;
};

ReadingMetrics compute_metrics(const Session& session,
                               const MetricsOptions& options = {});

}  // namespace readacuity

#endif  // READACUITY_METRICS_HPP_
