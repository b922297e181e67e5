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

#include "readacuity/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "readacuity/error.hpp"

namespace readacuity {

namespace {

constexpr std::size_t kMinReadablePoints = 3;

std::size_t readable_points(const ReadingCurve& curve) {
  return static_cast<std::size_t>(
      std::count_if(curve.points().begin(), curve.points().end(),
                    [](const CurvePoint& p) { return p.wpm > 0.0; }));
}

double sample_sd(std::span<const CurvePoint> points, double mean) {
  if (points.size() < 2) return 0.0;
  double ss = 0.0;
  for (const CurvePoint& p : points) ss += (p.wpm - mean) * (p.wpm - mean);
  return std::sqrt(ss / static_cast<double>(points.size() - 1));
}

double mean_of(std::span<const CurvePoint> points) {
  double sum = 0.0;
  for (const CurvePoint& p : points) sum += p.wpm;
  return sum / static_cast<double>(points.size());
}

}  // namespace

ReadingCurve::ReadingCurve(std::vector<CurvePoint> points)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].wpm) || points_[i].wpm < 0.0) {
      throw ValidationError("reading speed must be finite and non-negative");
    }
    if (!std::isfinite(points_[i].size.logmar)) {
      throw ValidationError("print size must be finite");
    }
    if (i > 0 && !(points_[i].size < points_[i - 1].size)) {
      throw ValidationError("curve sizes must be strictly descending");
    }
  }
}

double reading_speed(int word_count, int errors, double seconds) {
  if (!(seconds > 0.0)) throw DomainError("reading time must be positive");
  return std::max(0.0, 60.0 * static_cast<double>(word_count - errors) / seconds);
}

ReadingCurve curve_from_trials(std::span<const TrialRecord> trials) {
  std::vector<CurvePoint> points;
  points.reserve(trials.size());
  for (const TrialRecord& t : trials) {
    points.push_back(
        {t.size, reading_speed(t.word_count, t.errors, t.duration_s())});
  }
  return ReadingCurve(std::move(points));
}

std::string_view to_string(MrsMethod method) {
  return method == MrsMethod::kSdPlateau ? "sd_plateau" : "fraction_max";
}

std::string_view to_string(CpsMethod method) {
  return method == CpsMethod::kFraction ? "fraction" : "sd";
}

std::optional<Plateau> find_plateau(const ReadingCurve& curve) {
  if (readable_points(curve) < kMinReadablePoints) return std::nullopt;
  const std::span<const CurvePoint> points(curve.points());
  std::size_t length = 2;
  while (length < points.size()) {
    const auto plateau = points.first(length);
    const double mean = mean_of(plateau);
    const double bound = mean - kPlateauSdCriterion * sample_sd(plateau, mean);
    if (points[length].wpm < bound) break;
    ++length;
  }
  const auto plateau = points.first(length);
  const double mean = mean_of(plateau);
  return Plateau{length, mean, sample_sd(plateau, mean)};
}

std::optional<double> mrs(const ReadingCurve& curve, MrsMethod method) {
  if (readable_points(curve) < kMinReadablePoints) return std::nullopt;
  if (method == MrsMethod::kFractionMax) {
    double best = 0.0;
    for (const CurvePoint& p : curve.points()) best = std::max(best, p.wpm);
    return best;
  }
  return find_plateau(curve)->mean;
}

std::optional<PrintSize> cps(const ReadingCurve& curve, double p,
                             CpsMethod method, MrsMethod mrs_method) {
  if (!(p >= 0.80 && p <= 1.00)) {
    throw DomainError("CPS fraction must lie in [0.80, 1.00]");
  }
  if (method == CpsMethod::kSd) {
    const auto plateau = find_plateau(curve);
    if (!plateau) return std::nullopt;
    return curve.points()[plateau->length - 1].size;
  }
  const auto max_speed = mrs(curve, mrs_method);
  if (!max_speed) return std::nullopt;
  const double threshold = p * *max_speed;
  std::optional<PrintSize> best;
  for (const CurvePoint& point : curve.points()) {
    if (point.wpm >= threshold && (!best || point.size < *best)) {
      best = point.size;
    }
  }
  return best;
}

std::optional<PrintSize> ra(std::span<const TrialRecord> trials) {
  const TrialRecord* smallest = nullptr;
  for (const TrialRecord& t : trials) {
    if (t.errors < t.word_count && (!smallest || t.size < smallest->size)) {
      smallest = &t;
    }
  }
  if (!smallest) return std::nullopt;
  return PrintSize{smallest->size.logmar + 0.01 * smallest->errors};
}

AccResult acc(const ReadingCurve& curve) {
  const std::size_t used = std::min(kAccSizes, curve.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < used; ++i) {
    sum += curve.points()[i].wpm / kAccReferenceWpm;
  }
  return AccResult{sum / static_cast<double>(kAccSizes), used < kAccSizes};
}

ReadingMetrics compute_metrics(const Session& session,
                               const MetricsOptions& options) {
  std::vector<TrialRecord> trials = session.trials;
  if (options.standardize_distance_cm) {
    const ViewingDistance target(*options.standardize_distance_cm);
    for (TrialRecord& t : trials) {
      t.size = distance_shift(t.size, session.viewing_distance, target);
    }
  }
  const ReadingCurve curve = curve_from_trials(trials);
  ReadingMetrics out;
  out.options = options;
  out.mrs_wpm = mrs(curve, options.mrs_method);
  out.cps = cps(curve, options.p, options.cps_method, options.mrs_method);
  out.ra = ra(trials);
  out.acc = acc(curve);
  return out;
}

}  // namespace readacuity
