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

#include "readacuity/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "readacuity/error.hpp"

namespace readacuity {

namespace {

constexpr int kGridPerSign = 400;
constexpr int kGoldenIterations = 200;
constexpr double kGoldenTolerance = 1e-14;
constexpr double kInvPhi = 0.6180339887498949;

struct LinearPart {
  double a = 0.0;
  double c = 0.0;
  double sse = std::numeric_limits<double>::infinity();
};

// Best (a, c) for a fixed rate, and its residual sum of squares.
LinearPart solve_linear(std::span<const CurveSample> points, double b,
                        bool with_offset) {
  const double n = static_cast<double>(points.size());
  LinearPart out;
  if (with_offset) {
    double mean_f = 0.0;
    double mean_y = 0.0;
    for (const CurveSample& p : points) {
      mean_f += std::exp(b * p.x);
      mean_y += p.y;
    }
    mean_f /= n;
    mean_y /= n;
    double sff = 0.0;
    double sfy = 0.0;
    for (const CurveSample& p : points) {
      const double df = std::exp(b * p.x) - mean_f;
      sff += df * df;
      sfy += df * (p.y - mean_y);
    }
    if (!(sff > 1e-300) || !std::isfinite(sff)) return out;
    out.a = sfy / sff;
    out.c = mean_y - out.a * mean_f;
  } else {
    double sff = 0.0;
    double sfy = 0.0;
    for (const CurveSample& p : points) {
      const double f = std::exp(b * p.x);
      sff += f * f;
      sfy += f * p.y;
    }
    if (!(sff > 0.0) || !std::isfinite(sff)) return out;
    out.a = sfy / sff;
  }
  double sse = 0.0;
  for (const CurveSample& p : points) {
    const double r = p.y - (out.a * std::exp(b * p.x) + out.c);
    sse += r * r;
  }
  out.sse = std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
  return out;
}

std::vector<double> rate_grid(bool with_offset) {
  std::vector<double> grid;
  const double log_min = std::log10(kMinRate);
  const double log_max = std::log10(kMaxRate);
  for (int i = kGridPerSign - 1; i >= 0; --i) {
    grid.push_back(-std::pow(10.0, log_min + (log_max - log_min) * i /
                                            (kGridPerSign - 1)));
  }
  // A zero rate collapses onto the offset, so it is only a candidate for the
  // pure exponential.
  if (!with_offset) grid.push_back(0.0);
  for (int i = 0; i < kGridPerSign; ++i) {
    grid.push_back(std::pow(10.0, log_min + (log_max - log_min) * i /
                                           (kGridPerSign - 1)));
  }
  return grid;
}

double golden_section(std::span<const CurveSample> points, bool with_offset,
                      double lo, double hi) {
  auto f = [&](double b) { return solve_linear(points, b, with_offset).sse; };
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < kGoldenIterations; ++i) {
    if (hi - lo <= kGoldenTolerance * std::max(1.0, std::abs(lo) + std::abs(hi))) {
      break;
    }
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

double eval_curve(const ExpCurve& curve, double x) {
  return curve.a * std::exp(curve.b * x) + curve.c;
}

ExpCurve fit_exp(std::span<const CurveSample> points, bool with_offset) {
  const std::size_t min_points = with_offset ? 4 : 3;
  if (points.size() < min_points) {
    throw ValidationError("exponential fit needs at least " +
                          std::to_string(min_points) + " points");
  }
  std::set<double> xs;
  double mean_y = 0.0;
  for (const CurveSample& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("curve samples must be finite");
    }
    if (!xs.insert(p.x).second) {
      throw ValidationError("curve samples need distinct x values");
    }
    mean_y += p.y;
  }
  mean_y /= static_cast<double>(points.size());
  double ss_tot = 0.0;
  for (const CurveSample& p : points) ss_tot += (p.y - mean_y) * (p.y - mean_y);

  ExpCurve curve;
  curve.with_offset = with_offset;
  curve.n_points = points.size();
  curve.dof = static_cast<int>(points.size()) - (with_offset ? 3 : 2);

  if (ss_tot == 0.0) {
    if (with_offset) {
      curve.a = 0.0;
      curve.c = mean_y;
      curve.rate_indeterminate = true;
    } else {
      curve.a = mean_y;
      curve.rate_indeterminate = mean_y == 0.0;
    }
    curve.r2 = 1.0;
    return curve;
  }

  const std::vector<double> grid = rate_grid(with_offset);
  std::size_t best = 0;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double sse = solve_linear(points, grid[i], with_offset).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = i;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  double rate = golden_section(points, with_offset, lo, hi);
  LinearPart linear = solve_linear(points, rate, with_offset);
  if (linear.sse > best_sse) {
    rate = grid[best];
    linear = solve_linear(points, rate, with_offset);
  }

  curve.a = linear.a;
  curve.b = rate;
  curve.c = linear.c;
  curve.sse = linear.sse;
  curve.r2 = 1.0 - linear.sse / ss_tot;

  const bool on_edge = best == 0 || best == grid.size() - 1;
  if (on_edge && linear.sse > 1e-12 * ss_tot) {
    throw FitError("exponential rate ran into the search limit |b| = 10", curve);
  }
  return curve;
}

}  // namespace readacuity
