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
#include <random>

#include <gtest/gtest.h>

#include "readacuity/error.hpp"

namespace readacuity {
namespace {

TEST(VisualAngle, ZeroHeightIsZeroAngle) {
  EXPECT_EQ(visual_angle(XHeight(0.0), ViewingDistance(40.0)).arcmin(), 0.0);
}

TEST(VisualAngle, SmallPrintAtFortyCentimetres) {
  // 2 * atan(0.0582 / 80) in arc minutes.
  EXPECT_NEAR(visual_angle(XHeight(0.0582), ViewingDistance(40.0)).arcmin(),
              5.001920669, 1e-8);
}

TEST(VisualAngle, ScalingHeightAndDistanceTogether) {
  const double near = visual_angle(XHeight(1.0), ViewingDistance(100.0)).arcmin();
  const double far = visual_angle(XHeight(2.0), ViewingDistance(200.0)).arcmin();
  EXPECT_NEAR(near, far, 1e-6);
}

TEST(VisualAngle, RejectsBadInputs) {
  EXPECT_THROW(XHeight(-0.1), DomainError);
  EXPECT_THROW(ViewingDistance(0.0), DomainError);
  EXPECT_THROW(ViewingDistance(-5.0), DomainError);
  EXPECT_THROW(VisualAngle(-1.0), DomainError);
  EXPECT_THROW(DecimalAcuity(0.0), DomainError);
}

TEST(VisualAngle, MonotoneInHeightAndDistance) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> h(0.01, 5.0);
  std::uniform_real_distribution<double> d(10.0, 300.0);
  for (int i = 0; i < 1000; ++i) {
    const double h1 = h(rng);
    const double d1 = d(rng);
    const double base = visual_angle(XHeight(h1), ViewingDistance(d1)).arcmin();
    EXPECT_LT(base, visual_angle(XHeight(h1 * 1.01), ViewingDistance(d1)).arcmin());
    EXPECT_GT(base, visual_angle(XHeight(h1), ViewingDistance(d1 * 1.01)).arcmin());
  }
}

TEST(LogMar, Anchors) {
  EXPECT_EQ(logmar_from_angle(VisualAngle(5.0)).logmar, 0.0);
  EXPECT_EQ(logmar_from_angle(VisualAngle(50.0)).logmar, 1.0);
  EXPECT_NEAR(logmar_from_angle(VisualAngle(2.5)).logmar, -0.30103, 1e-5);
  EXPECT_THROW(logmar_from_angle(VisualAngle(0.0)), DomainError);
}

TEST(LogMar, AngleFromLogmar) {
  EXPECT_EQ(angle_from_logmar(PrintSize{0.0}).arcmin(), 5.0);
  EXPECT_EQ(angle_from_logmar(PrintSize{1.0}).arcmin(), 50.0);
  EXPECT_NEAR(angle_from_logmar(PrintSize{0.3}).arcmin(), 9.976311575, 1e-8);
}

TEST(LogMar, RoundTripOverWideRange) {
  for (int i = 0; i <= 3000; ++i) {
    const double s = -1.0 + i * 0.001;
    EXPECT_NEAR(logmar_from_angle(angle_from_logmar(PrintSize{s})).logmar, s,
                1e-12);
  }
}

TEST(XHeight, ForStandardSizes) {
  EXPECT_NEAR(xheight_for(PrintSize{0.0}, ViewingDistance(40.0)).cm(),
              0.058177652, 1e-8);
  EXPECT_NEAR(xheight_for(PrintSize{1.0}, ViewingDistance(40.0)).cm(),
              0.581786673, 1e-8);
}

TEST(XHeight, InverseComposition) {
  const ViewingDistance d(40.0);
  const XHeight h = xheight_for(PrintSize{0.6}, d);
  EXPECT_NEAR(logmar_from_angle(visual_angle(h, d)).logmar, 0.6, 1e-9);
}

TEST(Decimal, ConversionPairs) {
  EXPECT_EQ(decimal_from_logmar(PrintSize{0.0}).value(), 1.0);
  EXPECT_EQ(logmar_from_decimal(DecimalAcuity(1.0)).logmar, 0.0);
  EXPECT_NEAR(decimal_from_logmar(PrintSize{0.3}).value(), 0.5012, 1e-4);
  EXPECT_NEAR(logmar_from_decimal(DecimalAcuity(2.0)).logmar, -0.30103, 1e-5);
}

TEST(Decimal, OrderReversingInverse) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> a(0.01, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double a1 = a(rng);
    const double a2 = a(rng);
    const double s1 = logmar_from_decimal(DecimalAcuity(a1)).logmar;
    const double s2 = logmar_from_decimal(DecimalAcuity(a2)).logmar;
    EXPECT_EQ(a1 < a2, s1 > s2);
    EXPECT_NEAR(decimal_from_logmar(PrintSize{s1}).value(), a1, 1e-12 * a1);
  }
}

TEST(DistanceShift, Examples) {
  const ViewingDistance d(33.0);
  EXPECT_EQ(distance_shift(PrintSize{0.4}, d, d).logmar, 0.4);
  EXPECT_NEAR(distance_shift(PrintSize{0.2}, ViewingDistance(25.0),
                             ViewingDistance(40.0))
                  .logmar,
              0.40411998, 1e-8);
  EXPECT_NEAR(standardize_to_40cm(PrintSize{0.5}, ViewingDistance(80.0)).logmar,
              0.19897000, 1e-8);
}

TEST(DistanceShift, Composition) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(10.0, 200.0);
  std::uniform_real_distribution<double> s(-0.5, 1.3);
  for (int i = 0; i < 1000; ++i) {
    const ViewingDistance d1(d(rng)), d2(d(rng)), d3(d(rng));
    const PrintSize size{s(rng)};
    const double two_step =
        distance_shift(distance_shift(size, d1, d2), d2, d3).logmar;
    EXPECT_NEAR(two_step, distance_shift(size, d1, d3).logmar, 1e-12);
  }
}

}  // namespace
}  // namespace readacuity
