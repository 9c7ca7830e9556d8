// tests/unit/group_delay_test.cpp
//
// Copyright 2026  The gcikit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.


#include <cmath>

#include <gtest/gtest.h>

#include "gci/group_delay.hpp"
#include "gci/window.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

TEST(Ewgd, DeltaGivesItsOffset) {
  const std::size_t R = 24;
  std::vector<double> e(200, 0.0);
  e[100] = 1.0;
  for (auto shape : {WindowShape::rectangular, WindowShape::hamming}) {
    const auto d = ewgd(e, R, shape);
    for (std::size_t n = 100 - R + 1; n <= 100; ++n) {
      const double r0 = 100.0 - n;
      EXPECT_NEAR(d.values[n], r0 - (R - 1) / 2.0, 1e-9) << n;
    }
  }
}

TEST(Ewgd, ConstantResidualIsZeroAndEmptyIsInert) {
  const std::vector<double> e(300, 0.7);
  const auto d = ewgd(e, 32, WindowShape::hamming);
  for (std::size_t n = 0; n + 32 <= e.size(); ++n) EXPECT_NEAR(d.values[n], 0.0, 1e-9);
  const auto z = ewgd(std::vector<double>(100, 0.0), 16);
  for (std::size_t n = 0; n < z.values.size(); ++n) {
    EXPECT_EQ(z.values[n], 0.0);
    EXPECT_TRUE(z.inert[n]);
  }
}

TEST(Ewgd, SlidingSumsMatchSpectralEvaluation) {
  const std::size_t R = 64;
  const auto e = test::white(3000, 11);
  for (auto shape : {WindowShape::rectangular, WindowShape::hamming}) {
    const auto d = ewgd(e, R, shape);
    const auto w = make_symmetric_window(shape, R);
    for (std::size_t n = 0; n + R <= e.size(); n += 37) {
      std::vector<double> frame(R);
      for (std::size_t r = 0; r < R; ++r) frame[r] = w[r] * e[n + r];
      const double s = group_delay_spectral(frame);
      const double c = (R - 1) / 2.0;
      EXPECT_NEAR(d.values[n] + c, s + c, 1e-9 * (s + c)) << n;
    }
  }
}

TEST(Projection, CrossingsOfSawtooth) {
  GroupDelay d;
  d.window_length = 20;
  for (int n = 0; n < 200; ++n) d.values.push_back(9.7 - (n % 20));  // falls through 0 at n%20 = 9.7
  d.inert.assign(d.values.size(), 0);
  const auto c = phase_slope_project(d);
  ASSERT_EQ(c.size(), 10u);
  for (std::size_t k = 0; k < c.size(); ++k) {
    EXPECT_EQ(c[k].origin, CandidateOrigin::zero_crossing);
    EXPECT_NEAR(c[k].time, 20.0 * k + 9.7, 1e-12);
  }
}

TEST(Projection, DipWithoutCrossingIsProjected) {
  GroupDelay d;
  d.values = {0.5, 0.3, 0.1, -0.1, -0.3, -0.2, -0.1, -0.15, -0.2, -0.25};
  d.inert.assign(d.values.size(), 0);
  // Negative-going crossing between 2 and 3, local minimum -0.3 at 4, local
  // maximum -0.1 at 6.
  const auto c = phase_slope_project(d, 100.0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].origin, CandidateOrigin::zero_crossing);
  EXPECT_NEAR(c[0].time, 102.5, 1e-12);
  EXPECT_EQ(c[1].origin, CandidateOrigin::projected);
  EXPECT_NEAR(c[1].time, 100.0 + 5.0 + (-0.3 - 0.1) / 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(c[1].slope, -1.0);
}

TEST(Projection, MonotoneHasNoCandidates) {
  GroupDelay up;
  for (int n = 0; n < 50; ++n) up.values.push_back(-5.0 + 0.2 * n);
  up.inert.assign(up.values.size(), 0);
  EXPECT_TRUE(phase_slope_project(up).empty());
}

TEST(Projection, PhaseSlopeCost) {
  EXPECT_DOUBLE_EQ(cost_phase_slope(-1.0), -0.5);
  EXPECT_DOUBLE_EQ(cost_phase_slope(-1.5), 0.0);
  EXPECT_DOUBLE_EQ(cost_phase_slope(3.0), 0.5);
}

}  // namespace
}  // namespace gci
