// tests/unit/he_test.cpp
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

#include "gci/he.hpp"
#include "gci/signal_util.hpp"
#include "gci/synth.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

const WindowSpec kWin{WindowShape::blackman, 40};

TEST(CogSignal, SingleImpulse) {
  std::vector<double> h(400, 0.0);
  h[200] = 1.0;
  const auto c = cog_signal(Waveform(h, 16000.0), kWin);
  for (long n = 170; n <= 230; ++n) EXPECT_NEAR(c.values[n], 200.0 - n, 1e-12) << n;
  const auto z = zero_crossings(c.values, CrossingDirection::negative_going, c.inert);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_NEAR(z[0], 200.0, 1e-12);
}

TEST(CogSignal, ConstantEnvelopeIsZero) {
  const std::vector<double> h(600, 2.0);
  const auto c = cog_signal(Waveform(h, 16000.0), kWin);
  for (std::size_t n = 40; n < h.size() - 40; ++n) EXPECT_NEAR(c.values[n], 0.0, 1e-12);
  std::vector<double> interior(c.values.begin() + 40, c.values.end() - 40);
  EXPECT_TRUE(zero_crossings(interior, CrossingDirection::negative_going).empty());
}

TEST(CogSignal, MatchesBruteForceOnImpulseTrain) {
  const auto h = test::impulse_train(2000, 160, 37);
  const WindowSpec w{WindowShape::blackman, 88};
  const auto c = cog_signal(Waveform(h, 16000.0), w);
  const auto wt = make_window(w);
  const long N = static_cast<long>(w.half_length);
  for (long n = 0; n < 2000; n += 13) {
    double num = 0.0, den = 0.0;
    for (long m = -N; m <= N; ++m) {
      const long k = n + m;
      if (k < 0 || k >= 2000) continue;
      num += m * wt[m + N] * h[k];
      den += wt[m + N] * h[k];
    }
    if (den > 1e-9) EXPECT_NEAR(c.values[n], num / den, 1e-9) << n;
  }
  const auto z = zero_crossings(c.values, CrossingDirection::negative_going, c.inert);
  std::size_t near = 0;
  for (double t : z) {
    const double k = std::round((t - 37.0) / 160.0) * 160.0 + 37.0;
    if (std::abs(t - k) <= 0.5) ++near;
  }
  EXPECT_GE(near, 11u);
}

TEST(He, DetectsSyntheticVowelEpochs) {
  VowelSpec v;
  v.f0_hz = 100.0;
  const auto u = synthesize_vowel(v);
  const auto g = detect_he(u.speech, PitchPrior::from_f0(100.0, 16000.0));
  EXPECT_TRUE(g.is_strictly_increasing());
  EXPECT_GE(test::fraction_within(test::nearest_errors(u.epochs, g), 16.0), 0.95);
}

TEST(He, SilenceAndShortInputGiveNothing) {
  const PitchPrior p(160.0);
  EXPECT_TRUE(detect_he(Waveform(std::vector<double>(16000, 0.0), 16000.0), p).empty());
  EXPECT_TRUE(detect_he(Waveform(std::vector<double>(10, 0.1), 16000.0), p).empty());
}

TEST(He, FastVariantTracksExact) {
  VowelSpec v;
  v.f0_hz = 160.0;
  v.seed = 4;
  const auto u = synthesize_vowel(v);
  const PitchPrior p = PitchPrior::from_f0(160.0, 16000.0);
  const auto a = detect_he(u.speech, p), b = detect_he_fast(u.speech, p);
  EXPECT_GE(test::fraction_within(test::nearest_errors(a, b), 1.0), 0.97);
}

}  // namespace
}  // namespace gci
