// tests/unit/zfr_test.cpp
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
#include <random>

#include <gtest/gtest.h>

#include "gci/lpc.hpp"
#include "gci/signal_util.hpp"
#include "gci/synth.hpp"
#include "gci/zfr.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

// An impulse response of (1 - z^-1)^-4 is C(n+3, 3).
TEST(Zfr, ResonatorImpulseResponseIsCubic) {
  std::vector<double> x(500, 0.0);
  x[0] = 1.0;
  const auto y = zero_frequency_resonators(x);
  for (std::size_t n = 0; n < y.size(); ++n) {
    const double c = (n + 1.0) * (n + 2.0) * (n + 3.0) / 6.0;
    EXPECT_NEAR(y[n], c, 1e-9 * c) << n;
  }
}

TEST(Zfr, PrintedRecursionDiverges) {
  std::vector<double> x(200, 0.0);
  x[0] = 1.0;
  const auto y = zero_frequency_resonators(x, true);
  EXPECT_GT(std::abs(y.back()), 1e60);
}

TEST(Zfr, ZeroInputGivesZeroOutput) {
  const Waveform x(std::vector<double>(8000, 0.0), 16000.0);
  const auto z = zfr_signal(x, PitchPrior(160.0));
  for (double v : z.values) EXPECT_EQ(v, 0.0);
  EXPECT_TRUE(detect_zfr(x, PitchPrior(160.0)).empty());
}

TEST(Zfr, ShortInputIsRejected) {
  const Waveform x(std::vector<double>(500, 0.1), 16000.0);
  EXPECT_THROW(zfr_signal(x, PitchPrior(160.0)), InvalidArgument);
  EXPECT_TRUE(detect_zfr(x, PitchPrior(160.0)).empty());
}

TEST(Zfr, OneCrossingPerPeriodOfImpulseTrain) {
  const Waveform x(test::impulse_train(16000, 160, 80), 16000.0);
  const auto z = zfr_signal(x, PitchPrior(160.0));
  EXPECT_EQ(z.trend_window_samples % 2, 1u);
  EXPECT_GE(z.trend_window_samples, 240u);
  const auto c = zero_crossings(z.values, CrossingDirection::positive_going);
  const double w = static_cast<double>(z.trend_window_samples);
  std::size_t interior = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] < 2.0 * w || c[k] > 16000.0 - 2.0 * w) continue;
    ++interior;
    if (c[k - 1] >= 2.0 * w) EXPECT_NEAR(c[k] - c[k - 1], 160.0, 1.0);
  }
  EXPECT_GE(interior, 85u);
}

TEST(Zfr, TrendRemovalLeavesZeroLocalMean) {
  VowelSpec v;
  v.f0_hz = 130.0;
  const auto u = synthesize_vowel(v);
  const auto z = zfr_signal(u.speech, PitchPrior::from_f0(130.0, 16000.0));
  const std::span<const double> s(z.values);
  const double r = rms(s);
  const std::size_t span = 16 * z.trend_window_samples;
  for (std::size_t a = span; a + 2 * span < s.size(); a += span)
    EXPECT_LT(std::abs(mean(s.subspan(a, span))), 1e-2 * r);
}

// Impulses of negative sign through a random all-pole tract.
TEST(Zfr, ImpulseExcitedVowelEpochs) {
  std::mt19937_64 rng(5);
  const auto a = random_formant_tract(rng, 16000.0);
  LpcModel m;
  m.order = a.size() - 1;
  m.coefficients.assign(a.begin() + 1, a.end());
  std::vector<double> e(32000, 0.0);
  GciSequence truth;
  for (std::size_t t = 60; t + 60 < e.size(); t += 160) {
    e[t] = -1.0;
    truth.instants.push_back(static_cast<double>(t));
  }
  const Waveform x(synthesis_filter(e, m), 16000.0);
  const auto g = detect_zfr(x, PitchPrior(160.0));
  EXPECT_GE(test::fraction_within(test::nearest_errors(truth, g), 8.0), 0.99);
}

// On glottal-pulse excitation the crossing sits at a fixed phase of the
// cycle ahead of closure. The spread around it stays tight.
TEST(Zfr, GlottalPulseVowelHasConsistentOffset) {
  for (double f0 : {100.0, 160.0, 220.0}) {
    VowelSpec v;
    v.f0_hz = f0;
    const auto u = synthesize_vowel(v);
    const auto g = detect_zfr(u.speech, PitchPrior::from_f0(f0, 16000.0));
    const auto err = test::nearest_errors(u.epochs, g);
    const double off = test::median_of(err);
    EXPECT_LT(off, 0.0) << f0;
    EXPECT_GT(off, -0.25 * 16000.0 / f0) << f0;
    EXPECT_GE(test::fraction_within(err, 8.0, off), 0.97) << f0;
    EXPECT_NEAR(static_cast<double>(g.size()), static_cast<double>(u.epochs.size()), 2.0);
  }
}

TEST(Zfr, Linearity) {
  const auto a = test::white(8000, 1), b = test::white(8000, 2);
  std::vector<double> s(8000);
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = 2.0 * a[n] - 0.5 * b[n];
  const PitchPrior p(150.0);
  const auto za = zfr_signal(Waveform(a, 16000.0), p).values;
  const auto zb = zfr_signal(Waveform(b, 16000.0), p).values;
  const auto zs = zfr_signal(Waveform(s, 16000.0), p).values;
  double peak = 0.0, worst = 0.0;
  for (std::size_t n = 0; n < zs.size(); ++n) {
    peak = std::max(peak, std::abs(zs[n]));
    worst = std::max(worst, std::abs(zs[n] - (2.0 * za[n] - 0.5 * zb[n])));
  }
  EXPECT_LE(worst, 1e-12 * peak);
}

}  // namespace
}  // namespace gci
