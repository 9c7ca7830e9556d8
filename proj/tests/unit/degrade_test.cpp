// tests/unit/degrade_test.cpp
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


#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gci/degrade.hpp"
#include "gci/signal_util.hpp"
#include "gci/synth.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

Waveform tone(std::size_t n, double f = 440.0) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::sqrt(2.0) * std::sin(2.0 * std::numbers::pi * f * i / 16000.0);
  return Waveform(x, 16000.0);
}

TEST(Noise, VeryHighSnrIsTransparent) {
  const auto x = tone(16000);
  NoiseSpec s;
  s.snr_db = 200.0;
  const auto y = add_noise(x, s);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y.samples[i], x.samples[i], 1e-6);
}

TEST(Noise, ZeroDbOnUnitRmsTone) {
  const auto x = tone(32000);
  NoiseSpec s;
  s.snr_db = 0.0;
  s.seed = 3;
  const auto y = add_noise(x, s);
  std::vector<double> n(x.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = y.samples[i] - x.samples[i];
  EXPECT_NEAR(rms(n), rms(x.samples), 0.01 * rms(x.samples));
}

TEST(Noise, RealizedSegmentalSnrOnSuite) {
  for (const auto& u : synthetic_suite(6.0, 2)) {
    for (double snr : {0.0, 10.0, 20.0}) {
      NoiseSpec s;
      s.snr_db = snr;
      s.seed = 77;
      const auto y = add_noise(u.speech, s);
      std::vector<double> n(y.size());
      for (std::size_t i = 0; i < n.size(); ++i) n[i] = y.samples[i] - u.speech.samples[i];
      EXPECT_NEAR(segmental_snr_db(u.speech.samples, n, 512), snr, 0.1) << u.id;
    }
  }
}

TEST(Noise, ShortExternalNoiseIsTiled) {
  const auto x = tone(24000);
  NoiseSpec s;
  s.kind = NoiseKind::external;
  s.snr_db = 5.0;
  s.seed = 4;
  s.noise = Waveform(test::white(3000, 12), 16000.0);
  const auto y = add_noise(x, s);
  std::vector<double> n(y.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = y.samples[i] - x.samples[i];
  EXPECT_NEAR(segmental_snr_db(x.samples, n, 512), 5.0, 0.1);
}

TEST(Noise, SameSeedIsBitReproducible) {
  const auto x = tone(8000);
  NoiseSpec s;
  s.snr_db = 3.0;
  s.seed = 99;
  EXPECT_EQ(add_noise(x, s).samples, add_noise(x, s).samples);
  NoiseSpec t = s;
  t.seed = 100;
  EXPECT_NE(add_noise(x, s).samples, add_noise(x, t).samples);
}

TEST(Noise, InvalidInputs) {
  NoiseSpec s;
  EXPECT_THROW(add_noise(Waveform(std::vector<double>(1000, 0.0), 16000.0), s), InvalidArgument);
  s.kind = NoiseKind::external;
  EXPECT_THROW(s.validate(), InvalidArgument);
}

TEST(Rir, DirectPathOnly) {
  RoomSpec r;
  r.reflection_override = 0.0;
  const auto h = simulate_rir(r, 16000.0);
  const double d = std::sqrt(1.0 + 1.4 * 1.4);
  double sum = 0.0, off = 0.0;
  for (std::size_t k = 0; k < h.taps.size(); ++k) {
    sum += h.taps[k];
    if (std::abs(static_cast<double>(k) - static_cast<double>(h.direct_index)) > 33.0)
      off = std::max(off, std::abs(h.taps[k]));
  }
  EXPECT_EQ(h.direct_index, static_cast<std::size_t>(std::lround(d / 343.0 * 16000.0)));
  EXPECT_NEAR(sum, 1.0 / (4.0 * std::numbers::pi * d), 1e-3 / d);
  EXPECT_EQ(off, 0.0);
}

TEST(Rir, InverseDistanceLaw) {
  RoomSpec a, b;
  a.reflection_override = b.reflection_override = 0.0;
  a.source = {1.0, 1.0, 1.0};
  a.mic = {1.5, 1.0, 1.0};
  b.source = {1.0, 1.0, 1.0};
  b.mic = {2.0, 1.0, 1.0};  // an integer number of samples away in neither case
  auto total = [](const Rir& h) {
    double s = 0.0;
    for (double v : h.taps) s += v;
    return s;
  };
  EXPECT_NEAR(total(simulate_rir(a, 16000.0)) / total(simulate_rir(b, 16000.0)), 2.0, 2e-3);
}

TEST(Rir, SchroederDecayMatchesT60) {
  for (double t60 : {0.1, 0.3, 0.5}) {
    RoomSpec r;
    r.t60 = t60;
    const auto h = simulate_rir(r, 16000.0);
    std::vector<double> edc(h.taps.size() + 1, 0.0);
    for (std::size_t k = h.taps.size(); k-- > 0;) edc[k] = edc[k + 1] + h.taps[k] * h.taps[k];
    const double e0 = edc[h.direct_index];
    // Time between -5 and -25 dB, extrapolated to 60 dB.
    double t5 = -1.0, t25 = -1.0;
    for (std::size_t k = h.direct_index; k < h.taps.size(); ++k) {
      const double db = 10.0 * std::log10(edc[k] / e0);
      if (t5 < 0.0 && db <= -5.0) t5 = k / 16000.0;
      if (t25 < 0.0 && db <= -25.0) t25 = k / 16000.0;
    }
    ASSERT_GT(t25, t5);
    EXPECT_NEAR(3.0 * (t25 - t5), t60, 0.15 * t60);
    // Monotone after the direct path.
    for (std::size_t k = h.direct_index + 1; k < edc.size(); ++k) EXPECT_LE(edc[k], edc[k - 1]);
  }
}

TEST(Rir, SabineCannotReachShortT60) {
  RoomSpec r;
  r.model = AbsorptionModel::sabine;
  r.t60 = 0.05;
  EXPECT_THROW(wall_reflection(r), InvalidArgument);
  r.model = AbsorptionModel::eyring;
  EXPECT_GT(wall_reflection(r), 0.0);
  EXPECT_LT(wall_reflection(r), 1.0);
}

TEST(Rir, InvalidGeometry) {
  RoomSpec r;
  r.mic = {9.0, 1.0, 1.0};
  EXPECT_THROW(simulate_rir(r, 16000.0), InvalidArgument);
}

TEST(Convolve, DeltaAndDelayedDelta) {
  const Waveform x(test::white(1000, 2), 16000.0);
  Rir d;
  d.taps = {1.0};
  const auto y0 = convolve_rir(x, d);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y0.samples[i], x.samples[i], 1e-12);
  Rir late;
  late.taps.assign(50, 0.0);
  late.taps[37] = 0.5;
  late.direct_index = 37;
  const auto y = convolve_rir(x, late);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y.samples[i], x.samples[i], 1e-12);
}

TEST(Convolve, MatchesDirectConvolution) {
  const Waveform x(test::white(3000, 5), 16000.0);
  Rir h;
  h.taps = test::white(400, 6);
  h.direct_index = 10;
  const auto y = convolve_rir(x, h);
  std::vector<double> ref(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t n = i + h.direct_index;
    double s = 0.0;
    for (std::size_t k = 0; k < h.taps.size() && k <= n; ++k)
      if (n - k < x.size()) s += x.samples[n - k] * h.taps[k];
    ref[i] = s;
  }
  double px = 0.0, pr = 0.0;
  for (double v : x.samples) px = std::max(px, std::abs(v));
  for (double v : ref) pr = std::max(pr, std::abs(v));
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(y.samples[i], ref[i] * px / pr, 1e-9);
}

}  // namespace
}  // namespace gci
