// tests/unit/dsp_test.cpp
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
#include <numbers>

#include <gtest/gtest.h>

#include "gci/fft.hpp"
#include "gci/hilbert.hpp"
#include "gci/lpc.hpp"
#include "gci/resample.hpp"
#include "gci/signal_util.hpp"
#include "gci/window.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

using std::numbers::pi;

TEST(Lpc, RecoversKnownAr2) {
  const double r = 0.9, w = 0.3 * pi;
  LpcModel gen;
  gen.order = 2;
  gen.coefficients = {-2.0 * r * std::cos(w), r * r};  // A(z) = 1 + a1 z^-1 + a2 z^-2
  // One second gives a standard error near 5e-3 per coefficient, so single
  // realizations miss 1e-2 now and then. Average eight.
  double a1 = 0.0, a2 = 0.0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto x = synthesis_filter(test::white(16000, seed), gen);
    const auto m = levinson_durbin(autocorrelation(x, 2), 2);
    ASSERT_EQ(m.coefficients.size(), 2u);
    a1 += m.coefficients[0] / 8.0;
    a2 += m.coefficients[1] / 8.0;
  }
  EXPECT_NEAR(a1, gen.coefficients[0], 1e-2);
  EXPECT_NEAR(a2, gen.coefficients[1], 1e-2);
}

TEST(Lpc, WhiteNoiseGivesSmallCoefficients) {
  const auto x = test::white(16000, 5);
  const auto m = levinson_durbin(autocorrelation(x, 2), 2);
  for (double a : m.coefficients) EXPECT_LT(std::abs(a), 0.05);
}

TEST(Lpc, SilentFrameIsIdentity) {
  const std::vector<double> z(400, 0.0);
  const auto m = levinson_durbin(autocorrelation(z, 18), 18);
  for (double a : m.coefficients) EXPECT_EQ(a, 0.0);
  Waveform x(std::vector<double>(4000, 0.0), 16000.0);
  const auto e = lp_residual(x, LpcConfig::for_rate(16000.0));
  for (double v : e.samples) EXPECT_EQ(v, 0.0);
}

TEST(Lpc, OrderNotBelowFrameLengthIsRejected) {
  LpcConfig c;
  c.order = 400;
  c.frame_len = 400;
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Lpc, ResidualPeaksAtImpulses) {
  LpcModel tract;
  tract.order = 10;
  // Five resonances, poles at radius 0.95.
  std::vector<double> a{1.0};
  for (double f : {500.0, 1500.0, 2500.0, 3500.0, 4500.0}) {
    const double w = 2.0 * pi * f / 16000.0, c1 = -2.0 * 0.95 * std::cos(w), c2 = 0.9025;
    std::vector<double> b(a.size() + 2, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[i] += a[i];
      b[i + 1] += c1 * a[i];
      b[i + 2] += c2 * a[i];
    }
    a = b;
  }
  tract.coefficients.assign(a.begin() + 1, a.end());
  const auto e = test::impulse_train(16000, 160, 80);
  Waveform x(synthesis_filter(e, tract), 16000.0);
  const auto res = lp_residual(x, LpcConfig::for_rate(16000.0));
  const double r = rms(std::span<const double>(res.samples).subspan(800, 14000));
  for (std::size_t t = 1040; t < 15000; t += 160) {
    double peak = 0.0;
    for (std::size_t k = t - 2; k <= t + 2; ++k) peak = std::max(peak, std::abs(res.samples[k]));
    EXPECT_GT(peak / r, 5.0) << "at " << t;
  }
}

TEST(Hilbert, CosineHasUnitEnvelope) {
  std::vector<double> x(4096);
  for (std::size_t n = 0; n < x.size(); ++n) x[n] = std::cos(0.25 * pi * n);
  const auto env = hilbert_envelope(x, kHilbertMaxBlock);
  for (std::size_t n = 200; n < x.size() - 200; ++n) EXPECT_NEAR(env[n], 1.0, 1e-3);
}

TEST(Hilbert, ImpulseEnvelopePeaksAtImpulse) {
  std::vector<double> x(1024, 0.0);
  x[300] = 1.0;
  const auto env = hilbert_envelope(x, kHilbertMaxBlock);
  EXPECT_EQ(std::max_element(env.begin(), env.end()) - env.begin(), 300);
}

TEST(Hilbert, AmplitudeModulatedTone) {
  const std::size_t n = 8192;
  std::vector<double> x(n), a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = 1.0 + 0.5 * std::sin(2.0 * pi * i / 2048.0);
    x[i] = a[i] * std::cos(0.3 * pi * i);
  }
  const auto env = hilbert_envelope(x, kHilbertMaxBlock);
  for (std::size_t i = 500; i < n - 500; ++i) EXPECT_NEAR(env[i], a[i], 0.02 * a[i]);
}

TEST(ZeroCrossings, SineCrossesAtMultiplesOfPeriod) {
  std::vector<double> x(1000);
  for (std::size_t n = 0; n < x.size(); ++n) x[n] = std::sin(2.0 * pi * n / 100.0 + 0.01);
  const auto c = zero_crossings(x, CrossingDirection::positive_going);
  ASSERT_EQ(c.size(), 9u);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(c[k], 100.0 * (k + 1), 0.5);
}

TEST(ZeroCrossings, ConstantHasNone) {
  const std::vector<double> x(100, 0.3);
  EXPECT_TRUE(zero_crossings(x, CrossingDirection::positive_going).empty());
  EXPECT_TRUE(zero_crossings(x, CrossingDirection::negative_going).empty());
}

TEST(ZeroCrossings, RampMatchesLinearInterpolation) {
  std::vector<double> x(20);
  for (std::size_t n = 0; n < x.size(); ++n) x[n] = 3.3 - 0.7 * n;  // zero at 4.714...
  const auto c = zero_crossings(x, CrossingDirection::negative_going);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c[0], 3.3 / 0.7, 1e-12);
  EXPECT_TRUE(zero_crossings(x, CrossingDirection::positive_going).empty());
}

TEST(Window, SymmetricWithUnitPeak) {
  for (auto s : {WindowShape::blackman, WindowShape::hamming, WindowShape::hann,
                 WindowShape::rectangular}) {
    const auto w = make_window(odd_window(s, 40.0));
    ASSERT_EQ(w.size() % 2, 1u);
    EXPECT_DOUBLE_EQ(*std::max_element(w.begin(), w.end()), 1.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_NEAR(w[i], w[w.size() - 1 - i], 1e-15);
      EXPECT_GE(w[i], 0.0);
    }
    const auto p = make_periodic_window(s, 64);
    EXPECT_DOUBLE_EQ(p[32], 1.0);
  }
}

TEST(Fft, ConvolutionMatchesDirectSum) {
  const auto a = test::white(300, 1), b = test::white(77, 2);
  const auto c = fft_convolve(a, b);
  ASSERT_EQ(c.size(), a.size() + b.size() - 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    double s = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (n >= k && n - k < a.size()) s += a[n - k] * b[k];
    EXPECT_NEAR(c[n], s, 1e-9);
  }
}

TEST(Resample, PreservesLowFrequencyTone) {
  std::vector<double> x(44100);
  for (std::size_t n = 0; n < x.size(); ++n) x[n] = std::sin(2.0 * pi * 440.0 * n / 44100.0);
  const auto y = resample(Waveform(x, 44100.0), 16000.0);
  EXPECT_DOUBLE_EQ(y.sample_rate_hz, 16000.0);
  EXPECT_NEAR(static_cast<double>(y.size()), 16000.0, 2.0);
  for (std::size_t n = 500; n < 15000; n += 97)
    EXPECT_NEAR(y.samples[n], std::sin(2.0 * pi * 440.0 * n / 16000.0), 2e-3);
}

}  // namespace
}  // namespace gci
