// tests/unit/reference_test.cpp
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

#include "gci/evaluation.hpp"
#include "gci/reference.hpp"
#include "gci/synth.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

TEST(ReferencePeaks, SyntheticEggClosures) {
  VowelSpec v;
  v.f0_hz = 140.0;
  v.duration_s = 1.0;
  const auto u = synthesize_vowel(v);
  const PitchPrior p = PitchPrior::from_f0(140.0, 16000.0);
  const auto g = reference_gcis(u.egg, p);
  ASSERT_EQ(g.size(), u.epochs.size());
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g.instants[i], u.epochs.instants[i], 1.0);
}

TEST(ReferencePeaks, ConstantEggHasNone) {
  const Waveform egg(std::vector<double>(8000, 0.3), 16000.0);
  EXPECT_TRUE(reference_gcis(egg, PitchPrior(160.0)).empty());
}

TEST(ReferencePeaks, StrengthsGateWeakCycles) {
  VowelSpec v;
  v.duration_s = 1.0;
  auto u = synthesize_vowel(v);
  for (std::size_t n = 8000; n < 10000; ++n) u.egg.samples[n] *= 0.01;
  const auto rc = reference_cycles_from_egg(u.egg, PitchPrior::from_f0(v.f0_hz, 16000.0));
  EXPECT_LT(rc.voiced_count(), rc.cycles.size());
}

TEST(Delay, DelayedCopy) {
  const auto a = test::white(4000, 6);
  std::vector<double> b(4000, 0.0);
  for (std::size_t n = 12; n < b.size(); ++n) b[n] = a[n - 12];
  const auto d = estimate_delay(a, b, 40);
  EXPECT_EQ(d.delay, 12);
  EXPECT_GT(d.confidence, 0.99);
}

// With an abrupt closure the residual peak sits on the epoch.
TEST(Delay, SyntheticPairWithKnownOffset) {
  VowelSpec v;
  v.f0_hz = 120.0;
  v.return_ms = 0.02;
  v.egg_delay = 11;  // 0.6875 ms
  const auto u = synthesize_vowel(v);
  const auto d = align_egg(u.speech, u.egg, 5.0);
  EXPECT_NEAR(static_cast<double>(d.delay), 0.7 * 16.0, 1.0);
}

// A return phase moves the residual peak a fixed amount past the epoch. The
// bias is constant, so delay differences stay exact.
TEST(Delay, ReturnPhaseBiasIsConstant) {
  for (double f0 : {100.0, 220.0}) {
    long base = 0;
    for (long delay : {0L, 5L, 20L}) {
      VowelSpec v;
      v.f0_hz = f0;
      v.egg_delay = delay;
      const auto d = align_egg(synthesize_vowel(v).speech, synthesize_vowel(v).egg, 5.0);
      if (delay == 0) {
        base = d.delay;
        EXPECT_GE(base, 0);
        EXPECT_LE(base, 3);
      }
      EXPECT_EQ(d.delay - base, delay) << f0;
    }
  }
}

TEST(Delay, UnrelatedNoiseIsRejected) {
  const Waveform a(test::white(16000, 1), 16000.0), b(test::white(16000, 2), 16000.0);
  EXPECT_THROW(align_egg(a, b, 5.0), AlignmentError);
}

}  // namespace
}  // namespace gci
