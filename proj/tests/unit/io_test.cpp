// tests/unit/io_test.cpp
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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "gci/experiment.hpp"
#include "gci/pitch.hpp"
#include "gci/polarity.hpp"
#include "gci/synth.hpp"
#include "gci/wav.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

namespace fs = std::filesystem;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcikit_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

using Wav = TempDir;

TEST_F(Wav, SixteenBitRoundTrip) {
  auto x = test::white(5000, 1, 0.2);
  x[10] = 2.0;  // clips
  const Waveform w(x, 22050.0);
  EXPECT_EQ(write_wav(path("a.wav"), w), 1u);
  const auto r = read_wav(path("a.wav"));
  EXPECT_DOUBLE_EQ(r.sample_rate_hz, 22050.0);
  ASSERT_EQ(r.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (i != 10) EXPECT_NEAR(r.samples[i], x[i], 1.0 / 32768.0);
  EXPECT_NEAR(r.samples[10], 32767.0 / 32768.0, 1e-12);
}

TEST_F(Wav, RejectsMissingAndMalformedFiles) {
  EXPECT_THROW(read_wav(path("none.wav")), Error);
  std::ofstream(path("bad.wav")) << "RIFF0000WAVEjunk";
  EXPECT_THROW(read_wav(path("bad.wav")), Error);
}

using Manifest = TempDir;

TEST_F(Manifest, ParsesEntriesAndSpeakers) {
  const auto m = parse_manifest(R"({
    "speakers": {"bdl": {"f0_mean_hz": 120}},
    "entries": [
      {"id": "a1", "speech": "wav/a1.wav", "egg": "egg/a1.wav", "speaker": "bdl", "delay_ms": 0.6},
      {"speech": "/abs/b.wav", "speaker": "slt"}
    ]})",
                                "/data");
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].id, "a1");
  EXPECT_EQ(fs::path(m.entries[0].speech_path), fs::path("/data/wav/a1.wav"));
  EXPECT_EQ(fs::path(m.entries[0].egg_path), fs::path("/data/egg/a1.wav"));
  EXPECT_DOUBLE_EQ(*m.entries[0].delay_ms, 0.6);
  EXPECT_EQ(m.entries[1].speech_path, "/abs/b.wav");
  EXPECT_TRUE(m.entries[1].egg_path.empty());
  EXPECT_FALSE(m.entries[1].id.empty());
  EXPECT_DOUBLE_EQ(m.speaker_f0_hz.at("bdl"), 120.0);
  EXPECT_THROW(parse_manifest("{\"entries\": [{}]}", "."), Error);
  EXPECT_THROW(parse_manifest("not json", "."), Error);
}

TEST_F(Manifest, LoadsFilesAndReportsBadOnes) {
  VowelSpec v;
  v.duration_s = 0.5;
  const auto u = synthesize_vowel(v);
  write_wav(path("s.wav"), u.speech);
  write_wav(path("e.wav"), u.egg);
  std::ofstream(path("m.json")) << R"({"entries": [
      {"id": "ok", "speech": "s.wav", "egg": "e.wav", "speaker": "x"},
      {"id": "missing", "speech": "nope.wav", "speaker": "x"}]})";
  std::vector<std::string> errors;
  const auto utts = load_utterances(load_manifest(path("m.json")), &errors);
  ASSERT_EQ(utts.size(), 1u);
  EXPECT_EQ(utts[0].id, "ok");
  EXPECT_TRUE(utts[0].egg.has_value());
  EXPECT_EQ(errors.size(), 1u);
}

TEST(Polarity, PositiveVowelUnchangedAndNegatedFlipped) {
  VowelSpec v;
  v.duration_s = 1.0;
  const auto u = synthesize_vowel(v);
  const auto a = ensure_polarity(u.speech);
  EXPECT_FALSE(a.flipped);
  EXPECT_EQ(a.waveform.samples, u.speech.samples);
  Waveform neg = u.speech;
  for (double& s : neg.samples) s = -s;
  const auto b = ensure_polarity(neg);
  EXPECT_TRUE(b.flipped);
  EXPECT_EQ(b.waveform.samples, u.speech.samples);
}

TEST(Polarity, Idempotent) {
  for (const auto& u : synthetic_suite(6.0, 3)) {
    for (double sign : {1.0, -1.0}) {
      Waveform x = u.speech;
      for (double& s : x.samples) s *= sign;
      const auto once = ensure_polarity(x);
      const auto twice = ensure_polarity(once.waveform);
      EXPECT_FALSE(twice.flipped);
      EXPECT_EQ(once.waveform.samples, twice.waveform.samples);
    }
  }
}

TEST(Polarity, AmbiguousAndShortSignalsAreLeftAlone) {
  const auto r = ensure_polarity(Waveform(std::vector<double>(100, 0.1), 16000.0));
  EXPECT_FALSE(r.flipped);
  const Waveform sym(test::white(16000, 3), 16000.0);
  const auto s = ensure_polarity(sym, std::nullopt, 10.0);
  EXPECT_TRUE(s.ambiguous);
  EXPECT_FALSE(s.flipped);
}

TEST(Pitch, AutocorrelationPrior) {
  for (double f0 : {90.0, 140.0, 230.0}) {
    VowelSpec v;
    v.f0_hz = f0;
    v.duration_s = 1.0;
    const auto p = estimate_pitch_prior(synthesize_vowel(v).speech);
    EXPECT_NEAR(p.f0_hz(16000.0), f0, 0.05 * f0);
  }
}

TEST(Pitch, PriorFromReference) {
  GciSequence g{{0.0, 100.0, 200.0, 300.0, 2000.0, 2100.0}, ""};
  EXPECT_DOUBLE_EQ(prior_from_reference(g, 16000.0).mean_period_samples, 100.0);
  EXPECT_THROW(prior_from_reference(GciSequence{{0.0}, ""}, 16000.0), Error);
  EXPECT_THROW(PitchPrior::from_f0(560.0, 16000.0).validate(16000.0), InvalidArgument);
}

}  // namespace
}  // namespace gci
