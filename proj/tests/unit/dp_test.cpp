// tests/unit/dp_test.cpp
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
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "gci/dp.hpp"
#include "gci/dypsa.hpp"
#include "gci/synth.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

struct Lattice {
  std::vector<double> times, unary;
  DpConfig cfg;
  DpCosts costs;
};

Lattice random_lattice(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Lattice l;
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t += 20.0 + 200.0 * u(rng);
    l.times.push_back(t);
    l.unary.push_back(u(rng) - 0.8);
  }
  l.cfg = {60.0, 300.0, 300.0, 0.1};
  const auto times = l.times;
  const auto unary = l.unary;
  l.costs.unary = [unary](std::size_t i) { return unary[i]; };
  l.costs.pair = [times](std::size_t j, std::size_t i) {
    return 0.3 * std::sin(times[i] * 0.37 + times[j]);
  };
  l.costs.triple = [times](std::size_t k, std::size_t j, std::size_t i) {
    return 0.4 * cost_pitch_deviation(times[k], times[j], times[i]);
  };
  return l;
}

TEST(Dp, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto l = random_lattice(rng, 1 + trial % 12);
    const auto sel = dp_select_indices(l.times, l.cfg, l.costs);
    const double got = selection_cost(sel, l.times, l.cfg, l.costs);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = l.times.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i);
      best = std::min(best, selection_cost(s, l.times, l.cfg, l.costs));
    }
    EXPECT_NEAR(got, best, 1e-9) << "trial " << trial;
  }
}

TEST(Dp, EmptyLattice) {
  DpCosts c{[](std::size_t) { return 0.0; }, [](std::size_t, std::size_t) { return 0.0; },
            [](std::size_t, std::size_t, std::size_t) { return 0.0; }};
  EXPECT_TRUE(dp_select_indices({}, {60.0, 300.0, 300.0, 0.0}, c).empty());
}

TEST(Dp, PitchDeviationCost) {
  EXPECT_DOUBLE_EQ(cost_pitch_deviation(0.0, 100.0, 200.0), 0.0);
  EXPECT_NEAR(cost_pitch_deviation(0.0, 100.0, 250.0), 50.0 / 125.0, 1e-15);
  EXPECT_DOUBLE_EQ(cost_pitch_deviation(0.0, 100.0, 1000.0), 0.5);
}

class Selection : public ::testing::Test {
 protected:
  void SetUp() override {
    VowelSpec v;
    v.f0_hz = 120.0;
    v.duration_s = 0.3;
    v.seed = 12;
    u_ = synthesize_vowel(v);
    prior_ = PitchPrior::from_f0(v.f0_hz, 16000.0);
  }
  std::vector<Candidate> truth() const {
    std::vector<Candidate> c;
    for (double t : u_.epochs.instants) {
      Candidate k;
      k.time = t;
      c.push_back(k);
    }
    return c;
  }
  SyntheticUtterance u_;
  PitchPrior prior_;
};

TEST_F(Selection, KeepsExactlyTheTrueEpochs) {
  const auto g = dp_select(truth(), u_.speech, prior_, CostWeights{});
  EXPECT_EQ(g.instants, u_.epochs.instants);
}

TEST_F(Selection, RejectsLowEnergySpuriousCandidate) {
  auto c = truth();
  const auto& e = u_.epochs.instants;
  const std::size_t k = e.size() / 2;
  // The late half of a cycle carries the least energy.
  Candidate s;
  s.time = std::round(e[k] + 0.6 * (e[k + 1] - e[k]));
  c.insert(c.begin() + static_cast<long>(k) + 1, s);
  const auto g = dp_select(c, u_.speech, prior_, CostWeights{});
  EXPECT_EQ(g.instants, e);
}

}  // namespace
}  // namespace gci
