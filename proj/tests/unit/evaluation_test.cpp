// tests/unit/evaluation_test.cpp
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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "gci/evaluation.hpp"
#include "gci/experiment.hpp"
#include "gci/signal_util.hpp"
#include "test_util.hpp"

namespace gci {
namespace {

GciSequence regular(std::size_t n, double period, double first) {
  GciSequence g;
  for (std::size_t i = 0; i < n; ++i) g.instants.push_back(first + period * i);
  return g;
}

TEST(Cycles, MidpointBoundariesAndPadding) {
  const auto rc = make_reference_cycles(GciSequence{{100.0, 260.0, 400.0}, ""}, 16000.0);
  ASSERT_EQ(rc.cycles.size(), 3u);
  EXPECT_DOUBLE_EQ(rc.cycles[0].lo, 20.0);
  EXPECT_DOUBLE_EQ(rc.cycles[0].hi, 180.0);
  EXPECT_DOUBLE_EQ(rc.cycles[1].hi, 330.0);
  EXPECT_DOUBLE_EQ(rc.cycles[2].hi, 470.0);
  EXPECT_TRUE(make_reference_cycles(GciSequence{{100.0}, ""}, 16000.0).cycles.empty());
}

TEST(Cycles, VoicingGate) {
  // 1 ms and 30 ms periods fall outside [2, 20] ms.
  const GciSequence ref{{0.0, 16.0, 176.0, 336.0, 816.0}, ""};
  const auto r = make_reference_cycles(ref, 16000.0);
  EXPECT_LT(r.voiced_count(), r.cycles.size());
  const std::vector<double> s{1.0, 1.0, 0.1, 1.0, 1.0};
  const auto g = make_reference_cycles(GciSequence{{0.0, 160.0, 320.0, 480.0, 640.0}, ""},
                                       16000.0, s, 0.5);
  EXPECT_EQ(g.voiced_count(), 4u);
  EXPECT_FALSE(g.cycles[2].voiced);
}

TEST(Evaluate, ExactEstimates) {
  const auto ref = regular(10, 160.0, 100.0);
  const auto r = evaluate(make_reference_cycles(ref, 16000.0), ref);
  EXPECT_DOUBLE_EQ(r.idr_pct, 100.0);
  EXPECT_DOUBLE_EQ(r.mr_pct, 0.0);
  EXPECT_DOUBLE_EQ(r.far_pct, 0.0);
  EXPECT_DOUBLE_EQ(r.ida_ms, 0.0);
  EXPECT_DOUBLE_EQ(r.acc025_pct, 100.0);
  EXPECT_EQ(r.cycles, 10u);
}

TEST(Evaluate, MissAndFalseAlarm) {
  const auto ref = regular(10, 160.0, 100.0);
  GciSequence est;
  for (std::size_t i = 0; i < 10; ++i) {
    if (i == 3) continue;
    est.instants.push_back(ref.instants[i]);
    if (i == 6) est.instants.push_back(ref.instants[i] + 30.0);
  }
  const auto r = evaluate(make_reference_cycles(ref, 16000.0), est);
  EXPECT_DOUBLE_EQ(r.idr_pct, 80.0);
  EXPECT_DOUBLE_EQ(r.mr_pct, 10.0);
  EXPECT_DOUBLE_EQ(r.far_pct, 10.0);
}

class RandomErrors : public ::testing::Test {
 protected:
  void SetUp() override {
    ref_ = regular(20000, 160.0, 100.0);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> xi(-0.2, 0.2);
    for (double t : ref_.instants) est_.instants.push_back(t + 16.0 * xi(rng));
  }
  GciSequence ref_, est_;
};

TEST_F(RandomErrors, UniformJitterStatistics) {
  const auto r = evaluate(make_reference_cycles(ref_, 16000.0), est_);
  EXPECT_DOUBLE_EQ(r.idr_pct, 100.0);
  EXPECT_DOUBLE_EQ(r.acc025_pct, 100.0);
  EXPECT_NEAR(r.ida_ms, 0.4 / std::sqrt(12.0), 0.003);
}

TEST_F(RandomErrors, IdaIsStandardDeviationOfErrors) {
  const auto r = evaluate(make_reference_cycles(ref_, 16000.0), est_);
  const double m = mean(r.errors_ms);
  double ss = 0.0;
  for (double e : r.errors_ms) ss += (e - m) * (e - m);
  EXPECT_NEAR(r.ida_ms, std::sqrt(ss / r.errors_ms.size()), 1e-12);
}

TEST_F(RandomErrors, ShiftInvariance) {
  GciSequence ref = ref_, est = est_;
  // A power of two keeps every shifted value exact.
  for (double& t : ref.instants) t += 1024.0;
  for (double& t : est.instants) t += 1024.0;
  const auto a = evaluate(make_reference_cycles(ref_, 16000.0), est_);
  const auto b = evaluate(make_reference_cycles(ref, 16000.0), est);
  EXPECT_EQ(a.idr_pct, b.idr_pct);
  EXPECT_EQ(a.far_pct, b.far_pct);
  EXPECT_NEAR(a.ida_ms, b.ida_ms, 1e-12);
}

TEST(Evaluate, PartitionOfCycles) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ref = regular(40, 150.0, 80.0);
    GciSequence est;
    for (double t = 0.0; t < 6200.0; t += 20.0 + 300.0 * u(rng)) est.instants.push_back(t);
    const auto r = evaluate(make_reference_cycles(ref, 16000.0), est);
    EXPECT_NEAR(r.idr_pct + r.mr_pct + r.far_pct, 100.0, 1e-9);
  }
}

TEST(Evaluate, PoolingIsConcatenation) {
  const auto ref = regular(30, 160.0, 100.0);
  const auto rc = make_reference_cycles(ref, 16000.0);
  GciSequence a = ref, b = ref;
  a.instants.erase(a.instants.begin() + 4);
  b.instants[7] += 3.0;
  auto ca = count_outcomes(rc, a);
  const auto cb = count_outcomes(rc, b);
  ca.merge(cb);
  EXPECT_EQ(ca.cycles, 60u);
  EXPECT_EQ(ca.hits, 59u);
  EXPECT_EQ(ca.errors_ms.size(), 59u);
  EXPECT_NEAR(make_report(ca).idr_pct, 100.0 * 59.0 / 60.0, 1e-12);
}

TEST(Evaluate, NoCyclesThrows) {
  EXPECT_THROW(make_report(EvalCounts{}), InvalidArgument);
}

TEST(Histogram, CountsSumToHits) {
  const std::vector<double> e{-3.0, -0.05, 0.0, 0.04, 0.11, 0.2, 5.0};
  const auto h = error_histogram(e, 0.1, 2.0);
  std::size_t total = 0;
  for (const auto& b : h) total += b.count;
  EXPECT_EQ(total, e.size());
  EXPECT_EQ(h.front().count, 1u);
  EXPECT_EQ(h.back().count, 1u);
}

}  // namespace
}  // namespace gci
