// benchmarks/bench_methods.cpp
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

// Per-method and per-stage timings on a 10 s synthetic vowel.

#include <benchmark/benchmark.h>

#include "gci/group_delay.hpp"
#include "gci/lpc.hpp"
#include "gci/methods.hpp"
#include "gci/synth.hpp"
#include "gci/zfr.hpp"

namespace {

using namespace gci;

const SyntheticUtterance& vowel() {
  static const SyntheticUtterance u = [] {
    VowelSpec v;
    v.f0_hz = 140.0;
    v.duration_s = 10.0;
    v.seed = 7;
    return synthesize_vowel(v);
  }();
  return u;
}

void BM_Method(benchmark::State& state, Method m) {
  const auto& u = vowel();
  const auto prior = PitchPrior::from_f0(u.f0_hz, u.speech.sample_rate_hz);
  for (auto _ : state) benchmark::DoNotOptimize(run_method(m, u.speech, prior));
  // Seconds of audio per second of CPU; RCT in percent is 100 / this rate.
  state.counters["audio_s"] = benchmark::Counter(u.speech.duration_s(),
                                                 benchmark::Counter::kIsIterationInvariantRate);
}

BENCHMARK_CAPTURE(BM_Method, he, Method::he)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Method, he_fast, Method::he_fast)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Method, dypsa, Method::dypsa)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Method, zfr, Method::zfr)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Method, sedreams, Method::sedreams)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Method, sedreams_fast, Method::sedreams_fast)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Method, yaga, Method::yaga)->Unit(benchmark::kMillisecond);

void BM_Residual(benchmark::State& state) {
  const auto& x = vowel().speech;
  for (auto _ : state) benchmark::DoNotOptimize(lp_residual(x, LpcConfig{}));
}
BENCHMARK(BM_Residual)->Unit(benchmark::kMillisecond);

void BM_Ewgd(benchmark::State& state) {
  const auto& x = vowel().speech;
  const auto R = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ewgd(x.samples, R));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_Ewgd)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ZeroFrequencyResonators(benchmark::State& state) {
  const auto& x = vowel().speech;
  for (auto _ : state) benchmark::DoNotOptimize(zero_frequency_resonators(x.samples));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_ZeroFrequencyResonators)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
