// core/src/synth.cpp
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

#include "gci/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gci {

std::vector<double> random_formant_tract(std::mt19937_64& rng, double fs, int formants) {
  static const double lo[] = {400.0, 900.0, 2000.0, 3000.0, 4000.0};
  static const double hi[] = {900.0, 2000.0, 3000.0, 4000.0, 5500.0};
  if (formants < 1 || formants > 5) throw InvalidArgument("1 to 5 formants supported");
  std::vector<double> a{1.0};
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int k = 0; k < formants; ++k) {
    const double f = std::min(lo[k] + (hi[k] - lo[k]) * u01(rng), 0.45 * fs);
    const double bw = 60.0 + 190.0 * u01(rng);
    const double r = std::exp(-std::numbers::pi * bw / fs);
    const double th = 2.0 * std::numbers::pi * f / fs;
    const double c[3] = {1.0, -2.0 * r * std::cos(th), r * r};
    std::vector<double> next(a.size() + 2, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int j = 0; j < 3; ++j) next[i + j] += a[i] * c[j];
    a = std::move(next);
  }
  return a;
}

std::vector<double> glottal_pulse_derivative(double T, double oq, double cq) {
  const double tp = oq * T, tn = cq * T, te = tp + tn;
  const long len = static_cast<long>(std::ceil(te));
  std::vector<double> g(static_cast<std::size_t>(len) + 1, 0.0);
  for (long i = -len; i <= 0; ++i) {
    const double tau = static_cast<double>(i) + te;
    double v = 0.0;
    if (tau < 0.0) {
      v = 0.0;
    } else if (tau < tp) {
      v = 0.5 * std::numbers::pi / tp * std::sin(std::numbers::pi * tau / tp);
    } else {
      v = -std::numbers::pi / (2.0 * tn) * std::sin(std::numbers::pi * (tau - tp) / (2.0 * tn));
    }
    g[static_cast<std::size_t>(i + len)] = v;
  }
  return g;
}

Waveform synthetic_egg(const std::vector<double>& epochs, std::size_t n, double fs) {
  std::vector<double> d(n, 0.0);
  for (std::size_t k = 0; k < epochs.size(); ++k) {
    const long e = std::lround(epochs[k]);
    const double rise[3] = {0.25, 0.5, 0.25};
    for (int j = -1; j <= 1; ++j) {
      const long i = e + j;
      if (i >= 0 && i < static_cast<long>(n)) d[static_cast<std::size_t>(i)] += rise[j + 1];
    }
    // Linear decay back to the base level over the following period.
    const long next = k + 1 < epochs.size() ? std::lround(epochs[k + 1]) : static_cast<long>(n);
    const long span = next - e - 2;
    if (span <= 0) continue;
    for (long i = e + 2; i < next && i < static_cast<long>(n); ++i)
      d[static_cast<std::size_t>(i)] -= 1.0 / static_cast<double>(span);
  }
  std::vector<double> egg(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) egg[i] = acc += d[i];
  return Waveform(std::move(egg), fs);
}

SyntheticUtterance synthesize_vowel(const VowelSpec& spec) {
  const double fs = spec.sample_rate_hz;
  if (!(spec.f0_hz > 0.0) || !(fs > 0.0) || !(spec.duration_s > 0.0))
    throw InvalidArgument("bad vowel spec");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> jit(-spec.jitter, spec.jitter);
  const double T = fs / spec.f0_hz;
  const auto n = static_cast<std::size_t>(spec.duration_s * fs);

  SyntheticUtterance u;
  u.f0_hz = spec.f0_hz;
  for (double t = spec.margin; t < static_cast<double>(n) - spec.margin;
       t += T * (1.0 + jit(rng)))
    u.epochs.instants.push_back(std::round(t));
  u.epochs.source = "synthetic";

  // Excitation: pulse ending at each epoch.
  const auto g = glottal_pulse_derivative(T, spec.open_quotient, spec.closing_quotient);
  const long glen = static_cast<long>(g.size());
  std::vector<double> src(n, 0.0);
  for (double e : u.epochs.instants) {
    const long end = static_cast<long>(e);
    for (long j = 0; j < glen; ++j) {
      const long i = end - (glen - 1) + j;
      if (i >= 0 && i < static_cast<long>(n)) src[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(j)];
    }
  }
  if (spec.return_ms > 0.0) {
    const double a = std::exp(-1.0 / (spec.return_ms * 1e-3 * fs));
    double y = 0.0;
    for (double& v : src) v = y = (1.0 - a) * v + a * y;
  }
  const auto tract = random_formant_tract(rng, fs, spec.formants);
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = src[i];
    for (std::size_t k = 1; k < tract.size() && k <= i; ++k) acc -= tract[k] * s[i - k];
    s[i] = acc;
  }
  double peak = 0.0;
  for (double v : s) peak = std::max(peak, std::abs(v));
  if (peak > 0.0)
    for (double& v : s) v *= 0.5 / peak;
  u.speech = Waveform(std::move(s), fs);

  std::vector<double> egg_epochs(u.epochs.instants);
  for (double& e : egg_epochs) e -= static_cast<double>(spec.egg_delay);
  u.egg = synthetic_egg(egg_epochs, n, fs);
  return u;
}

std::vector<SyntheticUtterance> synthetic_suite(double total_s, std::uint64_t seed,
                                                std::vector<double> f0s, double utt_s) {
  if (f0s.empty() || !(utt_s > 0.0)) throw InvalidArgument("bad suite spec");
  std::vector<SyntheticUtterance> out;
  const auto count = static_cast<std::size_t>(std::ceil(total_s / utt_s - 1e-9));
  for (std::size_t i = 0; i < count; ++i) {
    VowelSpec v;
    v.f0_hz = f0s[i % f0s.size()];
    v.duration_s = utt_s;
    v.seed = seed * 1000003ULL + i;
    auto u = synthesize_vowel(v);
    u.id = "syn" + std::to_string(i);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace gci
