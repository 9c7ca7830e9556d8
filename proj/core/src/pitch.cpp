// core/src/pitch.cpp
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

#include "gci/pitch.hpp"

#include <algorithm>
#include <cmath>

#include "gci/fft.hpp"
#include "gci/signal_util.hpp"

namespace gci {

PitchPrior prior_from_reference(const GciSequence& ref, double fs) {
  std::vector<double> periods;
  const double lo = 2e-3 * fs, hi = 20e-3 * fs;
  for (std::size_t i = 1; i < ref.instants.size(); ++i) {
    const double p = ref.instants[i] - ref.instants[i - 1];
    if (p >= lo && p <= hi) periods.push_back(p);
  }
  if (periods.empty()) throw InvalidArgument("reference has no plausible pitch periods");
  const double p = median(periods);
  // Keep the prior inside the supported range.
  return PitchPrior(std::clamp(p, fs / 500.0, fs / 50.0));
}

PitchPrior estimate_pitch_prior(const Waveform& x, double min_f0, double max_f0) {
  x.validate();
  const double fs = x.sample_rate_hz;
  const auto lag_lo = static_cast<std::size_t>(std::floor(fs / max_f0));
  const auto lag_hi = static_cast<std::size_t>(std::ceil(fs / min_f0));
  if (x.size() < 2 * lag_hi) throw InvalidArgument("signal too short for a pitch estimate");
  const double m = mean(x.samples);
  std::vector<double> c(x.samples);
  for (double& v : c) v -= m;
  const std::size_t n = next_fast_size(2 * c.size());
  auto X = rfft(c, n);
  for (auto& v : X) v = std::norm(v);
  const auto r = irfft(X, n);
  if (!(r[0] > 0.0)) throw InvalidArgument("cannot estimate pitch of a constant signal");
  // Unbiased normalization so long lags are not penalized.
  auto rn = [&](std::size_t k) {
    return r[k] / r[0] * static_cast<double>(c.size()) / static_cast<double>(c.size() - k);
  };
  std::size_t best = lag_lo;
  double best_v = -1e300;
  for (std::size_t k = lag_lo; k <= lag_hi; ++k) {
    const double v = rn(k);
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  while (best / 2 >= lag_lo) {
    const std::size_t h = best / 2;
    std::size_t hb = h;
    double hv = rn(h);
    for (std::size_t k = h > 2 ? h - 2 : lag_lo; k <= h + 2; ++k) {
      if (k < lag_lo) continue;
      if (rn(k) > hv) {
        hv = rn(k);
        hb = k;
      }
    }
    if (hv < 0.85 * best_v) break;
    best = hb;
    best_v = hv;
  }
  const double p = std::clamp(static_cast<double>(best), fs / 500.0, fs / 50.0);
  return PitchPrior(p);
}

}  // namespace gci
