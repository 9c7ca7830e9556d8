// core/src/resample.cpp
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

#include "gci/resample.hpp"

#include <cmath>
#include <numbers>

namespace gci {

Waveform resample(const Waveform& x, double target_rate_hz) {
  if (!(target_rate_hz > 0.0)) throw InvalidArgument("target rate must be positive");
  if (x.sample_rate_hz == target_rate_hz || x.empty()) {
    Waveform y = x;
    y.sample_rate_hz = target_rate_hz;
    return y;
  }
  const double ratio = target_rate_hz / x.sample_rate_hz;
  const double cutoff = std::min(1.0, ratio);
  const double half_width = 16.0 / cutoff;  // input samples
  const auto out_len = static_cast<std::size_t>(std::llround(x.size() * ratio));
  const auto n = static_cast<long long>(x.size());
  const double pi = std::numbers::pi;
  std::vector<double> y(out_len, 0.0);
  for (std::size_t m = 0; m < out_len; ++m) {
    const double t = m / ratio;
    const auto lo = static_cast<long long>(std::ceil(t - half_width));
    const auto hi = static_cast<long long>(std::floor(t + half_width));
    double acc = 0.0;
    for (long long k = std::max(0LL, lo); k <= std::min(n - 1, hi); ++k) {
      const double d = t - static_cast<double>(k);
      const double arg = pi * cutoff * d;
      const double sinc = std::abs(arg) < 1e-12 ? 1.0 : std::sin(arg) / arg;
      const double win = 0.5 + 0.5 * std::cos(pi * d / half_width);
      acc += x.samples[static_cast<std::size_t>(k)] * cutoff * sinc * win;
    }
    y[m] = acc;
  }
  return Waveform(std::move(y), target_rate_hz);
}

}  // namespace gci
