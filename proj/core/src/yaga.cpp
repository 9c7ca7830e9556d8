// core/src/yaga.cpp
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

#include "gci/yaga.hpp"

#include <algorithm>
#include <cmath>

namespace gci {

namespace {

// Half-sample symmetric extension.
long reflect(long i, long n) {
  const long period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

// y(n) = sum_k f[k] x(n - k*u + D), D = floor((L-1) * u / 2).
std::vector<double> atrous(std::span<const double> x, const std::vector<double>& f, long u) {
  const long n = static_cast<long>(x.size());
  const long L = static_cast<long>(f.size());
  const long D = ((L - 1) * u) / 2;
  std::vector<double> y(x.size(), 0.0);
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (long k = 0; k < L; ++k) acc += f[k] * x[reflect(i - k * u + D, n)];
    y[i] = acc;
  }
  return y;
}

}  // namespace

Waveform voice_source_estimate(const Waveform& x, const LpcConfig& cfg) {
  const auto frames = lpc_analyze(x, cfg);
  return Waveform(inverse_filter(x.samples, frames, cfg), x.sample_rate_hz);
}

std::vector<std::vector<double>> swt_details(std::span<const double> u, int j1,
                                             const WaveletFilters& f) {
  if (j1 < 1) throw InvalidArgument("wavelet depth must be at least 1");
  if (u.size() < 2 || static_cast<double>(j1) > std::log2(static_cast<double>(u.size())))
    throw InvalidArgument("signal too short for the requested wavelet depth");
  std::vector<std::vector<double>> details;
  std::vector<double> approx(u.begin(), u.end());
  long up = 1;
  for (int j = 1; j <= j1; ++j) {
    details.push_back(atrous(approx, f.highpass, up));
    if (j < j1) approx = atrous(approx, f.lowpass, up);
    up *= 2;
  }
  return details;
}

MultiscaleProduct swt_multiscale_product(const Waveform& u, int j1, const WaveletFilters& f) {
  MultiscaleProduct p;
  p.depth = j1;
  const auto d = swt_details(u.samples, j1, f);
  p.values.assign(u.size(), 1.0);
  for (const auto& level : d)
    for (std::size_t i = 0; i < level.size(); ++i) p.values[i] *= level[i];
  return p;
}

double cost_source_polarity(std::span<const double> u, double t, std::size_t m) {
  const long n = static_cast<long>(u.size());
  const long c = std::lround(t);
  const long mm = static_cast<long>(std::max<std::size_t>(1, m));
  if (c - mm < 0 || c + mm > n) return 0.0;
  double before = 0.0, after = 0.0, mag = 0.0;
  for (long i = c - mm; i < c; ++i) {
    before += u[i];
    mag += std::abs(u[i]);
  }
  for (long i = c; i < c + mm; ++i) {
    after += u[i];
    mag += std::abs(u[i]);
  }
  if (!(mag > 0.0)) return 0.0;
  // |after - before| <= mag, so the ratio lies in [-1, 1].
  const double step = (after - before) / mag;
  return -0.5 * std::clamp(step, -1.0, 1.0);
}

GciSequence detect_yaga(const Waveform& x, const PitchPrior& prior, const YagaConfig& cfg) {
  prior.validate(x.sample_rate_hz);
  const LpcConfig lpc = cfg.lpc.value_or(LpcConfig::for_rate(x.sample_rate_hz));
  GciSequence out;
  out.source = "yaga";
  if (x.size() < lpc.frame_len) return out;
  const Waveform u = voice_source_estimate(x, lpc);
  const MultiscaleProduct p = swt_multiscale_product(u, cfg.depth, cfg.filters);
  const std::size_t R = cfg.group_delay_window > 0
                            ? cfg.group_delay_window
                            : default_group_delay_window(x.sample_rate_hz);
  const GroupDelay d = ewgd(p.values, R, cfg.group_delay_shape);
  auto cands = phase_slope_project(d, 0.5 * static_cast<double>(R - 1), cfg.projection);
  const double last = static_cast<double>(x.size()) - 1.0;
  std::erase_if(cands, [&](const Candidate& c) { return c.time < 0.0 || c.time > last; });
  const auto m = static_cast<std::size_t>(
      std::max(1.0, std::round(cfg.polarity_half_width_ms * 1e-3 * x.sample_rate_hz)));
  std::vector<double> extra(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    extra[i] = cfg.lambda_g * cost_source_polarity(u.samples, cands[i].time, m);
  out = dp_select(std::move(cands), x, prior, cfg.weights, cfg.selection, extra);
  out.source = "yaga";
  return out;
}

}  // namespace gci
