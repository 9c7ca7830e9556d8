// core/src/sedreams.cpp
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

#include "gci/sedreams.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gci/log.hpp"
#include "gci/signal_util.hpp"

namespace gci {

namespace {

LpcConfig resolve_lpc(const SedreamsConfig& cfg, double fs) {
  return cfg.lpc.value_or(LpcConfig::for_rate(fs));
}

double interval_cap(const SedreamsConfig& cfg, const PitchPrior& prior) {
  return cfg.max_local_periods * prior.mean_period_samples;
}

}  // namespace

double mean_based_at(std::span<const double> x, std::span<const double> w, long n) {
  const long len = static_cast<long>(x.size());
  const long half = static_cast<long>(w.size() / 2);
  const long lo = std::max(-half, -n);
  const long hi = std::min(half, len - 1 - n);
  double num = 0.0, den = 0.0;
  for (long m = lo; m <= hi; ++m) {
    num += w[m + half] * x[n + m];
    den += w[m + half];
  }
  return den > 0.0 ? num / den : 0.0;
}

MeanBasedSignal mean_based_signal(const Waveform& x, const PitchPrior& prior,
                                  const SedreamsConfig& cfg) {
  prior.validate(x.sample_rate_hz);
  MeanBasedSignal m;
  m.window = odd_window(cfg.window_shape, cfg.window_periods * prior.mean_period_samples);
  const auto w = make_window(m.window);
  m.values.resize(x.size());
  for (std::size_t n = 0; n < x.size(); ++n)
    m.values[n] = mean_based_at(x.samples, w, static_cast<long>(n));
  return m;
}

std::vector<PresenceInterval> intervals_from_minima(const std::vector<double>& minima,
                                                    double ratio, double max_period) {
  std::vector<PresenceInterval> out;
  if (minima.size() < 2) return out;
  const double cap = max_period > 0.0 ? max_period : std::numeric_limits<double>::infinity();
  double period = 0.0;
  for (std::size_t k = 0; k < minima.size(); ++k) {
    if (k + 1 < minima.size()) period = minima[k + 1] - minima[k];
    out.push_back({minima[k], ratio * std::min(period, cap)});
  }
  return out;
}

std::vector<PresenceInterval> intervals_of_presence(const MeanBasedSignal& m, double ratio,
                                                    double max_period) {
  std::vector<double> mins;
  for (std::size_t i : local_minima(m.values)) mins.push_back(static_cast<double>(i));
  return intervals_from_minima(mins, ratio, max_period);
}

GciSequence refine_with_residual(const std::vector<PresenceInterval>& intervals,
                                 std::span<const double> e) {
  GciSequence out;
  out.source = "sedreams";
  const long n = static_cast<long>(e.size());
  for (const auto& iv : intervals) {
    const long lo = std::max(0L, static_cast<long>(std::ceil(iv.start)));
    const long hi = std::min(n - 1, static_cast<long>(std::floor(iv.start + iv.length)));
    long best = -1;
    double best_v = 0.0;
    for (long i = lo; i <= hi; ++i) {
      if (e[i] > best_v) {
        best_v = e[i];
        best = i;
      }
    }
    if (best < 0) continue;
    const double t = static_cast<double>(best);
    if (out.instants.empty() || t > out.instants.back()) out.instants.push_back(t);
  }
  return out;
}

GciSequence detect_sedreams(const Waveform& x, const PitchPrior& prior,
                            const SedreamsConfig& cfg) {
  prior.validate(x.sample_rate_hz);
  const LpcConfig lpc = resolve_lpc(cfg, x.sample_rate_hz);
  GciSequence out;
  out.source = "sedreams";
  if (x.size() < lpc.frame_len) return out;
  const auto m = mean_based_signal(x, prior, cfg);
  const auto iv = intervals_of_presence(m, cfg.interval_ratio, interval_cap(cfg, prior));
  if (iv.empty()) return out;
  const Waveform e = lp_residual(x, lpc);
  out = refine_with_residual(iv, e.samples);
  out.source = "sedreams";
  return out;
}

int fast_decimation_exponent(const PitchPrior& prior, int p) {
  if (p < 0) throw InvalidArgument("decimation exponent must be nonnegative");
  int q = p;
  while (q > 0 && 1.75 * std::ldexp(1.0, q) > prior.mean_period_samples) --q;
  return q;
}

GciSequence detect_sedreams_fast(const Waveform& x, const PitchPrior& prior, int p,
                                 const SedreamsConfig& cfg) {
  prior.validate(x.sample_rate_hz);
  const int q = fast_decimation_exponent(prior, p);
  if (q != p) {
    std::ostringstream os;
    os << "fast SEDREAMS: decimation exponent lowered from " << p << " to " << q
       << " for a prior of " << prior.mean_period_samples << " samples";
    warn(os.str());
  }
  LpcConfig lpc = resolve_lpc(cfg, x.sample_rate_hz);
  if (cfg.fast_lpc_hop_factor == 0) throw InvalidArgument("LPC hop factor must be positive");
  lpc.hop *= cfg.fast_lpc_hop_factor;
  GciSequence out;
  out.source = "sedreams_fast";
  if (x.size() < lpc.frame_len) return out;

  const WindowSpec win = odd_window(cfg.window_shape, cfg.window_periods * prior.mean_period_samples);
  const auto w = make_window(win);
  const std::span<const double> s(x.samples);
  const long len = static_cast<long>(x.size());
  const long step = 1L << q;

  // Coarse grid.
  std::vector<double> coarse;
  for (long n = 0; n < len; n += step) coarse.push_back(mean_based_at(s, w, n));
  std::vector<double> minima;
  for (std::size_t c : local_minima(coarse)) {
    long pos = static_cast<long>(c) * step;
    double val = coarse[c];
    for (long h = step / 2; h >= 1; h /= 2) {
      long best = pos;
      double best_v = val;
      for (long cand : {pos - h, pos + h}) {
        if (cand < 0 || cand >= len) continue;
        const double v = mean_based_at(s, w, cand);
        if (v < best_v) {
          best_v = v;
          best = cand;
        }
      }
      pos = best;
      val = best_v;
    }
    const double t = static_cast<double>(pos);
    if (minima.empty() || t > minima.back()) minima.push_back(t);
  }
  const auto iv = intervals_from_minima(minima, cfg.interval_ratio, interval_cap(cfg, prior));
  if (iv.empty()) return out;

  // Residual only where intervals need it. Prediction-error filtering needs the
  // preemphasized signal and the frame model nearest to each sample.
  const std::size_t num_frames = 1 + (x.size() - lpc.frame_len) / lpc.hop;
  std::vector<std::uint8_t> need(num_frames, 0);
  for (const auto& v : iv) {
    const long lo = std::max(0L, static_cast<long>(std::ceil(v.start)));
    const long hi = std::min(len - 1, static_cast<long>(std::floor(v.start + v.length)));
    if (hi < lo) continue;
    const std::size_t f0 = frame_for_sample(static_cast<std::size_t>(lo), num_frames, lpc);
    const std::size_t f1 = frame_for_sample(static_cast<std::size_t>(hi), num_frames, lpc);
    for (std::size_t f = f0; f <= f1; ++f) need[f] = 1;
  }
  const auto y = preemphasize(s, lpc.preemphasis);
  const auto aw = make_symmetric_window(lpc.window, lpc.frame_len);
  std::vector<LpcModel> models(num_frames);
  std::vector<double> buf(lpc.frame_len);
  for (std::size_t f = 0; f < num_frames; ++f) {
    if (!need[f]) continue;
    const std::size_t start = f * lpc.hop;
    for (std::size_t i = 0; i < lpc.frame_len; ++i) buf[i] = y[start + i] * aw[i];
    models[f] = levinson_durbin(autocorrelation(buf, lpc.order), lpc.order);
  }
  std::vector<double> e(x.size(), 0.0);
  for (const auto& v : iv) {
    const long lo = std::max(0L, static_cast<long>(std::ceil(v.start)));
    const long hi = std::min(len - 1, static_cast<long>(std::floor(v.start + v.length)));
    for (long n = lo; n <= hi; ++n) {
      const auto& a = models[frame_for_sample(static_cast<std::size_t>(n), num_frames, lpc)]
                          .coefficients;
      double acc = y[n];
      const long kmax = std::min<long>(static_cast<long>(a.size()), n);
      for (long k = 1; k <= kmax; ++k) acc += a[k - 1] * y[n - k];
      e[n] = acc;
    }
  }
  out = refine_with_residual(iv, e);
  out.source = "sedreams_fast";
  return out;
}

}  // namespace gci
