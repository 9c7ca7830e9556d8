// core/src/he.cpp
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

#include "gci/he.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gci/hilbert.hpp"
#include "gci/log.hpp"
#include "gci/signal_util.hpp"

namespace gci {

namespace {

std::vector<double> round_instants(const std::vector<double>& t) {
  std::vector<double> out;
  out.reserve(t.size());
  for (double v : t) {
    const double r = std::round(v);
    if (out.empty() || r > out.back()) out.push_back(r);
  }
  return out;
}

double max_of(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, v);
  return m;
}

// Residual envelope shared by both HE variants; empty if x is too short.
std::vector<double> residual_envelope(const Waveform& x, const LpcConfig& lpc) {
  if (x.size() < lpc.frame_len) return {};
  return hilbert_envelope(lp_residual(x, lpc)).samples;
}

}  // namespace

double cog_at(std::span<const double> env, std::span<const double> w, long n,
              double eps, bool* inert) {
  const long len = static_cast<long>(env.size());
  const long half = static_cast<long>(w.size() / 2);
  const long lo = std::max(-half, -n);
  const long hi = std::min(half, len - 1 - n);
  double num = 0.0, den = 0.0;
  for (long m = lo; m <= hi; ++m) {
    const double v = w[m + half] * env[n + m];
    num += m * v;
    den += v;
  }
  if (den < eps || den <= 0.0) {
    *inert = true;
    return 0.0;
  }
  *inert = false;
  return num / den;
}

CogSignal cog_signal(const Waveform& envelope, const WindowSpec& window) {
  CogSignal out;
  out.window = window;
  const std::size_t len = envelope.size();
  out.values.assign(len, 0.0);
  out.inert.assign(len, 0);
  const auto w = make_window(window);
  const double eps = 1e-12 * max_of(envelope.samples);
  for (std::size_t n = 0; n < len; ++n) {
    bool inert = false;
    out.values[n] = cog_at(envelope.samples, w, static_cast<long>(n), eps, &inert);
    out.inert[n] = inert ? 1 : 0;
  }
  return out;
}

std::vector<double> merge_close_crossings(const std::vector<double>& crossings,
                                          std::span<const double> env,
                                          double min_spacing, std::size_t half_width) {
  auto energy = [&](double t) {
    const long c = std::lround(t);
    const long lo = std::max(0L, c - static_cast<long>(half_width));
    const long hi = std::min(static_cast<long>(env.size()) - 1,
                             c + static_cast<long>(half_width));
    double e = 0.0;
    for (long i = lo; i <= hi; ++i) e += env[i] * env[i];
    return e;
  };
  std::vector<double> kept;
  std::vector<double> kept_energy;
  for (double t : crossings) {
    const double e = energy(t);
    if (!kept.empty() && t - kept.back() < min_spacing) {
      if (e > kept_energy.back()) {
        kept.back() = t;
        kept_energy.back() = e;
      }
      continue;
    }
    kept.push_back(t);
    kept_energy.push_back(e);
  }
  return kept;
}

GciSequence detect_he(const Waveform& x, const PitchPrior& prior, const HeConfig& cfg) {
  GciSequence out;
  out.source = "he";
  prior.validate(x.sample_rate_hz);
  const LpcConfig lpc = cfg.lpc.value_or(LpcConfig::for_rate(x.sample_rate_hz));
  const auto env = residual_envelope(x, lpc);
  if (env.empty()) return out;
  const double t0 = prior.mean_period_samples;
  const WindowSpec win = odd_window(cfg.window_shape, cfg.window_periods * t0);
  const CogSignal cog = cog_signal(Waveform(env, x.sample_rate_hz), win);
  const auto zc = zero_crossings(cog.values, CrossingDirection::negative_going, cog.inert);
  const auto merged = merge_close_crossings(
      zc, env, cfg.merge_periods * t0,
      std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.1 * t0))));
  out.instants = round_instants(merged);
  return out;
}

GciSequence detect_he_fast(const Waveform& x, const PitchPrior& prior, int p,
                           const HeConfig& cfg) {
  GciSequence out;
  out.source = "he_fast";
  prior.validate(x.sample_rate_hz);
  if (p < 0) throw InvalidArgument("decimation exponent must be nonnegative");
  const double t0 = prior.mean_period_samples;
  int p_eff = p;
  while (p_eff > 0 && 1.75 * std::ldexp(1.0, p_eff) > t0) --p_eff;
  if (p_eff != p) {
    std::ostringstream os;
    os << "fast HE: decimation exponent lowered from " << p << " to " << p_eff;
    warn(os.str());
  }
  const LpcConfig lpc = cfg.lpc.value_or(LpcConfig::for_rate(x.sample_rate_hz));
  const auto env = residual_envelope(x, lpc);
  if (env.empty()) return out;
  const WindowSpec win = odd_window(cfg.window_shape, cfg.window_periods * t0);
  const auto w = make_window(win);
  const double eps = 1e-12 * max_of(env);
  const long step = 1L << p_eff;
  const long len = static_cast<long>(env.size());

  std::vector<double> crossings;
  bool prev_inert = true;
  double prev = 0.0;
  long prev_n = 0;
  for (long n = 0; n < len; n += step) {
    bool inert = false;
    const double v = cog_at(env, w, n, eps, &inert);
    if (!inert && !prev_inert && prev > 0.0 && v <= 0.0) {
      // Bisection inside (prev_n, n].
      long lo = prev_n, hi = n;
      double vlo = prev, vhi = v;
      bool ok = true;
      while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        bool mid_inert = false;
        const double vm = cog_at(env, w, mid, eps, &mid_inert);
        if (mid_inert) {
          ok = false;
          break;
        }
        if (vm > 0.0) {
          lo = mid;
          vlo = vm;
        } else {
          hi = mid;
          vhi = vm;
        }
      }
      if (ok) crossings.push_back(static_cast<double>(lo) + vlo / (vlo - vhi));
    }
    prev = v;
    prev_inert = inert;
    prev_n = n;
  }
  const auto merged = merge_close_crossings(
      crossings, env, cfg.merge_periods * t0,
      std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.1 * t0))));
  out.instants = round_instants(merged);
  return out;
}

}  // namespace gci
