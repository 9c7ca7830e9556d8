// core/src/mixed_phase.cpp
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

#include "gci/mixed_phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gci/fft.hpp"

namespace gci {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t pow2_at_least(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

double wrap(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

struct Tap {
  long n;  // signed time
  double v;
};

Complex dtft(const std::vector<Tap>& taps, double w) {
  Complex acc(0.0, 0.0);
  for (const auto& t : taps) acc += t.v * std::polar(1.0, -w * static_cast<double>(t.n));
  return acc;
}

// Continuous phase increment from w0 to w1, subdividing while steps are
// large.
double phase_increment(const std::vector<Tap>& taps, double w0, Complex x0, double w1,
                       Complex x1, double limit, int depth) {
  const double d = wrap(std::arg(x1) - std::arg(x0));
  if (depth <= 0 || std::abs(d) <= limit) return d;
  const double wm = 0.5 * (w0 + w1);
  const Complex xm = dtft(taps, wm);
  return phase_increment(taps, w0, x0, wm, xm, limit, depth - 1) +
         phase_increment(taps, wm, xm, w1, x1, limit, depth - 1);
}

}  // namespace

std::optional<std::vector<double>> gci_sync_frame(const Waveform& x, double gci,
                                                  double local_period,
                                                  const MixedPhaseConfig& cfg) {
  if (!(local_period > 0.0)) throw InvalidArgument("local period must be positive");
  auto len = static_cast<long>(std::lround(cfg.length_periods * local_period));
  if (len % 2 == 1) ++len;
  if (len < 4) len = 4;
  const long c = std::lround(gci);
  const long start = c - len / 2;
  if (start < 0 || start + len > static_cast<long>(x.size())) return std::nullopt;
  const auto w = make_periodic_window(cfg.window, static_cast<std::size_t>(len));
  std::vector<double> f(static_cast<std::size_t>(len));
  for (long i = 0; i < len; ++i) f[i] = x.samples[start + i] * w[i];
  return f;
}

double spectral_cog(std::span<const double> mag, std::size_t fft_size, double fs) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    const double f = static_cast<double>(k) * fs / static_cast<double>(fft_size);
    num += f * mag[k];
    den += mag[k];
  }
  return den > 0.0 ? num / den : 0.0;
}

FrameDecomposition decompose(std::span<const double> frame, double fs,
                             const MixedPhaseConfig& cfg) {
  const std::size_t L = frame.size();
  if (L < 2) throw InvalidArgument("frame too short to decompose");
  std::size_t anchor = 0;
  double peak = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    if (std::abs(frame[i]) > peak) {
      peak = std::abs(frame[i]);
      anchor = i;
    }
  }
  if (!(peak > 0.0)) throw InvalidArgument("cannot decompose an all-zero frame");

  FrameDecomposition out;
  out.anchor = anchor;
  const std::size_t n = pow2_at_least(std::max<std::size_t>(cfg.fft_factor, 1) * L);
  out.fft_size = n;
  const std::size_t half = n / 2;

  std::vector<Tap> taps;
  taps.reserve(L);
  for (std::size_t i = 0; i < L; ++i)
    if (frame[i] != 0.0)
      taps.push_back({static_cast<long>(i) - static_cast<long>(anchor), frame[i]});
  double dc = 0.0;
  for (const auto& t : taps) dc += t.v;
  if (dc < 0.0) {
    out.negated = true;
    for (auto& t : taps) t.v = -t.v;
  }

  std::vector<double> circ(n, 0.0);
  for (const auto& t : taps) circ[static_cast<std::size_t>((t.n + static_cast<long>(n)) % static_cast<long>(n))] = t.v;
  const auto X = rfft(circ, n);

  double mag_max = 0.0;
  for (const auto& v : X) mag_max = std::max(mag_max, std::abs(v));
  const double floor = cfg.spectral_floor * mag_max;

  // Unwrapped phase over [0, pi].
  std::vector<double> phase(half + 1);
  phase[0] = std::arg(X[0]);
  for (std::size_t k = 1; k <= half; ++k) {
    const double w0 = kPi * static_cast<double>(k - 1) / half;
    const double w1 = kPi * static_cast<double>(k) / half;
    phase[k] = phase[k - 1] +
               phase_increment(taps, w0, X[k - 1], w1, X[k], cfg.max_phase_step, cfg.max_refine_depth);
  }
  out.linear_phase = std::lround(phase[half] / kPi);

  std::vector<Complex> logx(half + 1);
  for (std::size_t k = 0; k <= half; ++k) {
    double m = std::abs(X[k]);
    if (m < floor) {
      m = floor;
      out.regularized = true;
    }
    const double w = kPi * static_cast<double>(k) / half;
    logx[k] = Complex(std::log(m), phase[k] - static_cast<double>(out.linear_phase) * w);
  }
  // Imaginary part at DC and Nyquist must vanish for a real cepstrum.
  logx[0].imag(0.0);
  logx[half].imag(0.0);
  const auto ceps = irfft(logx, n);

  std::vector<double> ca(n, 0.0), cc(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || i < half) {
      cc[i] = ceps[i];
    } else if (i > half) {
      ca[i] = ceps[i];
    } else {
      cc[i] = 0.5 * ceps[i];
      ca[i] = 0.5 * ceps[i];
    }
  }

  auto component = [&](const std::vector<double>& c, std::vector<double>* mag) {
    auto C = rfft(c, n);
    for (auto& v : C) v = std::exp(v);
    if (mag) {
      mag->resize(C.size());
      for (std::size_t k = 0; k < C.size(); ++k) (*mag)[k] = std::abs(C[k]);
    }
    return irfft(C, n);
  };
  std::vector<double> amag;
  out.anticausal = component(ca, &amag);
  out.causal = component(cc, nullptr);
  if (out.negated)
    for (double& v : out.causal) v = -v;
  out.spectral_cog_hz = spectral_cog(amag, n, fs);
  out.decomposed_ok = out.spectral_cog_hz < cfg.cog_threshold_hz;
  return out;
}

std::vector<double> to_frame_coordinates(const std::vector<double>& circular, std::size_t anchor,
                                         std::size_t frame_len) {
  const long n = static_cast<long>(circular.size());
  std::vector<double> out(frame_len, 0.0);
  if (n == 0) return out;
  for (std::size_t i = 0; i < frame_len; ++i) {
    long t = static_cast<long>(i) - static_cast<long>(anchor);
    t = ((t % n) + n) % n;
    out[i] = circular[static_cast<std::size_t>(t)];
  }
  return out;
}

FailureReport failure_rate(const Waveform& x, const GciSequence& gcis,
                           const MixedPhaseConfig& cfg, std::optional<PitchPrior> prior) {
  FailureReport rep;
  const auto& g = gcis.instants;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double period = 0.0;
    if (g.size() >= 2) {
      if (i == 0) {
        period = g[1] - g[0];
      } else if (i + 1 == g.size()) {
        period = g[i] - g[i - 1];
      } else {
        period = 0.5 * (g[i + 1] - g[i - 1]);
      }
    }
    const double fs = x.sample_rate_hz;
    if (prior && (g.size() < 2 || period < fs / 500.0 || period > fs / 50.0))
      period = prior->mean_period_samples;
    if (!(period > 0.0)) {
      ++rep.skipped;
      continue;
    }
    const auto frame = gci_sync_frame(x, g[i], period, cfg);
    if (!frame) {
      ++rep.skipped;
      continue;
    }
    bool nonzero = false;
    for (double v : *frame) nonzero = nonzero || v != 0.0;
    if (!nonzero) {
      ++rep.skipped;
      continue;
    }
    const auto d = decompose(*frame, fs, cfg);
    rep.cogs_hz.push_back(d.spectral_cog_hz);
    if (!d.decomposed_ok) ++failed;
    ++rep.frames;
  }
  if (rep.frames == 0) throw InvalidArgument("no usable frame for mixed-phase decomposition");
  rep.failure_pct = 100.0 * static_cast<double>(failed) / static_cast<double>(rep.frames);
  return rep;
}

}  // namespace gci
