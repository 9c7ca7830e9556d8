// core/src/lpc.cpp
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

#include "gci/lpc.hpp"

#include <algorithm>
#include <cmath>

namespace gci {

LpcConfig LpcConfig::for_rate(double fs) {
  LpcConfig cfg;
  cfg.order = static_cast<std::size_t>(std::lround(2.0 + fs / 1000.0));
  cfg.frame_len = static_cast<std::size_t>(std::lround(0.025 * fs));
  cfg.hop = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.005 * fs)));
  return cfg;
}

void LpcConfig::validate() const {
  if (order == 0) throw InvalidArgument("LPC order must be positive");
  if (order >= frame_len) throw InvalidArgument("LPC order must be below the frame length");
  if (frame_len <= 2 * order)
    throw InvalidArgument("LPC frame must be longer than twice the order");
  if (hop == 0) throw InvalidArgument("LPC hop must be positive");
  if (!(preemphasis >= 0.0 && preemphasis < 1.0))
    throw InvalidArgument("preemphasis must lie in [0, 1)");
}

std::vector<double> autocorrelation(std::span<const double> x, std::size_t max_lag) {
  std::vector<double> r(max_lag + 1, 0.0);
  const std::size_t n = x.size();
  const std::size_t lags = std::min(max_lag + 1, n);
  // All lags per sample: independent accumulators instead of one long
  // dependency chain per lag.
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const std::size_t kmax = std::min(lags, i + 1);
    for (std::size_t k = 0; k < kmax; ++k) r[k] += xi * x[i - k];
  }
  return r;
}

LpcModel levinson_durbin(std::span<const double> r, std::size_t order) {
  if (r.size() < order + 1) throw InvalidArgument("autocorrelation too short for order");
  LpcModel m;
  m.order = order;
  m.coefficients.assign(order, 0.0);
  m.reflection.assign(order, 0.0);
  m.error_power = r[0];
  if (!(r[0] > 0.0)) {
    m.error_power = 0.0;
    return m;
  }
  std::vector<double> a(order + 1, 0.0), prev(order + 1, 0.0);
  a[0] = 1.0;
  double err = r[0];
  for (std::size_t i = 1; i <= order; ++i) {
    double acc = r[i];
    for (std::size_t j = 1; j < i; ++j) acc += a[j] * r[i - j];
    double k = -acc / err;
    if (!std::isfinite(k) || std::abs(k) >= 1.0) break;
    prev = a;
    for (std::size_t j = 1; j < i; ++j) a[j] = prev[j] + k * prev[i - j];
    a[i] = k;
    m.reflection[i - 1] = k;
    double next = err * (1.0 - k * k);
    if (!(next > 0.0)) {
      err = 0.0;
      break;
    }
    err = next;
  }
  for (std::size_t j = 1; j <= order; ++j) m.coefficients[j - 1] = a[j];
  m.error_power = err;
  return m;
}

std::vector<double> preemphasize(std::span<const double> x, double coef) {
  std::vector<double> y(x.begin(), x.end());
  if (coef == 0.0) return y;
  for (std::size_t n = x.size(); n-- > 1;) y[n] = x[n] - coef * x[n - 1];
  return y;
}

std::vector<LpcFrame> lpc_analyze(const Waveform& x, const LpcConfig& cfg) {
  cfg.validate();
  if (x.size() < cfg.frame_len)
    throw InvalidArgument("signal shorter than one LPC frame");
  const std::vector<double> y = preemphasize(x.samples, cfg.preemphasis);
  const std::vector<double> w = make_symmetric_window(cfg.window, cfg.frame_len);
  const std::size_t num = 1 + (x.size() - cfg.frame_len) / cfg.hop;
  std::vector<LpcFrame> frames(num);
  std::vector<double> buf(cfg.frame_len);
  for (std::size_t f = 0; f < num; ++f) {
    const std::size_t start = f * cfg.hop;
    for (std::size_t i = 0; i < cfg.frame_len; ++i) buf[i] = y[start + i] * w[i];
    const auto r = autocorrelation(buf, cfg.order);
    frames[f].start = start;
    frames[f].model = levinson_durbin(r, cfg.order);
  }
  return frames;
}

std::size_t frame_for_sample(std::size_t n, std::size_t num_frames,
                             const LpcConfig& cfg) {
  if (num_frames == 0) return 0;
  const double pos =
      (static_cast<double>(n) - 0.5 * static_cast<double>(cfg.frame_len)) / cfg.hop;
  if (pos <= 0.0) return 0;
  auto f = static_cast<std::size_t>(std::lround(pos));
  return std::min(f, num_frames - 1);
}

std::vector<double> inverse_filter(std::span<const double> x,
                                   const std::vector<LpcFrame>& frames,
                                   const LpcConfig& cfg) {
  std::vector<double> e(x.size(), 0.0);
  if (frames.empty()) return e;
  const std::size_t num = frames.size();
  std::size_t n = 0;
  while (n < x.size()) {
    const std::size_t f = frame_for_sample(n, num, cfg);
    // Last sample served by frame f.
    std::size_t end = x.size();
    if (f + 1 < num) {
      end = n + 1;
      while (end < x.size() && frame_for_sample(end, num, cfg) == f) ++end;
    }
    const auto& a = frames[f].model.coefficients;
    const std::size_t p = a.size();
    for (; n < end; ++n) {
      double acc = x[n];
      const std::size_t kmax = std::min(p, n);
      for (std::size_t k = 1; k <= kmax; ++k) acc += a[k - 1] * x[n - k];
      e[n] = acc;
    }
  }
  return e;
}

Waveform lp_residual(const Waveform& x, const LpcConfig& cfg) {
  const auto frames = lpc_analyze(x, cfg);
  const auto y = preemphasize(x.samples, cfg.preemphasis);
  return Waveform(inverse_filter(y, frames, cfg), x.sample_rate_hz);
}

std::vector<double> prediction_error_filter(std::span<const double> x,
                                            const LpcModel& model) {
  std::vector<double> e(x.size());
  const auto& a = model.coefficients;
  for (std::size_t n = 0; n < x.size(); ++n) {
    double acc = x[n];
    const std::size_t kmax = std::min(a.size(), n);
    for (std::size_t k = 1; k <= kmax; ++k) acc += a[k - 1] * x[n - k];
    e[n] = acc;
  }
  return e;
}

std::vector<double> synthesis_filter(std::span<const double> e, const LpcModel& model) {
  std::vector<double> y(e.size());
  const auto& a = model.coefficients;
  for (std::size_t n = 0; n < e.size(); ++n) {
    double acc = e[n];
    const std::size_t kmax = std::min(a.size(), n);
    for (std::size_t k = 1; k <= kmax; ++k) acc -= a[k - 1] * y[n - k];
    y[n] = acc;
  }
  return y;
}

}  // namespace gci
