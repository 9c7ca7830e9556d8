// core/src/zfr.cpp
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

#include "gci/zfr.hpp"

#include <algorithm>
#include <cmath>

#include "gci/signal_util.hpp"
#include "gci/window.hpp"

namespace gci {

namespace {

#ifdef __SIZEOF_FLOAT128__
using Ext = __float128;
#else
using Ext = long double;
#endif

void resonate(std::vector<Ext>* v, bool printed) {
  Ext y1 = 0, y2 = 0;
  for (auto& x : *v) {
    const Ext y = printed ? x + 2 * y1 + y2 : x + 2 * y1 - y2;
    y2 = y1;
    y1 = y;
    x = y;
  }
}

void trend_pass(std::vector<Ext>* v, std::size_t h) {
  const std::size_t n = v->size();
  std::vector<Ext> prefix(n + 1);
  prefix[0] = 0;
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (*v)[i];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= h ? i - h : 0;
    const std::size_t hi = std::min(n - 1, i + h);
    const Ext m = (prefix[hi + 1] - prefix[lo]) / static_cast<Ext>(hi - lo + 1);
    (*v)[i] -= m;
  }
}

// y over the samples [lo, hi) of s, resonators restarted at lo.
std::vector<double> process_span(std::span<const double> s, std::size_t lo, std::size_t hi,
                                 std::size_t h, int passes, bool printed) {
  std::vector<Ext> v(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) {
    const Ext prev = i > 0 ? static_cast<Ext>(s[i - 1]) : Ext(0);
    v[i - lo] = static_cast<Ext>(s[i]) - prev;
  }
  resonate(&v, printed);
  resonate(&v, printed);
  for (int p = 0; p < passes; ++p) trend_pass(&v, h);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<double>(v[i]);
  return out;
}

}  // namespace

std::vector<double> zero_frequency_resonators(std::span<const double> x, bool printed) {
  std::vector<Ext> v(x.begin(), x.end());
  resonate(&v, printed);
  resonate(&v, printed);
  return std::vector<double>(v.begin(), v.end());
}

std::vector<double> remove_trend(std::span<const double> x, std::size_t h, int passes) {
  std::vector<Ext> v(x.begin(), x.end());
  for (int p = 0; p < passes; ++p) trend_pass(&v, h);
  return std::vector<double>(v.begin(), v.end());
}

ZfrSignal zfr_signal(const Waveform& x, const PitchPrior& prior, const ZfrConfig& cfg) {
  prior.validate(x.sample_rate_hz);
  if (cfg.trend_passes < 0) throw InvalidArgument("trend passes must be nonnegative");
  const WindowSpec win =
      odd_window(WindowShape::rectangular, cfg.trend_periods * prior.mean_period_samples);
  const std::size_t w = win.length();
  const std::size_t h = win.half_length;
  if (x.size() <= 3 * w) throw InvalidArgument("signal too short for zero-frequency filtering");
  ZfrSignal out;
  out.trend_window_samples = w;
  const std::size_t n = x.size();
  const std::span<const double> s(x.samples);

  const auto block = static_cast<std::size_t>(std::max(1.0, std::round(cfg.block_seconds *
                                                                       x.sample_rate_hz)));
  // The valid part of each block reaches 1.5 windows past its core, the
  // resonators run over 3 windows of margin. Neighbouring valid parts
  // overlap by 3 windows and are cross-faded there.
  const std::size_t margin = 3 * w;
  const std::size_t reach = (3 * w) / 2;
  if (cfg.printed_recursion || n <= block + 2 * margin) {
    out.values = process_span(s, 0, n, h, cfg.trend_passes, cfg.printed_recursion);
  } else {
    out.values.assign(n, 0.0);
    std::vector<double> weight(n, 0.0);
    for (std::size_t start = 0; start < n; start += block) {
      const std::size_t end = std::min(n, start + block);
      const std::size_t lo = start >= margin ? start - margin : 0;
      const std::size_t hi = std::min(n, end + margin);
      const auto y = process_span(s, lo, hi, h, cfg.trend_passes, false);
      const std::size_t vlo = start >= reach ? start - reach : 0;
      const std::size_t vhi = std::min(n, end + reach);
      for (std::size_t i = vlo; i < vhi; ++i) {
        // Linear ramps over the overlap of width 2 * reach.
        double g = 1.0;
        if (start > 0 && i < start + reach)
          g = std::min(g, static_cast<double>(i - vlo + 1) / (2 * reach + 1));
        if (end < n && i >= end - reach)
          g = std::min(g, static_cast<double>(vhi - i) / (2 * reach + 1));
        out.values[i] += g * y[i - lo];
        weight[i] += g;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.values[i] /= weight[i];
  }
  for (double v : out.values)
    if (!std::isfinite(v)) throw Error("zero-frequency resonator output diverged");
  return out;
}

GciSequence detect_zfr(const Waveform& x, const PitchPrior& prior, const ZfrConfig& cfg) {
  GciSequence out;
  out.source = "zfr";
  prior.validate(x.sample_rate_hz);
  const WindowSpec win =
      odd_window(WindowShape::rectangular, cfg.trend_periods * prior.mean_period_samples);
  if (x.size() <= 3 * win.length()) return out;
  const ZfrSignal z = zfr_signal(x, prior, cfg);
  for (double t : zero_crossings(z.values, CrossingDirection::positive_going)) {
    const double r = std::round(t);
    if (out.instants.empty() || r > out.instants.back()) out.instants.push_back(r);
  }
  return out;
}

}  // namespace gci
