// core/src/reference.cpp
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

#include "gci/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gci/hilbert.hpp"
#include "gci/signal_util.hpp"

namespace gci {

ReferencePeaks reference_peaks(const Waveform& egg, const PitchPrior& prior,
                               const ReferenceConfig& cfg) {
  prior.validate(egg.sample_rate_hz);
  ReferencePeaks out;
  out.gcis.source = "reference";
  if (egg.size() < 3) return out;
  const auto d = first_difference(egg.samples);
  std::vector<double> mag(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) mag[i] = std::abs(d[i]);
  out.median_abs_degg = median(mag);
  const double floor = cfg.median_factor * out.median_abs_degg;
  const double t0 = prior.mean_period_samples;
  const auto local = sliding_max(d, static_cast<std::size_t>(std::lround(cfg.local_periods * t0)));

  std::vector<std::size_t> cand;
  for (std::size_t i : local_maxima(d))
    if (d[i] > 0.0 && d[i] > floor && d[i] >= cfg.relative_threshold * local[i]) cand.push_back(i);

  // Greedy suppression, strongest first.
  const double min_dist =
      std::max(cfg.min_distance_ms * 1e-3 * egg.sample_rate_hz, cfg.min_distance_periods * t0);
  std::vector<std::size_t> order(cand.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[cand[a]] > d[cand[b]]; });
  std::vector<std::size_t> sorted_kept;  // kept positions, ascending
  for (std::size_t o : order) {
    const std::size_t pos = cand[o];
    auto it = std::lower_bound(sorted_kept.begin(), sorted_kept.end(), pos);
    bool clash = false;
    if (it != sorted_kept.end() && static_cast<double>(*it - pos) < min_dist) clash = true;
    if (it != sorted_kept.begin() && static_cast<double>(pos - *(it - 1)) < min_dist) clash = true;
    if (clash) continue;
    sorted_kept.insert(it, pos);
  }
  for (std::size_t pos : sorted_kept) {
    out.gcis.instants.push_back(static_cast<double>(pos));
    out.strengths.push_back(d[pos]);
  }
  return out;
}

GciSequence reference_gcis(const Waveform& egg, const PitchPrior& prior,
                           const ReferenceConfig& cfg) {
  return reference_peaks(egg, prior, cfg).gcis;
}

DelayEstimate estimate_delay(std::span<const double> a, std::span<const double> b, long max_lag) {
  if (a.empty() || b.empty()) throw InvalidArgument("estimate_delay needs nonempty signals");
  if (max_lag < 0) throw InvalidArgument("max_lag must be nonnegative");
  const long na = static_cast<long>(a.size()), nb = static_cast<long>(b.size());
  DelayEstimate best;
  best.confidence = -2.0;
  for (long lag = -max_lag; lag <= max_lag; ++lag) {
    // a(n) against b(n + lag)
    const long lo = std::max(0L, -lag);
    const long hi = std::min(na, nb - lag);
    const long len = hi - lo;
    if (len < 2) continue;
    double sa = 0.0, sb = 0.0;
    for (long n = lo; n < hi; ++n) {
      sa += a[n];
      sb += b[n + lag];
    }
    const double ma = sa / len, mb = sb / len;
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (long n = lo; n < hi; ++n) {
      const double x = a[n] - ma, y = b[n + lag] - mb;
      ab += x * y;
      aa += x * x;
      bb += y * y;
    }
    const double r = (aa > 0.0 && bb > 0.0) ? ab / std::sqrt(aa * bb) : 0.0;
    if (r > best.confidence) {
      best.confidence = r;
      best.delay = lag;
    }
  }
  if (best.confidence < -1.0) best.confidence = 0.0;
  return best;
}

DelayEstimate align_egg(const Waveform& speech, const Waveform& egg, double max_lag_ms,
                        const AlignConfig& cfg) {
  if (speech.sample_rate_hz != egg.sample_rate_hz)
    throw InvalidArgument("speech and EGG rates differ");
  const LpcConfig lpc = cfg.lpc.value_or(LpcConfig::for_rate(speech.sample_rate_hz));
  if (speech.size() < lpc.frame_len || egg.size() < 3)
    throw AlignmentError("signals too short to align");
  auto d = first_difference(egg.samples);
  for (double& v : d) v = std::max(v, 0.0);
  const auto env = hilbert_envelope(lp_residual(speech, lpc)).samples;
  const long max_lag = std::lround(max_lag_ms * 1e-3 * speech.sample_rate_hz);
  const DelayEstimate est = estimate_delay(d, env, max_lag);
  if (est.confidence < cfg.min_confidence) {
    std::ostringstream os;
    os << "speech/EGG alignment is not confident (peak correlation " << est.confidence
       << "); supply the delay manually";
    throw AlignmentError(os.str());
  }
  return est;
}

}  // namespace gci
