// core/src/evaluation.cpp
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

#include "gci/evaluation.hpp"

#include <algorithm>
#include <cmath>

namespace gci {

std::size_t ReferenceCycles::voiced_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.voiced ? 1 : 0;
  return n;
}

ReferenceCycles make_reference_cycles(const GciSequence& ref, double fs,
                                      std::span<const double> strengths,
                                      double strength_threshold, const VoicingConfig& vc) {
  if (!ref.is_strictly_increasing()) throw InvalidArgument("reference GCIs must increase");
  if (!strengths.empty() && strengths.size() != ref.size())
    throw InvalidArgument("strength count does not match references");
  ReferenceCycles out;
  out.ref_gcis = ref;
  out.sample_rate_hz = fs;
  const auto& r = ref.instants;
  const std::size_t k = r.size();
  if (k < 2) return out;
  const double pmin = vc.min_period_ms * 1e-3 * fs;
  const double pmax = vc.max_period_ms * 1e-3 * fs;
  for (std::size_t i = 0; i < k; ++i) {
    Cycle c;
    c.ref = r[i];
    c.lo = i > 0 ? 0.5 * (r[i - 1] + r[i]) : r[0] - 0.5 * (r[1] - r[0]);
    c.hi = i + 1 < k ? 0.5 * (r[i] + r[i + 1]) : r[k - 1] + 0.5 * (r[k - 1] - r[k - 2]);
    // Both adjacent periods must be plausible.
    const double prev = i > 0 ? r[i] - r[i - 1] : r[1] - r[0];
    const double next = i + 1 < k ? r[i + 1] - r[i] : r[k - 1] - r[k - 2];
    c.voiced = prev >= pmin && prev <= pmax && next >= pmin && next <= pmax;
    if (!strengths.empty()) c.voiced = c.voiced && strengths[i] > strength_threshold;
    out.cycles.push_back(c);
  }
  return out;
}

ReferenceCycles reference_cycles_from_egg(const Waveform& egg, const PitchPrior& prior,
                                          double delay, const ReferenceConfig& rc,
                                          const VoicingConfig& vc) {
  ReferencePeaks peaks = reference_peaks(egg, prior, rc);
  for (double& t : peaks.gcis.instants) t += delay;
  return make_reference_cycles(peaks.gcis, egg.sample_rate_hz, peaks.strengths,
                               rc.median_factor * peaks.median_abs_degg, vc);
}

void EvalCounts::merge(const EvalCounts& o) {
  cycles += o.cycles;
  hits += o.hits;
  misses += o.misses;
  false_alarms += o.false_alarms;
  errors_ms.insert(errors_ms.end(), o.errors_ms.begin(), o.errors_ms.end());
}

EvalCounts count_outcomes(const ReferenceCycles& ref, const GciSequence& est) {
  EvalCounts c;
  const auto& e = est.instants;
  if (!std::is_sorted(e.begin(), e.end())) throw InvalidArgument("estimates must be sorted");
  const double to_ms = 1000.0 / ref.sample_rate_hz;
  for (const auto& cy : ref.cycles) {
    if (!cy.voiced) continue;
    ++c.cycles;
    auto lo = std::lower_bound(e.begin(), e.end(), cy.lo);
    auto hi = std::lower_bound(e.begin(), e.end(), cy.hi);
    const auto count = hi - lo;
    if (count == 0) {
      ++c.misses;
    } else if (count == 1) {
      ++c.hits;
      c.errors_ms.push_back((*lo - cy.ref) * to_ms);
    } else {
      ++c.false_alarms;
    }
  }
  return c;
}

EvalReport make_report(const EvalCounts& c, double bound_ms) {
  if (c.cycles == 0) throw InvalidArgument("no voiced reference cycles to evaluate");
  EvalReport r;
  const double n = static_cast<double>(c.cycles);
  r.cycles = c.cycles;
  r.idr_pct = 100.0 * c.hits / n;
  r.mr_pct = 100.0 * c.misses / n;
  r.far_pct = 100.0 * c.false_alarms / n;
  r.errors_ms = c.errors_ms;
  if (!c.errors_ms.empty()) {
    double s = 0.0;
    for (double v : c.errors_ms) s += v;
    const double m = s / c.errors_ms.size();
    double ss = 0.0;
    std::size_t within = 0;
    for (double v : c.errors_ms) {
      ss += (v - m) * (v - m);
      if (std::abs(v) <= bound_ms) ++within;
    }
    r.ida_ms = std::sqrt(ss / c.errors_ms.size());
    r.acc025_pct = 100.0 * within / c.errors_ms.size();
  }
  return r;
}

EvalReport evaluate(const ReferenceCycles& ref, const GciSequence& est) {
  return make_report(count_outcomes(ref, est));
}

std::vector<HistogramBin> error_histogram(std::span<const double> errors, double bin_ms,
                                          double range_ms) {
  if (!(bin_ms > 0.0) || !(range_ms > 0.0)) throw InvalidArgument("invalid histogram bins");
  const auto nbins = static_cast<std::size_t>(std::ceil(2.0 * range_ms / bin_ms - 1e-9));
  std::vector<HistogramBin> bins(nbins);
  for (std::size_t b = 0; b < nbins; ++b) bins[b].center_ms = -range_ms + (b + 0.5) * bin_ms;
  for (double v : errors) {
    long b = static_cast<long>(std::floor((v + range_ms) / bin_ms));
    b = std::clamp(b, 0L, static_cast<long>(nbins) - 1);
    ++bins[static_cast<std::size_t>(b)].count;
  }
  return bins;
}

}  // namespace gci
