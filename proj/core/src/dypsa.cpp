// core/src/dypsa.cpp
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

#include "gci/dypsa.hpp"

#include <algorithm>
#include <cmath>

#include "gci/signal_util.hpp"

namespace gci {

namespace {

double normalized_correlation(std::span<const double> s, long a, long b, long len) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (long i = 0; i < len; ++i) {
    const double x = s[a + i], y = s[b + i];
    ab += x * y;
    aa += x * x;
    bb += y * y;
  }
  if (!(aa > 0.0) || !(bb > 0.0)) return 0.0;
  return ab / std::sqrt(aa * bb);
}

}  // namespace

double cost_waveform_similarity(std::span<const double> speech, double tj, double ti,
                                int max_lag) {
  const long n = static_cast<long>(speech.size());
  const long a = std::lround(tj);
  const long b0 = std::lround(ti);
  const long period = b0 - a;
  if (period < 4 || a < 0) return 0.0;
  double best = -1.0;
  bool any = false;
  for (long lag = -max_lag; lag <= max_lag; ++lag) {
    const long b = b0 + lag;
    if (b <= a) continue;
    const long len = std::min(period, n - b);
    if (len < 4) continue;
    best = std::max(best, normalized_correlation(speech, a, b, len));
    any = true;
  }
  if (!any) return 0.0;
  return -0.5 * std::clamp(best, -1.0, 1.0);
}

double cost_pitch_deviation(double tk, double tj, double ti) {
  const double p1 = ti - tj, p2 = tj - tk;
  const double m = 0.5 * (p1 + p2);
  if (!(m > 0.0)) return 0.5;
  return std::min(std::abs(p1 - p2) / m, 0.5);
}

std::vector<double> energy_costs(std::span<const double> speech,
                                 const std::vector<Candidate>& cands, double period,
                                 std::size_t window) {
  const std::size_t n = speech.size();
  std::vector<double> out(cands.size(), 0.0);
  if (n == 0 || cands.empty()) return out;
  window = std::max<std::size_t>(1, window);
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + speech[i] * speech[i];
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = prefix[std::min(n, i + window)] - prefix[i];
  const auto h = static_cast<std::size_t>(std::lround(period));
  const auto emax = sliding_max(e, h);
  for (std::size_t c = 0; c < cands.size(); ++c) {
    const long t = std::clamp(std::lround(cands[c].time), 0L, static_cast<long>(n) - 1);
    const double em = emax[t];
    const double ratio = em > 0.0 ? e[t] / em : 0.0;
    out[c] = 0.5 - std::clamp(ratio, 0.0, 1.0);
  }
  return out;
}

DpConfig selection_lattice_config(const PitchPrior& prior, double fs,
                                  const SelectionConfig& cfg) {
  const double t0 = prior.mean_period_samples;
  DpConfig dp;
  dp.min_period = std::max(cfg.min_period_factor * t0, fs / 500.0);
  dp.max_period = std::min(cfg.max_period_factor * t0, fs / 50.0);
  dp.max_period = std::max(dp.max_period, dp.min_period);
  dp.restart_gap = cfg.restart_periods * t0;
  dp.start_cost = cfg.start_cost;
  return dp;
}

GciSequence dp_select(std::vector<Candidate> cands, const Waveform& speech,
                      const PitchPrior& prior, const CostWeights& w,
                      const SelectionConfig& cfg, std::span<const double> extra_unary) {
  GciSequence out;
  out.source = "dp";
  if (cands.empty()) return out;
  if (!extra_unary.empty() && extra_unary.size() != cands.size())
    throw InvalidArgument("extra unary cost length mismatch");
  std::vector<std::size_t> order(cands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].time < cands[b].time;
  });
  {
    std::vector<Candidate> sorted;
    sorted.reserve(cands.size());
    for (std::size_t i : order) sorted.push_back(cands[i]);
    cands.swap(sorted);
  }
  const double t0 = prior.mean_period_samples;
  const auto win = static_cast<std::size_t>(std::lround(cfg.energy_window_ms * 1e-3 * speech.sample_rate_hz));
  const auto cf = energy_costs(speech.samples, cands, t0, win);
  std::vector<double> times(cands.size()), unary(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    cands[i].costs[kCostF] = cf[i];
    times[i] = cands[i].time;
    unary[i] = w.lambda_j * cands[i].costs[kCostJ] + w.lambda_f * cands[i].costs[kCostF] +
               w.lambda_s * cands[i].costs[kCostS];
    if (!extra_unary.empty()) unary[i] += extra_unary[order[i]];
  }
  const std::span<const double> s(speech.samples);
  DpCosts costs;
  costs.unary = [&](std::size_t i) { return unary[i]; };
  costs.pair = [&](std::size_t j, std::size_t i) {
    return w.lambda_a * cost_waveform_similarity(s, times[j], times[i], cfg.similarity_max_lag);
  };
  costs.triple = [&](std::size_t k, std::size_t j, std::size_t i) {
    return w.lambda_p * cost_pitch_deviation(times[k], times[j], times[i]);
  };
  const auto picked =
      dp_select_indices(times, selection_lattice_config(prior, speech.sample_rate_hz, cfg), costs);
  const double last = static_cast<double>(speech.size()) - 1.0;
  for (std::size_t idx : picked) {
    const double r = std::clamp(std::round(times[idx]), 0.0, std::max(0.0, last));
    if (out.instants.empty() || r > out.instants.back()) out.instants.push_back(r);
  }
  return out;
}

GciSequence detect_dypsa(const Waveform& x, const PitchPrior& prior, const DypsaConfig& cfg) {
  prior.validate(x.sample_rate_hz);
  const LpcConfig lpc = cfg.lpc.value_or(LpcConfig::for_rate(x.sample_rate_hz));
  GciSequence out;
  out.source = "dypsa";
  if (x.size() < lpc.frame_len) return out;
  const Waveform e = lp_residual(x, lpc);
  const std::size_t R = cfg.group_delay_window > 0
                            ? cfg.group_delay_window
                            : default_group_delay_window(x.sample_rate_hz);
  const GroupDelay d = ewgd(e.samples, R, cfg.group_delay_shape);
  auto cands = phase_slope_project(d, 0.5 * static_cast<double>(R - 1), cfg.projection);
  const double last = static_cast<double>(x.size()) - 1.0;
  std::erase_if(cands, [&](const Candidate& c) { return c.time < 0.0 || c.time > last; });
  out = dp_select(std::move(cands), x, prior, cfg.weights, cfg.selection);
  out.source = "dypsa";
  return out;
}

}  // namespace gci
