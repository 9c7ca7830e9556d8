// core/src/group_delay.cpp
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

#include "gci/group_delay.hpp"

#include <algorithm>
#include <cmath>

#include "gci/fft.hpp"
#include "gci/signal_util.hpp"
#include "gci/types.hpp"

namespace gci {

std::size_t default_group_delay_window(double fs, double max_f0_hz) {
  const double r = std::round(1.2 * (fs / max_f0_hz) / 2.0);
  return std::max<std::size_t>(4, static_cast<std::size_t>(r));
}

GroupDelay ewgd(std::span<const double> e, std::size_t R, WindowShape shape) {
  if (R < 4) throw InvalidArgument("group delay window must be at least 4 samples");
  GroupDelay gd;
  gd.window_length = R;
  gd.shape = shape;
  const std::size_t n = e.size();
  gd.values.assign(n, 0.0);
  gd.inert.assign(n, 0);
  if (n == 0) return gd;
  std::vector<double> s0(n), s1(n);
  std::vector<double> e2(n);
  for (std::size_t i = 0; i < n; ++i) e2[i] = e[i] * e[i];

  if (shape == WindowShape::rectangular) {
    // Running sums, recomputed from scratch every block to bound drift.
    constexpr std::size_t kReanchor = 512;
    long double a0 = 0.0L, a1 = 0.0L;  // sum e2, sum m*e2 with absolute m
    for (std::size_t i = 0; i < n; ++i) {
      if (i % kReanchor == 0) {
        a0 = a1 = 0.0L;
        for (std::size_t m = i; m < std::min(n, i + R); ++m) {
          a0 += e2[m];
          a1 += static_cast<long double>(m) * e2[m];
        }
      } else {
        const std::size_t out = i - 1, in = i + R - 1;
        a0 -= e2[out];
        a1 -= static_cast<long double>(out) * e2[out];
        if (in < n) {
          a0 += e2[in];
          a1 += static_cast<long double>(in) * e2[in];
        }
      }
      s0[i] = static_cast<double>(a0);
      s1[i] = static_cast<double>(a1 - static_cast<long double>(i) * a0);
    }
  } else {
    const auto w = make_symmetric_window(shape, R);
    std::vector<double> q(R), rq(R);
    for (std::size_t r = 0; r < R; ++r) {
      q[r] = w[r] * w[r];
      rq[r] = static_cast<double>(r) * q[r];
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t len = std::min(R, n - i);
      double a0 = 0.0, a1 = 0.0;
      for (std::size_t r = 0; r < len; ++r) {
        a0 += q[r] * e2[i + r];
        a1 += rq[r] * e2[i + r];
      }
      s0[i] = a0;
      s1[i] = a1;
    }
  }

  double smax = 0.0;
  for (double v : s0) smax = std::max(smax, v);
  const double eps = 1e-14 * smax;
  const double centre = 0.5 * static_cast<double>(R - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(s0[i] > eps)) {
      gd.inert[i] = 1;
      continue;
    }
    gd.values[i] = std::clamp(s1[i] / s0[i] - centre, -centre, centre);
  }
  return gd;
}

double group_delay_spectral(std::span<const double> frame) {
  const std::size_t R = frame.size();
  if (R == 0) throw InvalidArgument("empty group delay frame");
  std::vector<double> x(frame.begin(), frame.end()), rx(R);
  for (std::size_t r = 0; r < R; ++r) rx[r] = static_cast<double>(r) * x[r];
  const std::size_t n = 2 * R;
  const auto X = rfft(x, n);
  const auto Xr = rfft(rx, n);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < X.size(); ++k) {
    const double p = std::norm(X[k]);
    if (!(p > 0.0)) continue;
    const double tau = (Xr[k] / X[k]).real();
    // Interior bins stand for their conjugate twins too.
    const double mult = (k == 0 || k == n / 2) ? 1.0 : 2.0;
    num += mult * p * tau;
    den += mult * p;
  }
  if (!(den > 0.0)) return 0.0;
  return num / den - 0.5 * static_cast<double>(R - 1);
}

double cost_phase_slope(double slope) {
  return std::min(std::abs(slope + 1.0), 1.0) - 0.5;
}

std::vector<Candidate> phase_slope_project(const GroupDelay& d, double time_offset,
                                           const ProjectionCosts& pc) {
  std::vector<Candidate> out;
  const auto& v = d.values;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = v[i], b = v[i + 1];
    if (!(a > 0.0 && b <= 0.0)) continue;
    if (d.inert[i] || d.inert[i + 1]) continue;
    Candidate c;
    c.time = static_cast<double>(i) + a / (a - b) + time_offset;
    c.origin = CandidateOrigin::zero_crossing;
    c.slope = b - a;
    c.costs[kCostJ] = pc.crossing_cj;
    c.costs[kCostS] = cost_phase_slope(c.slope);
    out.push_back(c);
  }

  // Extrema in order; a minimum directly followed by a maximum of the same
  // sign is an excursion that failed to cross zero.
  const auto mins = local_minima(v);
  const auto maxs = local_maxima(v);
  std::size_t k = 0;
  for (std::size_t m = 0; m < mins.size(); ++m) {
    const std::size_t n1 = mins[m];
    while (k < maxs.size() && maxs[k] <= n1) ++k;
    if (k >= maxs.size()) break;
    const std::size_t n2 = maxs[k];
    if (m + 1 < mins.size() && mins[m + 1] < n2) continue;
    if (d.inert[n1] || d.inert[n2]) continue;
    const double d1 = v[n1], d2 = v[n2];
    const bool same_sign = (d1 < 0.0 && d2 < 0.0) || (d1 > 0.0 && d2 > 0.0);
    if (!same_sign) continue;
    bool gap = false;
    for (std::size_t i = n1; i <= n2; ++i) gap = gap || d.inert[i];
    if (gap) continue;
    Candidate c;
    c.time = 0.5 * static_cast<double>(n1 + n2) + 0.5 * (d1 + d2) + time_offset;
    c.origin = CandidateOrigin::projected;
    c.slope = -1.0;
    c.costs[kCostJ] = pc.projected_cj;
    c.costs[kCostS] = 0.0;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& x, const Candidate& y) { return x.time < y.time; });
  return out;
}

}  // namespace gci
