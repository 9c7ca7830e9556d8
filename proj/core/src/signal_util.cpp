// core/src/signal_util.cpp
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

#include "gci/signal_util.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace gci {

namespace {

template <bool kMin>
std::vector<std::size_t> extrema(std::span<const double> x) {
  std::vector<std::size_t> out;
  const std::size_t n = x.size();
  if (n < 3) return out;
  auto before = [](double a, double b) { return kMin ? a > b : a < b; };
  std::size_t i = 1;
  while (i + 1 < n) {
    if (!before(x[i - 1], x[i])) {
      ++i;
      continue;
    }
    // Entering a candidate from a strict descent (minima) or ascent (maxima).
    std::size_t j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    if (j + 1 < n && before(x[j + 1], x[j])) {
      out.push_back(i + (j - i) / 2);
    }
    i = j + 1;
  }
  return out;
}

}  // namespace

std::vector<double> zero_crossings(std::span<const double> x, CrossingDirection dir,
                                   std::span<const std::uint8_t> inert) {
  std::vector<double> out;
  const bool masked = !inert.empty();
  if (masked && inert.size() != x.size())
    throw InvalidArgument("inert mask length mismatch");
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i], b = x[i + 1];
    const bool hit = dir == CrossingDirection::positive_going ? (a < 0.0 && b >= 0.0)
                                                              : (a > 0.0 && b <= 0.0);
    if (!hit) continue;
    if (masked && (inert[i] || inert[i + 1])) continue;
    out.push_back(static_cast<double>(i) + a / (a - b));
  }
  return out;
}

std::vector<double> zero_crossings(std::span<const double> x, CrossingDirection dir) {
  return zero_crossings(x, dir, std::span<const std::uint8_t>());
}

std::vector<double> zero_crossings(const Waveform& x, CrossingDirection dir) {
  return zero_crossings(std::span<const double>(x.samples), dir);
}

std::vector<std::size_t> local_minima(std::span<const double> x) {
  return extrema<true>(x);
}

std::vector<std::size_t> local_maxima(std::span<const double> x) {
  return extrema<false>(x);
}

std::vector<double> first_difference(std::span<const double> x) {
  std::vector<double> d(x.size(), 0.0);
  for (std::size_t i = 1; i < x.size(); ++i) d[i] = x[i] - x[i - 1];
  return d;
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v;
  return s / x.size();
}

double rms(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s / x.size());
}

double skewness(std::span<const double> x) {
  if (x.size() < 3) return 0.0;
  const double m = mean(x);
  double m2 = 0.0, m3 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= x.size();
  m3 /= x.size();
  if (!(m2 > 0.0)) return 0.0;
  return m3 / std::pow(m2, 1.5);
}

double median(std::vector<double> x) {
  if (x.empty()) throw InvalidArgument("median of empty sequence");
  const std::size_t mid = x.size() / 2;
  std::nth_element(x.begin(), x.begin() + mid, x.end());
  double hi = x[mid];
  if (x.size() % 2 == 1) return hi;
  double lo = *std::max_element(x.begin(), x.begin() + mid);
  return 0.5 * (lo + hi);
}

std::vector<double> sliding_max(std::span<const double> x, std::size_t h) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  std::deque<std::size_t> q;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = std::min(n - 1, i + h);
    while (next <= hi) {
      while (!q.empty() && x[q.back()] <= x[next]) q.pop_back();
      q.push_back(next++);
    }
    while (q.front() + h < i) q.pop_front();
    out[i] = x[q.front()];
  }
  return out;
}

}  // namespace gci
