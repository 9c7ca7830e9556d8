// core/src/hilbert.cpp
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

#include "gci/hilbert.hpp"

#include <algorithm>

#include "gci/fft.hpp"

namespace gci {

namespace {

std::vector<double> envelope_single(std::span<const double> x) {
  const std::size_t len = x.size();
  const std::size_t n = next_fast_size(len);
  std::vector<Complex> buf(n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < len; ++i) buf[i] = Complex(x[i], 0.0);
  auto X = fft(buf);
  // Analytic-signal mask: keep DC (and Nyquist), double positive bins.
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k < n; ++k) {
    if (k < half || (k == half && n % 2 == 1)) {
      X[k] *= 2.0;
    } else if (k > half) {
      X[k] = 0.0;
    }
  }
  auto z = ifft(X);
  std::vector<double> env(len);
  for (std::size_t i = 0; i < len; ++i) env[i] = std::abs(z[i]);
  return env;
}

}  // namespace

std::vector<double> hilbert_envelope(std::span<const double> x, std::size_t max_block) {
  if (x.size() < 2) throw InvalidArgument("hilbert_envelope needs at least 2 samples");
  if (max_block < 16) throw InvalidArgument("hilbert block too short");
  if (x.size() <= max_block) return envelope_single(x);
  // Overlapping blocks; each block contributes its central half.
  const std::size_t hop = max_block / 2;
  const std::size_t quarter = max_block / 4;
  std::vector<double> out(x.size(), 0.0);
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(x.size(), start + max_block);
    auto env = envelope_single(x.subspan(start, end - start));
    const bool first = start == 0;
    const bool last = end == x.size();
    const std::size_t lo = first ? start : start + quarter;
    const std::size_t hi = last ? end : start + quarter + hop;
    for (std::size_t i = lo; i < hi; ++i) out[i] = env[i - start];
    if (last) break;
    start += hop;
  }
  return out;
}

Waveform hilbert_envelope(const Waveform& x) {
  return Waveform(hilbert_envelope(x.samples, kHilbertMaxBlock), x.sample_rate_hz);
}

}  // namespace gci
