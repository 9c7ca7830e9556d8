// gci/he.hpp
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

#ifndef GCI_HE_HPP_
#define GCI_HE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gci/lpc.hpp"
#include "gci/types.hpp"
#include "gci/window.hpp"

namespace gci {

/// Centre-of-gravity signal over a nonnegative envelope.
struct CogSignal {
  std::vector<double> values;
  std::vector<std::uint8_t> inert;  // 1 where the denominator was negligible
  WindowSpec window;
};

struct HeConfig {
  std::optional<LpcConfig> lpc;  // defaults to LpcConfig::for_rate
  WindowShape window_shape = WindowShape::blackman;
  double window_periods = 1.1;
  double merge_periods = 0.2;
};

// CoG(n) = sum_m m w(m) H(n+m) / sum_m w(m) H(n+m), m in [-N, N]. Samples
// outside the signal count as zero.
CogSignal cog_signal(const Waveform& envelope, const WindowSpec& window);

// Same evaluated at a single index. Sets *inert if the denominator is below
// eps.
double cog_at(std::span<const double> envelope, std::span<const double> weights,
              long n, double eps, bool* inert);

// Keeps crossings at least min_spacing apart. Within a cluster the crossing
// with the larger local envelope energy (sum of squares over +-half_width)
// wins.
std::vector<double> merge_close_crossings(const std::vector<double>& crossings,
                                          std::span<const double> envelope,
                                          double min_spacing, std::size_t half_width);

GciSequence detect_he(const Waveform& x, const PitchPrior& prior,
                      const HeConfig& cfg = {});

// Coarse evaluation of CoG at multiples of 2^p, crossings refined by
// bisection. p is lowered (with a warning) when 1.75 * 2^p exceeds the prior.
GciSequence detect_he_fast(const Waveform& x, const PitchPrior& prior, int p = 4,
                           const HeConfig& cfg = {});

}  // namespace gci

#endif  // GCI_HE_HPP_
