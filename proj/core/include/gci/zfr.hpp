// gci/zfr.hpp
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

#ifndef GCI_ZFR_HPP_
#define GCI_ZFR_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gci/types.hpp"

namespace gci {

struct ZfrConfig {
  double trend_periods = 1.5;
  int trend_passes = 3;
  // Use y(n) = x(n) + 2y(n-1) + y(n-2) as printed in the original
  // description. Its poles are 1 +- sqrt(2) and the output diverges.
  bool printed_recursion = false;
  double block_seconds = 1.0;
};

struct ZfrSignal {
  std::vector<double> values;
  std::size_t trend_window_samples = 0;
};

// Two cascaded resonators applied to x without differencing or trend
// removal, from zero state. Useful to inspect the polynomial growth.
std::vector<double> zero_frequency_resonators(std::span<const double> x,
                                              bool printed_recursion = false);

// Removes the local mean over [n-h, n+h] (truncated and renormalized at the
// edges), `passes` times.
std::vector<double> remove_trend(std::span<const double> x, std::size_t h, int passes);

// Difference, two resonators, repeated trend removal with a window of odd
// length >= trend_periods * T0. Throws InvalidArgument if x is not longer
// than three windows.
ZfrSignal zfr_signal(const Waveform& x, const PitchPrior& prior, const ZfrConfig& cfg = {});

// Positive-going zero crossings of zfr_signal; empty for inputs that are too
// short.
GciSequence detect_zfr(const Waveform& x, const PitchPrior& prior, const ZfrConfig& cfg = {});

}  // namespace gci

#endif  // GCI_ZFR_HPP_
