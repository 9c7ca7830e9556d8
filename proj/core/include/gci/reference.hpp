// gci/reference.hpp
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

#ifndef GCI_REFERENCE_HPP_
#define GCI_REFERENCE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "gci/lpc.hpp"
#include "gci/types.hpp"

namespace gci {

/// Thrown when speech and EGG cannot be aligned with confidence.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

struct ReferenceConfig {
  double min_distance_ms = 2.0;
  double min_distance_periods = 0.5;
  double median_factor = 3.0;       // peaks must exceed this * median |dEGG|
  double relative_threshold = 0.2;  // and this fraction of the local maximum
  double local_periods = 2.0;       // half-width of the local-maximum window
};

struct ReferencePeaks {
  GciSequence gcis;
  std::vector<double> strengths;  // dEGG value at each peak
  double median_abs_degg = 0.0;
};

// Positive dEGG peaks above the adaptive threshold, with greedy
// non-maximum suppression at max(min_distance_ms, min_distance_periods * T0).
ReferencePeaks reference_peaks(const Waveform& egg, const PitchPrior& prior,
                               const ReferenceConfig& cfg = {});
GciSequence reference_gcis(const Waveform& egg, const PitchPrior& prior,
                           const ReferenceConfig& cfg = {});

struct DelayEstimate {
  long delay = 0;  // samples by which b lags a
  double confidence = 0.0;  // Pearson correlation at the peak
};

// Lag in [-max_lag, max_lag] maximizing the Pearson correlation of a(n) and
// b(n + lag) over their overlap.
DelayEstimate estimate_delay(std::span<const double> a, std::span<const double> b, long max_lag);

struct AlignConfig {
  double min_confidence = 0.2;
  std::optional<LpcConfig> lpc;
};

// Delay (samples) of the speech relative to the EGG: positive means the
// speech lags. Correlates the positive dEGG with the Hilbert envelope of the
// speech LP residual. Throws AlignmentError below min_confidence.
DelayEstimate align_egg(const Waveform& speech, const Waveform& egg, double max_lag_ms,
                        const AlignConfig& cfg = {});

}  // namespace gci

#endif  // GCI_REFERENCE_HPP_
