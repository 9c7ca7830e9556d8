// gci/sedreams.hpp
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

#ifndef GCI_SEDREAMS_HPP_
#define GCI_SEDREAMS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gci/lpc.hpp"
#include "gci/types.hpp"
#include "gci/window.hpp"

namespace gci {

struct MeanBasedSignal {
  std::vector<double> values;
  WindowSpec window;
};

struct PresenceInterval {
  double start = 0.0;   // sample index of a mean-based minimum
  double length = 0.0;  // samples
};

struct SedreamsConfig {
  std::optional<LpcConfig> lpc;
  WindowShape window_shape = WindowShape::blackman;
  double window_periods = 1.75;
  double interval_ratio = 0.35;
  // Local periods used for interval lengths are capped at this many prior
  // periods, so that pauses do not open huge intervals.
  double max_local_periods = 2.0;
  // The fast variant estimates LPC models on a hop this many times longer.
  std::size_t fast_lpc_hop_factor = 2;
};

// y(n) = sum_m w(m) x(n+m) / sum_m w(m), the sum running over the part of the
// window inside the signal.
MeanBasedSignal mean_based_signal(const Waveform& x, const PitchPrior& prior,
                                  const SedreamsConfig& cfg = {});

// Mean-based value at a single index.
double mean_based_at(std::span<const double> x, std::span<const double> weights, long n);

// One interval per minimum, length ratio * (distance to the next minimum); the
// last one reuses the previous distance. Fewer than 2 minima give nothing.
std::vector<PresenceInterval> intervals_of_presence(const MeanBasedSignal& m,
                                                    double ratio = 0.35,
                                                    double max_period = 0.0);
std::vector<PresenceInterval> intervals_from_minima(const std::vector<double>& minima,
                                                    double ratio, double max_period);

// Inside each interval [start, start + length], the index of the largest
// positive residual sample. Intervals without positive samples are skipped.
GciSequence refine_with_residual(const std::vector<PresenceInterval>& intervals,
                                 std::span<const double> residual);

GciSequence detect_sedreams(const Waveform& x, const PitchPrior& prior,
                            const SedreamsConfig& cfg = {});

// Largest p' <= p with 1.75 * 2^p' <= prior period.
int fast_decimation_exponent(const PitchPrior& prior, int p);

// The mean-based signal is evaluated on multiples of 2^p only; its minima are
// refined by p halvings and the residual is computed only where intervals
// need it.
GciSequence detect_sedreams_fast(const Waveform& x, const PitchPrior& prior, int p = 4,
                                 const SedreamsConfig& cfg = {});

}  // namespace gci

#endif  // GCI_SEDREAMS_HPP_
