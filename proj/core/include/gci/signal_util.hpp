// gci/signal_util.hpp
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

#ifndef GCI_SIGNAL_UTIL_HPP_
#define GCI_SIGNAL_UTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gci/types.hpp"

namespace gci {

enum class CrossingDirection { negative_going, positive_going };

// Fractional indices i + x[i] / (x[i] - x[i+1]) where the sign changes
// between i and i+1 in the given direction. A positive-going crossing needs
// x[i] < 0 <= x[i+1]; a negative-going one x[i] > 0 >= x[i+1].
std::vector<double> zero_crossings(std::span<const double> x, CrossingDirection dir);

// As above, skipping pairs where either sample is flagged inert.
std::vector<double> zero_crossings(std::span<const double> x, CrossingDirection dir,
                                   std::span<const std::uint8_t> inert);

std::vector<double> zero_crossings(const Waveform& x, CrossingDirection dir);

// Strict local minima. A flat run bounded by a descent and an ascent counts
// once, at the (lower) midpoint of the run. End points are never extrema.
std::vector<std::size_t> local_minima(std::span<const double> x);
std::vector<std::size_t> local_maxima(std::span<const double> x);

// x[n] - x[n-1] with x[-1] = x[0], same length.
std::vector<double> first_difference(std::span<const double> x);

double mean(std::span<const double> x);
double rms(std::span<const double> x);
// Sample skewness; 0 for constant input.
double skewness(std::span<const double> x);
// Median of a copy; throws on empty input.
double median(std::vector<double> x);

// y[i] = max(x[i-h .. i+h]), truncated at the edges.
std::vector<double> sliding_max(std::span<const double> x, std::size_t h);

}  // namespace gci

#endif  // GCI_SIGNAL_UTIL_HPP_
