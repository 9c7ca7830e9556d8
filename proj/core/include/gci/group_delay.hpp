// gci/group_delay.hpp
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

#ifndef GCI_GROUP_DELAY_HPP_
#define GCI_GROUP_DELAY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gci/window.hpp"

namespace gci {

/// Energy-weighted group delay d(n) of the window starting at n.
struct GroupDelay {
  std::vector<double> values;
  std::vector<std::uint8_t> inert;  // window content negligible
  std::size_t window_length = 0;
  WindowShape shape = WindowShape::hamming;
};

// R = round(1.2 * (fs / max_f0) / 2), at least 4.
std::size_t default_group_delay_window(double sample_rate_hz, double max_f0_hz = 500.0);

// d(n) = sum_r r x_n(r)^2 / sum_r x_n(r)^2 - (R-1)/2, x_n(r) = w(r) e(n+r),
// for r = 0..R-1 and samples past the end taken as zero. A rectangular window
// runs on sliding sums; other shapes on a direct R-tap weighted sum.
GroupDelay ewgd(std::span<const double> e, std::size_t R,
                WindowShape shape = WindowShape::hamming);

// Same quantity for one already-windowed frame x(0..R-1), computed from the
// spectrum: tau(k) = Re{X_r(k) / X(k)} with X_r the DFT of r x(r), averaged
// over all bins of a 2R-point DFT with weights |X(k)|^2. Bins with X(k) = 0
// carry no weight. Returns the average minus (R-1)/2.
double group_delay_spectral(std::span<const double> frame);

enum class CandidateOrigin { zero_crossing, projected };

/// Indices into Candidate::costs.
enum CostIndex : std::size_t { kCostA = 0, kCostP = 1, kCostJ = 2, kCostF = 3, kCostS = 4 };

/// A GCI candidate of the selection lattice.
struct Candidate {
  double time = 0.0;  // fractional sample index
  CandidateOrigin origin = CandidateOrigin::zero_crossing;
  double slope = -1.0;  // d(i+1) - d(i) at a crossing; -1 for projections
  // c_A, c_P, c_J, c_F, c_S. The pairwise terms c_A and c_P depend on the
  // chosen predecessors and stay 0 here.
  std::array<double, 5> costs{};
};

struct ProjectionCosts {
  double crossing_cj = 0.0;   // c_J of zero-crossing candidates
  double projected_cj = 0.5;  // c_J of projected candidates
};

// Negative-going crossings of d plus slope -1 projections of every
// minimum-then-maximum excursion that does not cross zero. Times are shifted
// by time_offset; c_J and c_S are filled in.
std::vector<Candidate> phase_slope_project(const GroupDelay& d, double time_offset = 0.0,
                                           const ProjectionCosts& pc = {});

// Phase-slope deviation cost min(|slope + 1|, 1) - 0.5.
double cost_phase_slope(double slope);

}  // namespace gci

#endif  // GCI_GROUP_DELAY_HPP_
