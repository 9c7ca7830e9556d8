// gci/dp.hpp
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

#ifndef GCI_DP_HPP_
#define GCI_DP_HPP_

#include <cstddef>
#include <functional>
#include <vector>

namespace gci {

/// Period constraints of the selection lattice, in samples.
struct DpConfig {
  double min_period = 0.0;  // closer pairs are never both selected
  double max_period = 0.0;  // wider gaps start a new voiced segment
  double restart_gap = 0.0; // lattice split points, clamped to >= max_period
  double start_cost = 0.0;  // charged to the first candidate of a segment
};

/// Elementary costs of a selection. The total cost of a time-ordered subset
/// s_1..s_m is
///   sum_r unary(s_r)
///   + start_cost for each r starting a segment (r = 1 or gap > max_period)
///   + pair(s_{r-1}, s_r) for each connected step (gap in range)
///   + triple(s_{r-2}, s_{r-1}, s_r) when both steps are connected,
/// and infinite if any gap is below min_period. The empty set costs 0.
struct DpCosts {
  std::function<double(std::size_t)> unary;
  std::function<double(std::size_t, std::size_t)> pair;
  std::function<double(std::size_t, std::size_t, std::size_t)> triple;
};

// Exact minimizer of the cost above over all subsets. times must be sorted.
// Returns selected indices in increasing order.
std::vector<std::size_t> dp_select_indices(const std::vector<double>& times,
                                           const DpConfig& cfg, const DpCosts& costs);

// Cost of one specific subset (indices increasing), for checking.
double selection_cost(const std::vector<std::size_t>& selection,
                      const std::vector<double>& times, const DpConfig& cfg,
                      const DpCosts& costs);

}  // namespace gci

#endif  // GCI_DP_HPP_
