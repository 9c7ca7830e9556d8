// core/src/dp.cpp
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

#include "gci/dp.hpp"

#include <algorithm>
#include <limits>

#include "gci/types.hpp"

namespace gci {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kNone = -1;

// State (j, i): i selected with predecessor j connected to it. State
// START(i): i opens a segment.
struct PairState {
  std::size_t j;
  double cost;
  long back;  // index into states of j, or kNone for START(j)
};

struct Node {
  double start_cost = kInf;
  long start_back = kNone;  // candidate whose best ending precedes, or none
  std::vector<PairState> states;
  double end_cost = kInf;
  long end_state = kNone;  // kNone means START(i)
};

void solve_segment(const std::vector<double>& t, std::size_t b, std::size_t e,
                   const DpConfig& cfg, const DpCosts& costs,
                   std::vector<std::size_t>* selection) {
  std::vector<Node> nodes(e - b);
  auto node = [&](std::size_t i) -> Node& { return nodes[i - b]; };

  std::size_t ptr = b;
  double best_end = kInf;
  long best_end_idx = kNone;
  std::size_t lo = b;

  for (std::size_t i = b; i < e; ++i) {
    Node& ni = node(i);
    const double ui = costs.unary(i);

    while (ptr < i && t[ptr] < t[i] - cfg.max_period) {
      if (node(ptr).end_cost < best_end) {
        best_end = node(ptr).end_cost;
        best_end_idx = static_cast<long>(ptr);
      }
      ++ptr;
    }
    ni.start_cost = ui + cfg.start_cost;
    if (best_end < 0.0) {
      ni.start_cost += best_end;
      ni.start_back = best_end_idx;
    }

    while (lo < i && t[i] - t[lo] > cfg.max_period) ++lo;
    for (std::size_t j = lo; j < i; ++j) {
      const double gap = t[i] - t[j];
      if (gap < cfg.min_period) break;
      const Node& nj = node(j);
      double base = nj.start_cost;
      long back = kNone;
      for (std::size_t s = 0; s < nj.states.size(); ++s) {
        const double c = nj.states[s].cost + costs.triple(nj.states[s].j, j, i);
        if (c < base) {
          base = c;
          back = static_cast<long>(s);
        }
      }
      ni.states.push_back({j, ui + costs.pair(j, i) + base, back});
    }

    ni.end_cost = ni.start_cost;
    ni.end_state = kNone;
    for (std::size_t s = 0; s < ni.states.size(); ++s) {
      if (ni.states[s].cost < ni.end_cost) {
        ni.end_cost = ni.states[s].cost;
        ni.end_state = static_cast<long>(s);
      }
    }
  }

  double best = 0.0;
  long last = kNone;
  for (std::size_t i = b; i < e; ++i) {
    if (node(i).end_cost < best) {
      best = node(i).end_cost;
      last = static_cast<long>(i);
    }
  }
  if (last == kNone) return;

  std::vector<std::size_t> picked;
  std::size_t i = static_cast<std::size_t>(last);
  long state = node(i).end_state;
  while (true) {
    picked.push_back(i);
    const Node& ni = node(i);
    if (state == kNone) {
      if (ni.start_back == kNone) break;
      i = static_cast<std::size_t>(ni.start_back);
      state = node(i).end_state;
    } else {
      const PairState& ps = ni.states[static_cast<std::size_t>(state)];
      state = ps.back;
      i = ps.j;
    }
  }
  std::reverse(picked.begin(), picked.end());
  selection->insert(selection->end(), picked.begin(), picked.end());
}

}  // namespace

std::vector<std::size_t> dp_select_indices(const std::vector<double>& times,
                                           const DpConfig& cfg, const DpCosts& costs) {
  if (!(cfg.min_period >= 0.0) || !(cfg.max_period >= cfg.min_period))
    throw InvalidArgument("invalid period range for selection");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] < times[i - 1]) throw InvalidArgument("candidates must be time-sorted");
  std::vector<std::size_t> selection;
  const double split = std::max(cfg.restart_gap, cfg.max_period);
  std::size_t b = 0;
  for (std::size_t i = 1; i <= times.size(); ++i) {
    if (i == times.size() || times[i] - times[i - 1] > split) {
      solve_segment(times, b, i, cfg, costs, &selection);
      b = i;
    }
  }
  return selection;
}

double selection_cost(const std::vector<std::size_t>& sel, const std::vector<double>& t,
                      const DpConfig& cfg, const DpCosts& costs) {
  double total = 0.0;
  bool prev_connected = false;
  for (std::size_t r = 0; r < sel.size(); ++r) {
    total += costs.unary(sel[r]);
    if (r == 0) {
      total += cfg.start_cost;
      prev_connected = false;
      continue;
    }
    const double gap = t[sel[r]] - t[sel[r - 1]];
    if (gap < cfg.min_period) return kInf;
    if (gap > cfg.max_period) {
      total += cfg.start_cost;
      prev_connected = false;
      continue;
    }
    total += costs.pair(sel[r - 1], sel[r]);
    if (prev_connected) total += costs.triple(sel[r - 2], sel[r - 1], sel[r]);
    prev_connected = true;
  }
  return total;
}

}  // namespace gci
