// gci/dypsa.hpp
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

#ifndef GCI_DYPSA_HPP_
#define GCI_DYPSA_HPP_

#include <optional>
#include <span>
#include <vector>

#include "gci/dp.hpp"
#include "gci/group_delay.hpp"
#include "gci/lpc.hpp"
#include "gci/types.hpp"

namespace gci {

/// Weights of c_A, c_P, c_J, c_F, c_S.
struct CostWeights {
  double lambda_a = 0.8;
  double lambda_p = 0.5;
  double lambda_j = 0.4;
  double lambda_f = 0.3;
  double lambda_s = 0.1;
};

struct SelectionConfig {
  double min_period_factor = 0.5;  // times the prior, clamped to fs/500
  double max_period_factor = 2.0;  // times the prior, clamped to fs/50
  double restart_periods = 10.0;
  double start_cost = 0.0;
  int similarity_max_lag = 0;  // lag search for c_A, in samples
  double energy_window_ms = 0.5;  // c_F energy window starting at the candidate
};

// c_A = -rho/2, rho the normalized correlation of [tj, ti) with the next
// cycle [ti, ti + (ti - tj)), maximized over lags in [-max_lag, max_lag].
double cost_waveform_similarity(std::span<const double> speech, double tj, double ti,
                                int max_lag = 0);

// c_P = min(|p1 - p2| / mean(p1, p2), 0.5) for periods p1 = ti - tj and
// p2 = tj - tk.
double cost_pitch_deviation(double tk, double tj, double ti);

// c_F = 0.5 - E(t) / max E over [t - T0, t + T0], where E(t) is the energy of
// [t, t + window).
std::vector<double> energy_costs(std::span<const double> speech,
                                 const std::vector<Candidate>& cands, double period,
                                 std::size_t window);

// Period range used for a prior.
DpConfig selection_lattice_config(const PitchPrior& prior, double sample_rate_hz,
                                  const SelectionConfig& cfg);

// Fills c_F, runs the exact selection and rounds the chosen times. extra_unary
// (if nonempty) is added to each candidate's weighted unary cost.
GciSequence dp_select(std::vector<Candidate> cands, const Waveform& speech,
                      const PitchPrior& prior, const CostWeights& weights,
                      const SelectionConfig& cfg = {},
                      std::span<const double> extra_unary = {});

struct DypsaConfig {
  std::optional<LpcConfig> lpc;
  std::size_t group_delay_window = 0;  // 0: default_group_delay_window
  WindowShape group_delay_shape = WindowShape::hamming;
  ProjectionCosts projection;
  CostWeights weights;
  SelectionConfig selection;
};

GciSequence detect_dypsa(const Waveform& x, const PitchPrior& prior,
                         const DypsaConfig& cfg = {});

}  // namespace gci

#endif  // GCI_DYPSA_HPP_
