// gci/yaga.hpp
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

#ifndef GCI_YAGA_HPP_
#define GCI_YAGA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gci/dypsa.hpp"
#include "gci/group_delay.hpp"
#include "gci/lpc.hpp"
#include "gci/types.hpp"

namespace gci {

/// Analysis pair of the undecimated transform. The defaults are the
/// quadratic-spline derivative pair used for singularity detection.
struct WaveletFilters {
  std::vector<double> lowpass{0.125, 0.375, 0.375, 0.125};
  std::vector<double> highpass{2.0, -2.0};
};

struct MultiscaleProduct {
  std::vector<double> values;
  int depth = 3;
};

// Inverse filter of the non-preemphasized signal with coefficients estimated
// on the preemphasized one.
Waveform voice_source_estimate(const Waveform& x, const LpcConfig& cfg);

// Detail signals d_1..d_j1 of the a trous transform (filters upsampled by two
// per level, symmetric boundary extension). Throws if the signal is too short.
std::vector<std::vector<double>> swt_details(std::span<const double> u, int j1,
                                             const WaveletFilters& f = {});

// p(n) = prod_j d_j(n).
MultiscaleProduct swt_multiscale_product(const Waveform& u, int j1 = 3,
                                         const WaveletFilters& f = {});

// GCI/GOI polarity cost on u': the normalized step between the means of
// [t, t+m) and [t-m, t). Rising steps (closures) are rewarded, falling
// ones penalised. Range [-0.5, 0.5].
double cost_source_polarity(std::span<const double> u, double t, std::size_t m);

struct YagaConfig {
  std::optional<LpcConfig> lpc;
  int depth = 3;
  WaveletFilters filters;
  std::size_t group_delay_window = 0;
  WindowShape group_delay_shape = WindowShape::hamming;
  ProjectionCosts projection;
  CostWeights weights;
  double lambda_g = 0.4;
  double polarity_half_width_ms = 0.5;
  SelectionConfig selection = [] {
    SelectionConfig s;
    s.similarity_max_lag = 2;
    return s;
  }();
};

GciSequence detect_yaga(const Waveform& x, const PitchPrior& prior, const YagaConfig& cfg = {});

}  // namespace gci

#endif  // GCI_YAGA_HPP_
