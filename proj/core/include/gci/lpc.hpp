// gci/lpc.hpp
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

#ifndef GCI_LPC_HPP_
#define GCI_LPC_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gci/types.hpp"
#include "gci/window.hpp"

namespace gci {

/// Frame-based autocorrelation LPC configuration.
struct LpcConfig {
  std::size_t order = 18;
  std::size_t frame_len = 400;
  std::size_t hop = 80;
  double preemphasis = 0.97;
  WindowShape window = WindowShape::hamming;

  // order = 2 + fs/1000, 25 ms frames, 5 ms hop.
  static LpcConfig for_rate(double sample_rate_hz);
  void validate() const;
};

/// Prediction-error polynomial A(z) = 1 + sum_k a_k z^-k.
struct LpcModel {
  std::size_t order = 0;
  std::vector<double> coefficients;  // a_1..a_p
  std::vector<double> reflection;    // k_1..k_p
  double error_power = 0.0;
};

struct LpcFrame {
  std::size_t start = 0;
  LpcModel model;
};

std::vector<double> autocorrelation(std::span<const double> x, std::size_t max_lag);

// Levinson-Durbin recursion. A zero or non-positive r[0] gives the identity
// model. The recursion stops early (remaining coefficients zero) if the
// prediction error collapses.
LpcModel levinson_durbin(std::span<const double> r, std::size_t order);

std::vector<double> preemphasize(std::span<const double> x, double coef);

// One model per frame, computed on the preemphasized signal. Throws
// InvalidArgument if x is shorter than one frame.
std::vector<LpcFrame> lpc_analyze(const Waveform& x, const LpcConfig& cfg);

// Index of the frame whose centre is closest to sample n.
std::size_t frame_for_sample(std::size_t n, std::size_t num_frames,
                             const LpcConfig& cfg);

// Applies the frame-switched prediction-error filter to x (no preemphasis is
// applied here). Filter memory is the input history, so switching is
// continuous.
std::vector<double> inverse_filter(std::span<const double> x,
                                   const std::vector<LpcFrame>& frames,
                                   const LpcConfig& cfg);

// LP residual of the preemphasized waveform.
Waveform lp_residual(const Waveform& x, const LpcConfig& cfg);

// Single-model filter pair, zero initial state.
std::vector<double> prediction_error_filter(std::span<const double> x,
                                            const LpcModel& model);
std::vector<double> synthesis_filter(std::span<const double> e,
                                     const LpcModel& model);

}  // namespace gci

#endif  // GCI_LPC_HPP_
