// gci/mixed_phase.hpp
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

#ifndef GCI_MIXED_PHASE_HPP_
#define GCI_MIXED_PHASE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gci/types.hpp"
#include "gci/window.hpp"

namespace gci {

struct MixedPhaseConfig {
  WindowShape window = WindowShape::blackman;
  double length_periods = 2.0;
  std::size_t fft_factor = 8;        // FFT size: power of two >= factor * frame length
  double cog_threshold_hz = 2700.0;
  double spectral_floor = 1e-10;     // relative to the spectral maximum
  double max_phase_step = 0.5;       // radians between bins before refining
  int max_refine_depth = 6;
};

// GCI-centred frame of round(length_periods * local_period) samples (rounded
// to even) weighted by the periodic window, whose peak falls on the GCI.
// nullopt if it does not fit inside x.
std::optional<std::vector<double>> gci_sync_frame(const Waveform& x, double gci,
                                                  double local_period,
                                                  const MixedPhaseConfig& cfg = {});

/// Complex-cepstrum separation of one frame. The component sequences are
/// circular of length fft_size in a time origin placed at the frame maximum
/// (index `anchor` of the frame); negative times wrap to the end.
struct FrameDecomposition {
  std::vector<double> anticausal;
  std::vector<double> causal;
  std::size_t anchor = 0;
  std::size_t fft_size = 0;
  long linear_phase = 0;  // integer delay removed after unwrapping
  bool negated = false;   // frame sign flipped for a positive DC term
  double spectral_cog_hz = 0.0;
  bool decomposed_ok = false;
  bool regularized = false;  // the spectral floor was applied somewhere
};

FrameDecomposition decompose(std::span<const double> frame, double sample_rate_hz,
                             const MixedPhaseConfig& cfg = {});

// Maps a circular component back to frame indices 0..frame_len-1.
std::vector<double> to_frame_coordinates(const std::vector<double>& circular,
                                         std::size_t anchor, std::size_t frame_len);

// Amplitude-weighted mean frequency of a half spectrum of fft_size bins.
double spectral_cog(std::span<const double> magnitude, std::size_t fft_size,
                    double sample_rate_hz);

struct FailureReport {
  double failure_pct = 0.0;
  std::size_t frames = 0;
  std::size_t skipped = 0;
  std::vector<double> cogs_hz;
};

// Local period of each GCI: the mean of its neighbouring intervals (or the
// prior when there are none). Throws InvalidArgument with no usable frame.
FailureReport failure_rate(const Waveform& x, const GciSequence& gcis,
                           const MixedPhaseConfig& cfg = {},
                           std::optional<PitchPrior> prior = std::nullopt);

}  // namespace gci

#endif  // GCI_MIXED_PHASE_HPP_
