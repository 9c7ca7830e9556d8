// gci/degrade.hpp
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

#ifndef GCI_DEGRADE_HPP_
#define GCI_DEGRADE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gci/types.hpp"

namespace gci {

enum class NoiseKind { white_gaussian, external };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::white_gaussian;
  double snr_db = 0.0;
  double frame_ms = 32.0;
  std::uint64_t seed = 0;
  std::optional<Waveform> noise;  // required for NoiseKind::external

  void validate() const;
};

// Energies of consecutive non-overlapping frames (a trailing partial frame is
// dropped unless it is the only one).
std::vector<double> frame_energies(std::span<const double> x, std::size_t frame_len);

// Mean over frames of 10 log10(Es / En), every frame kept. Frame energies
// are floored at 1e-10 times the mean frame energy of their own signal.
double segmental_snr_db(std::span<const double> clean, std::span<const double> noise,
                        std::size_t frame_len);

// Unit-scale noise of length n for the spec (generated or tiled from a
// random circular offset of the resampled noise file).
std::vector<double> make_noise(const NoiseSpec& spec, std::size_t n, double sample_rate_hz);

// x + g * noise with the single gain g that puts the segmental SNR at
// snr_db. Throws InvalidArgument on zero-energy input.
Waveform add_noise(const Waveform& x, const NoiseSpec& spec);

enum class AbsorptionModel { eyring, sabine };

struct RoomSpec {
  std::array<double, 3> dimensions{3.0, 4.0, 5.0};
  std::array<double, 3> source{1.0, 1.2, 1.6};
  std::array<double, 3> mic{2.0, 2.6, 1.6};
  double t60 = 0.3;  // s
  int max_order = -1;     // -1: no limit
  std::size_t rir_len = 0;  // 0: direct delay + t60 * fs
  double speed_of_sound = 343.0;
  AbsorptionModel model = AbsorptionModel::eyring;
  std::optional<double> reflection_override;  // wall reflection coefficient
  // Adjust the reflection until schroeder_t60 of the response equals t60.
  // The diffuse-field formulas alone overestimate the decay rate of a
  // shoebox with uniform walls.
  bool match_decay = true;
  // Optional DC-blocking high-pass on the response (0: off). Positive image
  // gains build up a slowly decaying low-frequency component; the filter
  // removes it at the price of a frequency-dependent phase near f0.
  double highpass_hz = 0.0;

  void validate() const;
};

struct Rir {
  std::vector<double> taps;
  std::size_t direct_index = 0;
  double sample_rate_hz = 16000.0;
};

// Pressure reflection coefficient shared by all walls. Throws
// InvalidArgument when the absorption model cannot reach the t60.
double wall_reflection(const RoomSpec& room);

// Reflection used by simulate_rir: the override, else wall_reflection,
// rescaled when match_decay is set.
double matched_reflection(const RoomSpec& room, double sample_rate_hz);

// Reverberation time from the Schroeder curve of the response after the
// direct path: 3 x the -5 to -25 dB interval. Negative if not reached.
double schroeder_t60(const Rir& rir);

// Shoebox image-source response with Hann-windowed sinc fractional delays.
Rir simulate_rir(const RoomSpec& room, double sample_rate_hz);

// Linear convolution trimmed to x.size() samples starting at the direct
// path, rescaled to the peak magnitude of x.
Waveform convolve_rir(const Waveform& x, const Rir& rir);

}  // namespace gci

#endif  // GCI_DEGRADE_HPP_
