// gci/synth.hpp
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

#ifndef GCI_SYNTH_HPP_
#define GCI_SYNTH_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gci/types.hpp"

namespace gci {

/// Sustained synthetic vowel: a jittered impulse train shaped by a
/// derivative glottal pulse closing at each epoch, a short return phase and
/// an all-pole tract.
struct VowelSpec {
  double f0_hz = 120.0;
  double jitter = 0.03;        // uniform relative period perturbation
  double duration_s = 2.0;
  double sample_rate_hz = 16000.0;
  double open_quotient = 0.55;   // opening phase, in periods
  double closing_quotient = 0.3; // closing phase, in periods
  double return_ms = 0.2;        // return phase time constant; 0 disables
  int formants = 5;
  std::uint64_t seed = 1;
  long egg_delay = 0;  // EGG epochs sit this many samples before the speech ones
  double margin = 60.0;  // first epoch and minimum distance to the end
};

struct SyntheticUtterance {
  std::string id;
  Waveform speech;
  Waveform egg;
  GciSequence epochs;  // speech time base
  double f0_hz = 0.0;
};

// Stable AR tract A(z) = prod (1 - 2 r cos(theta) z^-1 + r^2 z^-2) with
// random formant frequencies and 60-250 Hz bandwidths; returns 1, a_1..a_2k.
std::vector<double> random_formant_tract(std::mt19937_64& rng, double sample_rate_hz,
                                         int formants = 5);

// Derivative glottal pulse of the given period. Its last sample is the
// closure, the minimum of the pulse.
std::vector<double> glottal_pulse_derivative(double period, double open_quotient,
                                             double closing_quotient);

// Contact signal rising by 1 over three samples (0.25, 0.5, 0.25) at each
// epoch and decaying linearly until the next, so the differenced EGG peaks on
// the epoch.
Waveform synthetic_egg(const std::vector<double>& epochs, std::size_t n, double fs);

SyntheticUtterance synthesize_vowel(const VowelSpec& spec);

// Utterances of utt_s seconds cycling through f0s until total_s is reached,
// each with its own tract. Seeds derive from `seed` and the index.
std::vector<SyntheticUtterance> synthetic_suite(double total_s = 60.0, std::uint64_t seed = 1,
                                                std::vector<double> f0s = {100.0, 160.0, 220.0},
                                                double utt_s = 2.0);

}  // namespace gci

#endif  // GCI_SYNTH_HPP_
