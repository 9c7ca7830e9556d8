// gci/pitch.hpp
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

#ifndef GCI_PITCH_HPP_
#define GCI_PITCH_HPP_

#include "gci/types.hpp"

namespace gci {

// Median spacing of reference GCIs, using intervals of 2-20 ms. Throws when
// no such interval exists.
PitchPrior prior_from_reference(const GciSequence& ref, double sample_rate_hz);

// Lag of the largest normalized autocorrelation peak of the whole signal
// with a period in [1/max_f0, 1/min_f0]. A peak at half the lag reaching
// 85% of the maximum is preferred, to avoid subharmonics.
PitchPrior estimate_pitch_prior(const Waveform& x, double min_f0_hz = 50.0,
                                double max_f0_hz = 500.0);

}  // namespace gci

#endif  // GCI_PITCH_HPP_
