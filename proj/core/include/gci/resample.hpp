// gci/resample.hpp
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

#ifndef GCI_RESAMPLE_HPP_
#define GCI_RESAMPLE_HPP_

#include "gci/types.hpp"

namespace gci {

// Band-limited resampling with a Hann-windowed sinc kernel (16 zero
// crossings per side at the lower of the two Nyquist rates).
Waveform resample(const Waveform& x, double target_rate_hz);

}  // namespace gci

#endif  // GCI_RESAMPLE_HPP_
