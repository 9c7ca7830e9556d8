// core/src/types.cpp
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

#include "gci/types.hpp"

#include <cmath>
#include <sstream>

namespace gci {

void Waveform::validate() const {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz))
    throw InvalidArgument("waveform sample rate must be positive");
  if (samples.empty()) throw InvalidArgument("waveform is empty");
  for (double v : samples)
    if (!std::isfinite(v)) throw InvalidArgument("waveform has non-finite samples");
}

void PitchPrior::validate(double sample_rate_hz) const {
  if (!(mean_period_samples > 0.0) || !std::isfinite(mean_period_samples))
    throw InvalidArgument("pitch prior must be positive");
  double f0 = f0_hz(sample_rate_hz);
  // Small slack so that priors computed from exactly 50 or 500 Hz survive
  // rounding of the period.
  if (f0 < 50.0 * (1 - 1e-9) || f0 > 500.0 * (1 + 1e-9)) {
    std::ostringstream os;
    os << "pitch prior of " << f0 << " Hz is outside [50, 500] Hz";
    throw InvalidArgument(os.str());
  }
}

bool GciSequence::is_strictly_increasing() const {
  for (std::size_t i = 0; i < instants.size(); ++i) {
    if (!std::isfinite(instants[i])) return false;
    if (i > 0 && !(instants[i] > instants[i - 1])) return false;
  }
  return true;
}

}  // namespace gci
