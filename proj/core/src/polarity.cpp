// core/src/polarity.cpp
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

#include "gci/polarity.hpp"

#include <cmath>
#include <sstream>

#include "gci/log.hpp"
#include "gci/signal_util.hpp"

namespace gci {

PolarityResult ensure_polarity(const Waveform& x, std::optional<LpcConfig> lpc,
                               double min_abs_skewness) {
  PolarityResult r;
  r.waveform = x;
  const LpcConfig cfg = lpc.value_or(LpcConfig::for_rate(x.sample_rate_hz));
  if (x.size() < cfg.frame_len) {
    r.ambiguous = true;
    warn("polarity: signal shorter than one LPC frame, left unchanged");
    return r;
  }
  r.skewness = skewness(lp_residual(x, cfg).samples);
  if (std::abs(r.skewness) < min_abs_skewness) {
    r.ambiguous = true;
    std::ostringstream os;
    os << "polarity: residual skewness " << r.skewness << " is too small to decide";
    warn(os.str());
    return r;
  }
  if (r.skewness < 0.0) {
    for (double& v : r.waveform.samples) v = -v;
    r.flipped = true;
  }
  return r;
}

}  // namespace gci
