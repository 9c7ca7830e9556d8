// gci/polarity.hpp
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

#ifndef GCI_POLARITY_HPP_
#define GCI_POLARITY_HPP_

#include <optional>

#include "gci/lpc.hpp"
#include "gci/types.hpp"

namespace gci {

struct PolarityResult {
  Waveform waveform;
  bool flipped = false;
  double skewness = 0.0;   // of the LP residual of the input
  bool ambiguous = false;  // |skewness| below the threshold; left unchanged
};

// Negates x when its LP residual has negative skewness. Skewness magnitudes
// below min_abs_skewness only raise a warning.
PolarityResult ensure_polarity(const Waveform& x, std::optional<LpcConfig> lpc = std::nullopt,
                               double min_abs_skewness = 0.1);

}  // namespace gci

#endif  // GCI_POLARITY_HPP_
