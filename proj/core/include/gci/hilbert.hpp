// gci/hilbert.hpp
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

#ifndef GCI_HILBERT_HPP_
#define GCI_HILBERT_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gci/types.hpp"

namespace gci {

// Inputs longer than this are processed in blocks with 50% overlap.
inline constexpr std::size_t kHilbertMaxBlock = std::size_t{1} << 22;

// Magnitude of the analytic signal. Requires at least 2 samples.
Waveform hilbert_envelope(const Waveform& x);

// Same with an explicit block length (power of two, >= 16).
std::vector<double> hilbert_envelope(std::span<const double> x, std::size_t max_block);

}  // namespace gci

#endif  // GCI_HILBERT_HPP_
