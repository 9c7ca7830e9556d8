// gci/wav.hpp
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

#ifndef GCI_WAV_HPP_
#define GCI_WAV_HPP_

#include <string>

#include "gci/types.hpp"

namespace gci {

// Mono RIFF/WAVE in PCM 16, 24 or 32 bit or IEEE float32. Samples are scaled
// to [-1, 1). Throws Error on malformed or multichannel files.
Waveform read_wav(const std::string& path);

// 16-bit PCM. Values outside [-1, 1] are clipped; returns the number of
// clipped samples.
std::size_t write_wav(const std::string& path, const Waveform& x);

}  // namespace gci

#endif  // GCI_WAV_HPP_
