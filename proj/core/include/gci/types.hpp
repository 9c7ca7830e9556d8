// gci/types.hpp
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

#ifndef GCI_TYPES_HPP_
#define GCI_TYPES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gci {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for invalid arguments or configurations.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A mono signal and its sampling rate.
struct Waveform {
  std::vector<double> samples;
  double sample_rate_hz = 16000.0;

  Waveform() = default;
  Waveform(std::vector<double> s, double fs)
      : samples(std::move(s)), sample_rate_hz(fs) {}

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const { return samples.size() / sample_rate_hz; }

  // Throws InvalidArgument unless the rate is positive, the signal nonempty
  // and every sample finite.
  void validate() const;
};

/// Speaker-level mean pitch period in samples.
struct PitchPrior {
  double mean_period_samples = 160.0;

  PitchPrior() = default;
  explicit PitchPrior(double period) : mean_period_samples(period) {}

  static PitchPrior from_f0(double f0_hz, double sample_rate_hz) {
    return PitchPrior(sample_rate_hz / f0_hz);
  }
  double f0_hz(double sample_rate_hz) const {
    return sample_rate_hz / mean_period_samples;
  }
  // The prior must describe a fundamental inside [50, 500] Hz.
  void validate(double sample_rate_hz) const;
};

/// Detected or reference glottal closure instants, in samples.
struct GciSequence {
  std::vector<double> instants;
  std::string source;

  std::size_t size() const { return instants.size(); }
  bool empty() const { return instants.empty(); }
  // Strictly increasing and finite.
  bool is_strictly_increasing() const;
};

}  // namespace gci

#endif  // GCI_TYPES_HPP_
