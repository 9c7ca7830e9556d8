// gci/window.hpp
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

#ifndef GCI_WINDOW_HPP_
#define GCI_WINDOW_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace gci {

enum class WindowShape { blackman, hamming, hann, rectangular };

/// Symmetric window of odd length 2N+1.
struct WindowSpec {
  WindowShape shape = WindowShape::blackman;
  std::size_t half_length = 1;

  std::size_t length() const { return 2 * half_length + 1; }
};

// Smallest odd-length window at least `length_samples` long (minimum 3).
WindowSpec odd_window(WindowShape shape, double length_samples);

// Symmetric weights w(-N..N), nonnegative, with maximum exactly 1.
std::vector<double> make_window(const WindowSpec& spec);

// Periodic variant of length L (DFT-even). The maximum sits at index L/2.
std::vector<double> make_periodic_window(WindowShape shape, std::size_t length);

// Symmetric window of arbitrary length L >= 1, used for analysis frames.
std::vector<double> make_symmetric_window(WindowShape shape, std::size_t length);

std::string to_string(WindowShape shape);
WindowShape parse_window_shape(const std::string& name);

}  // namespace gci

#endif  // GCI_WINDOW_HPP_
