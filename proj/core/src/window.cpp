// core/src/window.cpp
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

#include "gci/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gci/types.hpp"

namespace gci {

namespace {

// phase in [0, 1]; 0.5 is the window centre.
double shape_value(WindowShape shape, double phase) {
  const double pi = std::numbers::pi;
  switch (shape) {
    case WindowShape::blackman:
      return 0.42 - 0.5 * std::cos(2 * pi * phase) +
             0.08 * std::cos(4 * pi * phase);
    case WindowShape::hamming:
      return 0.54 - 0.46 * std::cos(2 * pi * phase);
    case WindowShape::hann:
      return 0.5 - 0.5 * std::cos(2 * pi * phase);
    case WindowShape::rectangular:
      return 1.0;
  }
  return 1.0;
}

void normalize_max(std::vector<double>* w) {
  double mx = 0.0;
  for (double& v : *w) {
    v = std::max(v, 0.0);  // Blackman endpoints round to -1e-17
    mx = std::max(mx, v);
  }
  if (mx > 0.0)
    for (double& v : *w) v /= mx;
}

}  // namespace

WindowSpec odd_window(WindowShape shape, double length_samples) {
  if (!(length_samples > 0.0) || !std::isfinite(length_samples))
    throw InvalidArgument("window length must be positive");
  auto len = static_cast<std::size_t>(std::ceil(length_samples - 1e-9));
  if (len % 2 == 0) ++len;
  if (len < 3) len = 3;
  return WindowSpec{shape, (len - 1) / 2};
}

std::vector<double> make_window(const WindowSpec& spec) {
  return make_symmetric_window(spec.shape, spec.length());
}

std::vector<double> make_symmetric_window(WindowShape shape, std::size_t length) {
  if (length == 0) throw InvalidArgument("window length must be positive");
  std::vector<double> w(length, 1.0);
  if (length == 1) return w;
  for (std::size_t i = 0; i < length; ++i)
    w[i] = shape_value(shape, static_cast<double>(i) / (length - 1));
  // Enforce exact symmetry.
  for (std::size_t i = 0; i < length / 2; ++i) w[length - 1 - i] = w[i];
  normalize_max(&w);
  return w;
}

std::vector<double> make_periodic_window(WindowShape shape, std::size_t length) {
  if (length == 0) throw InvalidArgument("window length must be positive");
  std::vector<double> w(length);
  for (std::size_t i = 0; i < length; ++i)
    w[i] = shape_value(shape, static_cast<double>(i) / length);
  normalize_max(&w);
  return w;
}

std::string to_string(WindowShape shape) {
  switch (shape) {
    case WindowShape::blackman: return "blackman";
    case WindowShape::hamming: return "hamming";
    case WindowShape::hann: return "hann";
    case WindowShape::rectangular: return "rectangular";
  }
  return "unknown";
}

WindowShape parse_window_shape(const std::string& name) {
  if (name == "blackman") return WindowShape::blackman;
  if (name == "hamming") return WindowShape::hamming;
  if (name == "hann") return WindowShape::hann;
  if (name == "rectangular") return WindowShape::rectangular;
  throw InvalidArgument("unknown window shape: " + name);
}

}  // namespace gci
