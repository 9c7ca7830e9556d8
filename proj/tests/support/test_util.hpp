// tests/support/test_util.hpp
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


#ifndef GCI_TESTS_TEST_UTIL_HPP_
#define GCI_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gci/types.hpp"

namespace gci::test {

inline std::vector<double> impulse_train(std::size_t n, std::size_t period,
                                         std::size_t first = 0) {
  std::vector<double> x(n, 0.0);
  for (std::size_t i = first; i < n; i += period) x[i] = 1.0;
  return x;
}

inline std::vector<double> white(std::size_t n, std::uint64_t seed, double sd = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, sd);
  std::vector<double> x(n);
  for (double& v : x) v = g(rng);
  return x;
}

// Signed distance (samples) from each true epoch to the nearest detection.
inline std::vector<double> nearest_errors(const GciSequence& truth, const GciSequence& est) {
  std::vector<double> out;
  if (est.empty()) return out;
  for (double t : truth.instants) {
    auto it = std::lower_bound(est.instants.begin(), est.instants.end(), t);
    double best = 1e300;
    if (it != est.instants.end()) best = *it - t;
    if (it != est.instants.begin() && std::abs(*(it - 1) - t) < std::abs(best))
      best = *(it - 1) - t;
    out.push_back(best);
  }
  return out;
}

// Fraction of true epochs with a detection within tol samples of `center`.
inline double fraction_within(const std::vector<double>& errors, double tol,
                              double center = 0.0) {
  if (errors.empty()) return 0.0;
  const auto n = std::count_if(errors.begin(), errors.end(),
                               [&](double e) { return std::abs(e - center) <= tol; });
  return static_cast<double>(n) / static_cast<double>(errors.size());
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v.empty() ? 0.0 : v[v.size() / 2];
}

}  // namespace gci::test

#endif  // GCI_TESTS_TEST_UTIL_HPP_
