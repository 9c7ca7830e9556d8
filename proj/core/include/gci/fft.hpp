// gci/fft.hpp
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

#ifndef GCI_FFT_HPP_
#define GCI_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace gci {

using Complex = std::complex<double>;

// Smallest n' >= n whose only prime factors are 2, 3 and 5.
std::size_t next_fast_size(std::size_t n);

// Unnormalized forward DFT.
std::vector<Complex> fft(const std::vector<Complex>& x);
// Inverse DFT including the 1/n factor.
std::vector<Complex> ifft(const std::vector<Complex>& X);

// Forward DFT of x zero-padded (or truncated) to n; returns n/2+1 bins.
std::vector<Complex> rfft(const std::vector<double>& x, std::size_t n);
// Inverse of rfft for a real signal of length n, including 1/n.
std::vector<double> irfft(const std::vector<Complex>& X, std::size_t n);

// Full linear convolution, length a.size() + b.size() - 1.
std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace gci

#endif  // GCI_FFT_HPP_
