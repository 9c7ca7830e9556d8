// core/src/fft.cpp
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

#include "gci/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "gci/types.hpp"

namespace gci {

namespace {

enum class PlanKind { c2c_forward, c2c_backward, r2c, c2r };

// FFTW planning is not thread-safe, execution with the new-array interface
// is. Plans are created once per (kind, size) and kept for the process.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& kv : plans_) fftw_destroy_plan(kv.second);
  }

  fftw_plan get(PlanKind kind, std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_tuple(kind, n);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    const int ni = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    switch (kind) {
      case PlanKind::c2c_forward:
      case PlanKind::c2c_backward: {
        fftw_complex* in = fftw_alloc_complex(n);
        fftw_complex* out = fftw_alloc_complex(n);
        plan = fftw_plan_dft_1d(
            ni, in, out,
            kind == PlanKind::c2c_forward ? FFTW_FORWARD : FFTW_BACKWARD, flags);
        fftw_free(in);
        fftw_free(out);
        break;
      }
      case PlanKind::r2c: {
        double* in = fftw_alloc_real(n);
        fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
        plan = fftw_plan_dft_r2c_1d(ni, in, out, flags);
        fftw_free(in);
        fftw_free(out);
        break;
      }
      case PlanKind::c2r: {
        fftw_complex* in = fftw_alloc_complex(n / 2 + 1);
        double* out = fftw_alloc_real(n);
        plan = fftw_plan_dft_c2r_1d(ni, in, out, flags);
        fftw_free(in);
        fftw_free(out);
        break;
      }
    }
    if (plan == nullptr) throw Error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<PlanKind, std::size_t>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

std::size_t next_fast_size(std::size_t n) {
  if (n <= 1) return 1;
  for (std::size_t m = n;; ++m) {
    std::size_t r = m;
    for (std::size_t f : {2u, 3u, 5u})
      while (r % f == 0) r /= f;
    if (r == 1) return m;
  }
}

std::vector<Complex> fft(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<Complex> in(x), out(n);
  fftw_execute_dft(cache().get(PlanKind::c2c_forward, n), as_fftw(in.data()),
                   as_fftw(out.data()));
  return out;
}

std::vector<Complex> ifft(const std::vector<Complex>& X) {
  const std::size_t n = X.size();
  if (n == 0) return {};
  std::vector<Complex> in(X), out(n);
  fftw_execute_dft(cache().get(PlanKind::c2c_backward, n), as_fftw(in.data()),
                   as_fftw(out.data()));
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<Complex> rfft(const std::vector<double>& x, std::size_t n) {
  if (n == 0) return {};
  std::vector<double> in(n, 0.0);
  std::copy_n(x.begin(), std::min(n, x.size()), in.begin());
  std::vector<Complex> out(n / 2 + 1);
  fftw_execute_dft_r2c(cache().get(PlanKind::r2c, n), in.data(),
                       as_fftw(out.data()));
  return out;
}

std::vector<double> irfft(const std::vector<Complex>& X, std::size_t n) {
  if (n == 0) return {};
  if (X.size() != n / 2 + 1) throw InvalidArgument("irfft: wrong spectrum size");
  // c2r destroys its input.
  std::vector<Complex> in(X);
  std::vector<double> out(n);
  fftw_execute_dft_c2r(cache().get(PlanKind::c2r, n), as_fftw(in.data()),
                       out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t n = next_fast_size(len);
  auto A = rfft(a, n);
  auto B = rfft(b, n);
  for (std::size_t k = 0; k < A.size(); ++k) A[k] *= B[k];
  auto y = irfft(A, n);
  y.resize(len);
  return y;
}

}  // namespace gci
