// core/src/noise.cpp
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

#include <cmath>
#include <random>

#include "gci/degrade.hpp"
#include "gci/resample.hpp"

namespace gci {

void NoiseSpec::validate() const {
  if (!std::isfinite(snr_db)) throw InvalidArgument("SNR must be finite");
  if (!(frame_ms > 0.0)) throw InvalidArgument("SNR frame length must be positive");
  if (kind == NoiseKind::external) {
    if (!noise || noise->empty()) throw InvalidArgument("external noise needs a signal");
    noise->validate();
  }
}

std::vector<double> frame_energies(std::span<const double> x, std::size_t frame_len) {
  if (frame_len == 0) throw InvalidArgument("frame length must be positive");
  std::vector<double> e;
  const std::size_t full = x.size() / frame_len;
  if (full == 0) {
    double s = 0.0;
    for (double v : x) s += v * v;
    e.push_back(s);
    return e;
  }
  for (std::size_t f = 0; f < full; ++f) {
    double s = 0.0;
    for (std::size_t i = f * frame_len; i < (f + 1) * frame_len; ++i) s += x[i] * x[i];
    e.push_back(s);
  }
  return e;
}

namespace {

void floor_energies(std::vector<double>* e) {
  double m = 0.0;
  for (double v : *e) m += v;
  m /= static_cast<double>(e->size());
  const double fl = 1e-10 * m;
  for (double& v : *e) v = std::max(v, fl);
}

double mean_log_ratio(std::vector<double> es, std::vector<double> en) {
  floor_energies(&es);
  floor_energies(&en);
  double acc = 0.0;
  for (std::size_t f = 0; f < es.size(); ++f) acc += 10.0 * std::log10(es[f] / en[f]);
  return acc / static_cast<double>(es.size());
}

std::size_t frame_samples(double frame_ms, double fs) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(frame_ms * 1e-3 * fs)));
}

}  // namespace

double segmental_snr_db(std::span<const double> clean, std::span<const double> noise,
                        std::size_t frame_len) {
  if (clean.size() != noise.size()) throw InvalidArgument("signal and noise lengths differ");
  auto es = frame_energies(clean, frame_len);
  auto en = frame_energies(noise, frame_len);
  double se = 0.0, sn = 0.0;
  for (double v : es) se += v;
  for (double v : en) sn += v;
  if (!(se > 0.0) || !(sn > 0.0)) throw InvalidArgument("zero-energy signal in SNR computation");
  return mean_log_ratio(std::move(es), std::move(en));
}

std::vector<double> make_noise(const NoiseSpec& spec, std::size_t n, double fs) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::vector<double> out(n);
  if (spec.kind == NoiseKind::white_gaussian) {
    std::normal_distribution<double> dist(0.0, 1.0);
    for (auto& v : out) v = dist(rng);
    return out;
  }
  const Waveform src = resample(*spec.noise, fs);
  const std::size_t m = src.size();
  if (m == 0) throw InvalidArgument("external noise is empty after resampling");
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  const std::size_t offset = pick(rng);
  for (std::size_t i = 0; i < n; ++i) out[i] = src.samples[(offset + i) % m];
  return out;
}

Waveform add_noise(const Waveform& x, const NoiseSpec& spec) {
  x.validate();
  spec.validate();
  const std::size_t flen = frame_samples(spec.frame_ms, x.sample_rate_hz);
  double energy = 0.0;
  for (double v : x.samples) energy += v * v;
  if (!(energy > 0.0)) throw InvalidArgument("cannot set the SNR of a zero-energy signal");
  const auto noise = make_noise(spec, x.size(), x.sample_rate_hz);
  // Segmental SNR at unit gain; the floors scale with the noise, so the SNR
  // at gain g is exactly this minus 20 log10 g.
  const double snr0 = segmental_snr_db(x.samples, noise, flen);
  const double g = std::pow(10.0, (snr0 - spec.snr_db) / 20.0);
  Waveform y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y.samples[i] += g * noise[i];
  return y;
}

}  // namespace gci
