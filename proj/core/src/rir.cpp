// core/src/rir.cpp
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

#include <algorithm>
#include <utility>
#include <cmath>
#include <numbers>

#include "gci/degrade.hpp"
#include "gci/fft.hpp"
#include "gci/log.hpp"

namespace gci {

namespace {

constexpr int kSincHalfWidth = 32;

double volume(const RoomSpec& r) {
  return r.dimensions[0] * r.dimensions[1] * r.dimensions[2];
}

double surface(const RoomSpec& r) {
  const auto& d = r.dimensions;
  return 2.0 * (d[0] * d[1] + d[0] * d[2] + d[1] * d[2]);
}

double distance(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Calls f(order, distance) for every image source within max_dist.
template <typename F>
void for_each_image(const RoomSpec& room, double max_dist, F&& f) {
  const auto& L = room.dimensions;
  const auto& s = room.source;
  const auto& m = room.mic;
  std::array<int, 3> nmax{};
  for (int i = 0; i < 3; ++i) nmax[i] = static_cast<int>(std::ceil(max_dist / (2.0 * L[i]))) + 1;
  for (int nx = -nmax[0]; nx <= nmax[0]; ++nx)
    for (int ny = -nmax[1]; ny <= nmax[1]; ++ny)
      for (int nz = -nmax[2]; nz <= nmax[2]; ++nz)
        for (int q = 0; q < 8; ++q) {
          const int qx = q & 1, qy = (q >> 1) & 1, qz = (q >> 2) & 1;
          const int order = std::abs(nx - qx) + std::abs(nx) + std::abs(ny - qy) + std::abs(ny) +
                            std::abs(nz - qz) + std::abs(nz);
          if (room.max_order >= 0 && order > room.max_order) continue;
          const std::array<double, 3> img{(1 - 2 * qx) * s[0] + 2 * nx * L[0],
                                          (1 - 2 * qy) * s[1] + 2 * ny * L[1],
                                          (1 - 2 * qz) * s[2] + 2 * nz * L[2]};
          const double d = distance(img, m);
          if (d <= max_dist) f(order, d);
        }
}

}  // namespace

void RoomSpec::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (!(dimensions[i] > 0.0)) throw InvalidArgument("room dimensions must be positive");
    if (!(source[i] > 0.0 && source[i] < dimensions[i]))
      throw InvalidArgument("source must lie strictly inside the room");
    if (!(mic[i] > 0.0 && mic[i] < dimensions[i]))
      throw InvalidArgument("microphone must lie strictly inside the room");
  }
  if (!(t60 > 0.0) || !std::isfinite(t60)) throw InvalidArgument("t60 must be positive");
  if (!(speed_of_sound > 0.0)) throw InvalidArgument("speed of sound must be positive");
  if (reflection_override && !(*reflection_override >= 0.0 && *reflection_override < 1.0))
    throw InvalidArgument("reflection coefficient must lie in [0, 1)");
  if (!(highpass_hz >= 0.0) || !std::isfinite(highpass_hz))
    throw InvalidArgument("high-pass cutoff must be nonnegative");
  if (distance(source, mic) <= 0.0) throw InvalidArgument("source and microphone coincide");
}

double wall_reflection(const RoomSpec& room) {
  room.validate();
  if (room.reflection_override) return *room.reflection_override;
  const double k = 24.0 * std::numbers::ln10 * volume(room) /
                   (room.speed_of_sound * surface(room) * room.t60);
  if (room.model == AbsorptionModel::eyring) {
    // t60 = k' / (-S ln(1 - a)): energy reflectance 1 - a = exp(-k).
    return std::exp(-0.5 * k);
  }
  if (k > 1.0)
    throw InvalidArgument("t60 is too short for this room under the Sabine relation");
  return std::sqrt(1.0 - k);
}

namespace {

// Image-source response for one reflection coefficient, then the DC-blocking
// high-pass.
Rir image_rir(const RoomSpec& room, double beta, double fs) {
  const double c = room.speed_of_sound;
  const double d0 = distance(room.source, room.mic);
  Rir rir;
  rir.sample_rate_hz = fs;
  rir.direct_index = static_cast<std::size_t>(std::lround(d0 / c * fs));
  const std::size_t len =
      room.rir_len > 0 ? room.rir_len
                       : rir.direct_index + static_cast<std::size_t>(std::ceil(room.t60 * fs)) +
                             kSincHalfWidth;
  rir.taps.assign(len, 0.0);
  const double max_dist = static_cast<double>(len + kSincHalfWidth) / fs * c;
  const double pi = std::numbers::pi;

  for_each_image(room, max_dist, [&](int order, double d) {
    const double gain =
        (order == 0 ? 1.0 : (beta == 0.0 ? 0.0 : std::pow(beta, order))) / (4.0 * pi * d);
    if (gain == 0.0) return;
    const double tau = d / c * fs;
    const long centre = std::lround(tau);
    // sin(pi (k - tau)) flips sign from one tap to the next.
    const long k0 = centre - kSincHalfWidth;
    double sn = std::sin(pi * (static_cast<double>(k0) - tau));
    for (long k = k0; k <= centre + kSincHalfWidth; ++k, sn = -sn) {
      if (k < 0 || k >= static_cast<long>(len)) continue;
      const double t = static_cast<double>(k) - tau;
      if (std::abs(t) > kSincHalfWidth) continue;
      const double sinc = std::abs(t) < 1e-9 ? 1.0 : sn / (pi * t);
      const double win = 0.5 * (1.0 + std::cos(pi * t / kSincHalfWidth));
      rir.taps[static_cast<std::size_t>(k)] += gain * sinc * win;
    }
  });
  if (room.highpass_hz > 0.0 && beta > 0.0) {
    // Allen and Berkley's filter: two zeros at DC, a double pole near it.
    const double w = 2.0 * pi * room.highpass_hz / fs;
    const double r1 = std::exp(-w), b1 = 2.0 * r1 * std::cos(w), b2 = -r1 * r1, a1 = -(1.0 + r1);
    double y0 = 0.0, y1 = 0.0, y2 = 0.0;
    for (double& v : rir.taps) {
      y2 = y1;
      y1 = y0;
      y0 = b1 * y1 + b2 * y2 + v;
      v = y0 + a1 * y1 + r1 * y2;
    }
  }
  return rir;
}

std::pair<Rir, double> matched_rir(const RoomSpec& room, double fs) {
  double beta = wall_reflection(room);
  Rir rir = image_rir(room, beta, fs);
  if (room.reflection_override || !room.match_decay || beta == 0.0) return {rir, beta};

  double best_err = 1e300;
  std::pair<Rir, double> best{rir, beta};
  double lo = 0.0, hi = 1.0;  // decay too short at lo, too long at hi
  auto consider = [&](Rir&& h, double b) {
    const double t = schroeder_t60(h);
    const double err = t > 0.0 ? std::abs(t - room.t60) / room.t60 : 1e300;
    if (t > 0.0 && t < room.t60) lo = std::max(lo, b);
    if (t >= room.t60) hi = std::min(hi, b);
    if (err < best_err) {
      best_err = err;
      best = {std::move(h), b};
    }
    return t;
  };
  // Decay time is close to inversely proportional to -ln(beta); early
  // reflections make it step-like for short t60, so finish by bisection.
  double t = consider(std::move(rir), beta);
  for (int it = 0; it < 4 && best_err > 0.01 && t > 0.0; ++it) {
    beta = std::exp(std::log(beta) * t / room.t60);
    if (!(beta > 0.0 && beta < 1.0)) break;
    t = consider(image_rir(room, beta, fs), beta);
  }
  for (int it = 0; it < 12 && best_err > 0.01 && lo > 0.0 && hi < 1.0; ++it) {
    beta = 0.5 * (lo + hi);
    consider(image_rir(room, beta, fs), beta);
  }
  if (best_err > 0.1) warn("simulated decay differs from the requested t60 by more than 10%");
  return best;
}

}  // namespace

double schroeder_t60(const Rir& rir) {
  const auto& h = rir.taps;
  std::vector<double> edc(h.size() + 1, 0.0);
  for (std::size_t k = h.size(); k-- > 0;) edc[k] = edc[k + 1] + h[k] * h[k];
  const std::size_t k0 = std::min(rir.direct_index, h.size());
  if (!(edc[k0] > 0.0)) return -1.0;
  auto crossing = [&](double db) {
    const double level = edc[k0] * std::pow(10.0, db / 10.0);
    for (std::size_t k = k0 + 1; k < edc.size(); ++k)
      if (edc[k] <= level) {
        const double a = std::log(edc[k - 1]), b = std::log(std::max(edc[k], 1e-300));
        return static_cast<double>(k - 1) + (a - std::log(level)) / (a - b);
      }
    return -1.0;
  };
  const double t5 = crossing(-5.0), t25 = crossing(-25.0);
  if (t5 < 0.0 || t25 < 0.0) return -1.0;
  return 3.0 * (t25 - t5) / rir.sample_rate_hz;
}

double matched_reflection(const RoomSpec& room, double fs) { return matched_rir(room, fs).second; }

Rir simulate_rir(const RoomSpec& room, double fs) { return matched_rir(room, fs).first; }

Waveform convolve_rir(const Waveform& x, const Rir& rir) {
  if (rir.taps.empty()) throw InvalidArgument("empty impulse response");
  if (x.empty()) return x;
  const auto y = fft_convolve(x.samples, rir.taps);
  Waveform out;
  out.sample_rate_hz = x.sample_rate_hz;
  out.samples.assign(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t k = i + rir.direct_index;
    if (k < y.size()) out.samples[i] = y[k];
  }
  double px = 0.0, py = 0.0;
  for (double v : x.samples) px = std::max(px, std::abs(v));
  for (double v : out.samples) py = std::max(py, std::abs(v));
  if (py > 0.0)
    for (double& v : out.samples) v *= px / py;
  return out;
}

}  // namespace gci
