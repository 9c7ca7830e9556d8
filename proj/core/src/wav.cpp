// core/src/wav.cpp
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

#include "gci/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace gci {

namespace {

std::uint32_t u32(const unsigned char* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t u16(const unsigned char* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }

void put32(std::vector<unsigned char>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<unsigned char>(v >> (8 * i)));
}
void put16(std::vector<unsigned char>& b, std::uint16_t v) {
  b.push_back(static_cast<unsigned char>(v));
  b.push_back(static_cast<unsigned char>(v >> 8));
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw Error(path + ": not a RIFF/WAVE file");

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_len = 0;
  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const unsigned char* id = buf.data() + pos;
    const std::size_t len = u32(buf.data() + pos + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = std::min(len, buf.size() - body);
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (avail < 16) throw Error(path + ": short fmt chunk");
      const unsigned char* f = buf.data() + body;
      format = u16(f);
      channels = u16(f + 2);
      rate = u32(f + 4);
      bits = u16(f + 14);
      if (format == 0xFFFE && avail >= 26) format = u16(f + 24);  // extensible
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = buf.data() + body;
      data_len = avail;
    }
    pos = body + len + (len & 1);
  }
  if (!format) throw Error(path + ": missing fmt chunk");
  if (!data) throw Error(path + ": missing data chunk");
  if (channels != 1) throw Error(path + ": only mono files are supported");
  if (rate == 0) throw Error(path + ": zero sample rate");

  Waveform w;
  w.sample_rate_hz = rate;
  const std::size_t bytes = bits / 8;
  if (bytes == 0) throw Error(path + ": bad sample width");
  const std::size_t n = data_len / bytes;
  w.samples.resize(n);
  if (format == 1 && bits == 16) {
    for (std::size_t i = 0; i < n; ++i)
      w.samples[i] = static_cast<std::int16_t>(u16(data + 2 * i)) / 32768.0;
  } else if (format == 1 && bits == 24) {
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned char* p = data + 3 * i;
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      w.samples[i] = v / 8388608.0;
    }
  } else if (format == 1 && bits == 32) {
    for (std::size_t i = 0; i < n; ++i)
      w.samples[i] = static_cast<std::int32_t>(u32(data + 4 * i)) / 2147483648.0;
  } else if (format == 3 && bits == 32) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t b = u32(data + 4 * i);
      float f;
      std::memcpy(&f, &b, 4);
      w.samples[i] = f;
    }
  } else {
    throw Error(path + ": unsupported sample format");
  }
  return w;
}

std::size_t write_wav(const std::string& path, const Waveform& x) {
  const auto rate = static_cast<std::uint32_t>(std::lround(x.sample_rate_hz));
  const auto n = static_cast<std::uint32_t>(x.size());
  std::vector<unsigned char> b;
  b.reserve(44 + 2 * n);
  b.insert(b.end(), {'R', 'I', 'F', 'F'});
  put32(b, 36 + 2 * n);
  b.insert(b.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put32(b, 16);
  put16(b, 1);
  put16(b, 1);
  put32(b, rate);
  put32(b, 2 * rate);
  put16(b, 2);
  put16(b, 16);
  b.insert(b.end(), {'d', 'a', 't', 'a'});
  put32(b, 2 * n);
  std::size_t clipped = 0;
  for (double v : x.samples) {
    double s = std::round(v * 32768.0);
    if (s > 32767.0 || s < -32768.0 || !std::isfinite(s)) {
      ++clipped;
      s = std::isfinite(s) ? std::clamp(s, -32768.0, 32767.0) : 0.0;
    }
    put16(b, static_cast<std::uint16_t>(static_cast<std::int16_t>(s)));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  if (!out) throw Error("write failed: " + path);
  return clipped;
}

}  // namespace gci
