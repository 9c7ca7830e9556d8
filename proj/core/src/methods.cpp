// core/src/methods.cpp
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

#include "gci/methods.hpp"

namespace gci {

std::string to_string(Method m) {
  switch (m) {
    case Method::he: return "he";
    case Method::he_fast: return "he_fast";
    case Method::dypsa: return "dypsa";
    case Method::zfr: return "zfr";
    case Method::sedreams: return "sedreams";
    case Method::sedreams_fast: return "sedreams_fast";
    case Method::yaga: return "yaga";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : all_methods())
    if (to_string(m) == name) return m;
  if (name == "fast_sedreams") return Method::sedreams_fast;
  if (name == "fast_he") return Method::he_fast;
  throw InvalidArgument("unknown method '" + name + "'");
}

std::vector<Method> base_methods() {
  return {Method::he, Method::dypsa, Method::zfr, Method::sedreams, Method::yaga};
}

std::vector<Method> all_methods() {
  return {Method::he,  Method::he_fast,       Method::dypsa, Method::zfr,
          Method::sedreams, Method::sedreams_fast, Method::yaga};
}

GciSequence run_method(Method m, const Waveform& x, const PitchPrior& prior,
                       const MethodOptions& opt) {
  GciSequence out;
  switch (m) {
    case Method::he: out = detect_he(x, prior, opt.he); break;
    case Method::he_fast: out = detect_he_fast(x, prior, opt.fast_p, opt.he); break;
    case Method::dypsa: out = detect_dypsa(x, prior, opt.dypsa); break;
    case Method::zfr: out = detect_zfr(x, prior, opt.zfr); break;
    case Method::sedreams: out = detect_sedreams(x, prior, opt.sedreams); break;
    case Method::sedreams_fast:
      out = detect_sedreams_fast(x, prior, opt.fast_p, opt.sedreams);
      break;
    case Method::yaga: out = detect_yaga(x, prior, opt.yaga); break;
  }
  out.source = to_string(m);
  return out;
}

}  // namespace gci
