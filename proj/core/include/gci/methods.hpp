// gci/methods.hpp
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

#ifndef GCI_METHODS_HPP_
#define GCI_METHODS_HPP_

#include <string>
#include <vector>

#include "gci/dypsa.hpp"
#include "gci/he.hpp"
#include "gci/sedreams.hpp"
#include "gci/types.hpp"
#include "gci/yaga.hpp"
#include "gci/zfr.hpp"

namespace gci {

enum class Method { he, he_fast, dypsa, zfr, sedreams, sedreams_fast, yaga };

std::string to_string(Method m);
// Accepts the names produced by to_string plus "fast_sedreams" and
// "fast_he".
Method parse_method(const std::string& name);
// The five base methods, in reporting order.
std::vector<Method> base_methods();
std::vector<Method> all_methods();

struct MethodOptions {
  int fast_p = 4;
  HeConfig he;
  DypsaConfig dypsa;
  ZfrConfig zfr;
  SedreamsConfig sedreams;
  YagaConfig yaga;
};

GciSequence run_method(Method m, const Waveform& x, const PitchPrior& prior,
                       const MethodOptions& opt = {});

}  // namespace gci

#endif  // GCI_METHODS_HPP_
