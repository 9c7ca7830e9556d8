// gci/log.hpp
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

#ifndef GCI_LOG_HPP_
#define GCI_LOG_HPP_

#include <functional>
#include <string>

namespace gci {

using WarningHandler = std::function<void(const std::string&)>;

// Emits a warning. The default handler writes "WARNING: <msg>" to stderr.
void warn(const std::string& message);

// Replaces the warning handler and returns the previous one. Passing an empty
// function restores the default.
WarningHandler set_warning_handler(WarningHandler handler);

}  // namespace gci

#endif  // GCI_LOG_HPP_
