// Copyright 2026 The svconvex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVCONVEX_ERROR_H_
#define SVCONVEX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace svconvex {

// Distinct failure classes. The CLI maps kTheorem to exit code 2 and every
// other code to exit code 1.
enum class ErrorCode {
  kRational,   // E_RAT: malformed rational literal
  kCone,       // E_CONE: ordering cone violates {0} != C, C^- != {0}, or mismatch
  kDimension,  // E_DIM: dimension mismatch or cap exceeded
  kSchema,     // E_SCHEMA: malformed problem file
  kDomain,     // E_DOMAIN: argument outside the operation's domain
  kPremise,    // E_PREMISE: a hypothesis of a check does not hold
  kTheorem,    // E_THEOREM: two routes that must agree disagree
  kUsage,      // E_USAGE: command line misuse
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace svconvex

#endif  // SVCONVEX_ERROR_H_
