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

#include "svconvex/error.h"

namespace svconvex {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRational:
      return "E_RAT";
    case ErrorCode::kCone:
      return "E_CONE";
    case ErrorCode::kDimension:
      return "E_DIM";
    case ErrorCode::kSchema:
      return "E_SCHEMA";
    case ErrorCode::kDomain:
      return "E_DOMAIN";
    case ErrorCode::kPremise:
      return "E_PREMISE";
    case ErrorCode::kTheorem:
      return "E_THEOREM";
    case ErrorCode::kUsage:
      return "E_USAGE";
  }
  return "E_UNKNOWN";
}

}  // namespace svconvex
