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

// Double description method for polyhedral cones: given {y : M y >= 0},
// compute a minimal generating system (lineality basis plus extreme rays).

#ifndef SVCONVEX_DOUBLE_DESCRIPTION_H_
#define SVCONVEX_DOUBLE_DESCRIPTION_H_

#include "svconvex/rational.h"

namespace svconvex {

struct ConeGenerators {
  Matrix lines;  // basis of the lineality space
  Matrix rays;   // extreme rays modulo lines, primitive integer
};

// Minimal generators of {y in Q^dim : m.y >= 0 for every row m}.
ConeGenerators DoubleDescription(int dim, const Matrix& constraints);

}  // namespace svconvex

#endif  // SVCONVEX_DOUBLE_DESCRIPTION_H_
