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

// JSON problem and report files. Rationals travel as strings "p/q" (plain
// integers are accepted on input), infinities as "+inf" / "-inf". Every
// parse error names the offending JSON pointer.

#ifndef SVCONVEX_CLI_IO_H_
#define SVCONVEX_CLI_IO_H_

#include <nlohmann/json.hpp>

#include <string>

#include "svconvex/duality.h"
#include "svconvex/error.h"
#include "svconvex/polyhedra.h"
#include "svconvex/rational.h"
#include "svconvex/scalar_fn.h"
#include "svconvex/upperset_fn.h"
#include "svconvex/xreal.h"

namespace svconvex::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// SVCONVEX_MAX_DIM, default 6.
int MaxDim();

// Error message prefixed with "<pointer>: ".
[[noreturn]] void Fail(ErrorCode code, const std::string& pointer,
                       const std::string& what);

Rational ParseRational(const Json& j, const std::string& ptr);
XReal ParseXReal(const Json& j, const std::string& ptr);
Vector ParseVector(const Json& j, const std::string& ptr, int dim = -1);
Matrix ParseMatrix(const Json& j, const std::string& ptr, int cols = -1);

// {"dim"?, "A", "b"} or {"dim"?, "vertices", "rays"?, "lines"?}.
Polyhedron ParsePolyhedron(const Json& j, const std::string& ptr, int dim);
// {"m", "cone_rays"}.
OrderedSpace ParseSpace(const Json& j, const std::string& ptr);
// {"version"?, "space", "n", "epi"}.
SetFn ParseSetFn(const Json& j, const std::string& ptr = "");
// {"n", "epi"}; epi lives in Q^{n+1}.
ScalarFn ParseScalarFn(const Json& j, const std::string& ptr = "");
struct UpperSet {
  OrderedSpace space;
  Polyhedron set;
};

// {"space", "set"}; the set must satisfy A + C = A.
UpperSet ParseUpperSet(const Json& j, const std::string& ptr = "");
// "id" or a matrix of the given shape.
Matrix ParseLinMap(const Json& j, int rows, int cols,
                   const std::string& ptr = "");
DualTriple ParseTriple(const Json& j, int n, int m, const std::string& ptr);

Json Emit(const Rational& q);
Json Emit(const XReal& a);
Json Emit(const Vector& v);
Json Emit(const Matrix& m);
// Canonical H-rep; with `vrep` the generators as well.
Json Emit(const Polyhedron& p, bool vrep = false);
Json Emit(const OrderedSpace& s);
Json Emit(const SetFn& g, bool vrep = false);
Json Emit(const ScalarFn& f, bool vrep = false);
Json Emit(const HalfSpaceValue& h, bool vrep = false);
Json Emit(const UpperSet& a, bool vrep = false);

Json ReadFile(const std::string& path);

}  // namespace svconvex::io

#endif  // SVCONVEX_CLI_IO_H_
