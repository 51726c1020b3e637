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

// Exact rational linear programming: a dense two-phase primal simplex with
// Bland's anti-cycling rule. Every outcome comes with a certificate that a
// caller can verify with plain dot products.

#ifndef SVCONVEX_LP_H_
#define SVCONVEX_LP_H_

#include <optional>

#include "svconvex/rational.h"

namespace svconvex {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  // Optimal objective value (kOptimal only).
  Rational value;
  // Optimal point (kOptimal) or some feasible point (kUnbounded).
  Vector x;
  // kOptimal: dual multipliers, y >= 0, A^T y = c and b.y = value.
  // kInfeasible: Farkas certificate, y >= 0, A^T y = 0 and b.y > 0.
  Vector y;
  // kUnbounded: A ray >= 0 and c.ray < 0.
  Vector ray;
};

// minimize c.x subject to A x >= b with x free. `a` may have zero rows, in
// which case the problem is unconstrained.
LpResult Minimize(const Matrix& a, const Vector& b, const Vector& c);

// Some point of {x : A x >= b}, if any.
std::optional<Vector> FeasiblePoint(const Matrix& a, const Vector& b, int dim);

// Checks the certificate attached to `result`; used by tests and by callers
// that want to assert the solver's answer independently.
bool VerifyCertificate(const Matrix& a, const Vector& b, const Vector& c,
                       const LpResult& result);

}  // namespace svconvex

#endif  // SVCONVEX_LP_H_
