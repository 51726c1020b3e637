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

// Brute-force evaluators over finite samples. Nothing here calls the LP,
// double description or projection code, so agreement with the polyhedral
// kernel is an independent check rather than a restatement.
//
// Bound directions: a sweep over a subset of the feasible points can only
// under-estimate a supremum and over-estimate an infimum. Each function
// states which side it lands on.

#ifndef SVCONVEX_ORACLE_H_
#define SVCONVEX_ORACLE_H_

#include <functional>
#include <utility>
#include <vector>

#include "svconvex/rational.h"
#include "svconvex/xreal.h"

namespace svconvex::oracle {

// All points of ({lo, ..., hi} / den)^dim in lexicographic order.
std::vector<Vector> LatticeBox(int dim, int lo, int hi, int den = 1);

struct GridScalar {
  std::vector<Vector> xs;
  std::vector<XReal> values;
};

GridScalar SampleScalar(const std::function<XReal(const Vector&)>& f,
                        const std::vector<Vector>& xs);

// sup over samples of x*.x -inf g(x). Lower bound for the conjugate.
XReal GridConjugate(const GridScalar& g, const Vector& xstar);

// inf over samples of g(x). Upper bound for the infimum.
XReal GridInfimum(const GridScalar& g);

// A set-valued function known on finitely many x: the value at xs[i] is the
// upper set points[i] + C; an empty point list means the empty set.
struct GridFn {
  std::vector<Vector> xs;
  std::vector<Matrix> points;
};

// inf{-z*.z : z in points + C} for z* in C^-: the cone adds nothing, so this
// is exact for the sampled value and an upper bound for its closed hull
// when only some generators are listed.
XReal GridScalarize(const Matrix& points, const Vector& zstar);

// Level alpha of the set-valued conjugate g*(x*, z*, r) = H_alpha(z*):
// alpha = sup over samples of (x*.x - r) + max_p z*.p, the residual of the
// half-space S(x) by g(x) intersected over x. Lower bound for the level of
// the conjugate of any function whose graph contains the samples.
XReal GridSetConjugateLevel(const GridFn& g, const Vector& xstar,
                            const Vector& zstar, const XReal& r);

// w in points + C where C = {c : normals . c >= 0 row by row}.
bool InUpperSet(const Matrix& points, const Matrix& cone_normals,
                const Vector& w);

// Points z of `box` with b + z in {a.z >= alpha} for every sample b. The
// samples are a subset of B, so the result contains every lattice point of
// the exact residual.
std::vector<Vector> GridResidual(const Matrix& a_rows, const Vector& a_rhs,
                                 const Matrix& b_samples,
                                 const std::vector<Vector>& box);

// Points of `box` lying in pa + pb + C (exact on the lattice).
std::vector<Vector> GridMinkowski(const Matrix& pa, const Matrix& pb,
                                  const Matrix& cone_normals,
                                  const std::vector<Vector>& box);

// g(x) = {(1/x, 0)} + Q^2_+ for x in (0, 2], empty at 0, scalarized along
// z* = (0, -1).
struct NonclosedDemo {
  std::vector<std::pair<Rational, XReal>> samples;  // (x, phi(x)), x > 0
  XReal at_zero;
  // inf of phi over {0} and samples in (0, 1/8]: the lower closure at 0.
  XReal closure_at_zero;
};

NonclosedDemo NonclosedScalarizationDemo();

}  // namespace svconvex::oracle

#endif  // SVCONVEX_ORACLE_H_
