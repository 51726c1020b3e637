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

// Duality checks for set-valued functions: chain rule for conjugates,
// sandwich, Fenchel-Rockafellar and the fundamental duality formula. Every
// set-level statement is reduced to scalar LPs along a direction z* and
// then verified again on the polyhedra themselves.

#ifndef SVCONVEX_DUALITY_H_
#define SVCONVEX_DUALITY_H_

#include <optional>
#include <string>
#include <vector>

#include "svconvex/polyhedra.h"
#include "svconvex/rational.h"
#include "svconvex/scalar_fn.h"
#include "svconvex/upperset_fn.h"
#include "svconvex/xreal.h"

namespace svconvex {

struct DualTriple {
  Vector xstar;
  Vector zstar;
  XReal r;
};

// (c1 inf-conv T^T c2) for set-valued conjugates given by their scalarized
// conjugates c1 on X* and c2 on Y*: the level is the inf over y* of
// c1(x* - T^T y*) +inf c2(y*), shifted by r. T has shape p x n.
HalfSpaceValue ConjInfConvolve(const ScalarFn& c1, const ScalarFn& c2,
                               const Matrix& t, const Vector& xstar,
                               const Vector& zstar, const XReal& r,
                               Vector* witness = nullptr);

struct ChainRuleEntry {
  DualTriple triple;
  // (g inf-conv S f)* against g*(x*, z*, r -* s) + f*S*(x*, z*, s) with
  // s = (phi_f)*(S^T x*).
  Polyhedron conv_lhs, conv_rhs;
  // (g + f T)*, the sup-convolution level and g* inf-conv T*f*.
  Polyhedron lhs, mid, rhs;
  bool lhs_contains_mid = false;
  bool mid_contains_rhs = false;
  bool qualified = false;
  std::optional<Vector> witness;
  bool ok = true;
  std::vector<std::string> failures;
};

struct ChainRuleReport {
  std::vector<ChainRuleEntry> entries;
  bool ok = true;
};

// g on Q^n, f on Q^p, T of shape p x n, S of shape n x p.
ChainRuleReport SetChainRule(const SetFn& g, const SetFn& f, const Matrix& t,
                             const Matrix& s,
                             const std::vector<DualTriple>& triples);

struct SandwichResult {
  Vector ystar;
  Vector z0;
  // x -> S_{(T^T y*, z*)}(x) - z0.
  SetFn middle;
  bool lower_inclusion = false;  // g(x) inside middle(x)
  bool upper_inclusion = false;  // middle(x) inside H(z*) -* f(T x)
  bool z0_in_conjugates = false;
  std::optional<Vector> touching_point;
  // Checked only when a touching point exists.
  std::optional<bool> conjugate_equalities;
};

struct PremiseWitness {
  Vector x;
  Vector z;  // in g(x), outside H(z*) -* f(T x)
};

// nullopt when g(x) lies in H(z*) -* f(Tx) for every x.
std::optional<PremiseWitness> SandwichPremiseViolation(const SetFn& g,
                                                       const SetFn& f,
                                                       const Matrix& t,
                                                       const Vector& zstar);

// Throws kPremise on a violated premise or a failed qualification and
// kTheorem when an inclusion fails.
SandwichResult Sandwich(const SetFn& g, const SetFn& f, const Matrix& t,
                        const Vector& zstar);

struct DirectionResult {
  Vector zstar;
  HalfSpaceValue d;
  bool weak_ok = false;
  bool qualified = false;
  std::optional<bool> strong_ok;
  std::optional<Vector> witness;
  // D(z*) equals the single residual at the witness.
  std::optional<bool> witness_ok;
  // D(z*) lies in the residual at each sampled y*.
  bool samples_ok = true;
};

struct DualityReport {
  Polyhedron p;
  std::vector<DirectionResult> directions;
  Polyhedron intersection;
  bool intersection_equals_p = false;
  // Every nonzero direction qualified, or fT(x0) = Z on dom g.
  bool intersection_asserted = false;
};

// Facet directions of P and the extreme rays of C^- when `directions` is
// empty.
DualityReport FenchelRockafellar(const SetFn& g, const SetFn& f,
                                 const Matrix& t,
                                 const std::optional<Matrix>& directions,
                                 const std::vector<Vector>& sample_ystars = {});

struct FundamentalDirection {
  Vector zstar;
  bool zstar_proper = false;
  bool qualified = false;
  Polyhedron lhs;      // cl(union of h(x, 0) + H(z*))
  HalfSpaceValue rhs;  // intersection over y* of H(z*) -* h*(0, y*, z*)
  bool equal = false;
  std::optional<Vector> witness;
  std::optional<bool> witness_ok;
  std::optional<bool> attained_by_slice;
  std::optional<bool> attained_by_subgradient;
};

struct FundamentalReport {
  bool feasible = false;  // (x0, 0) in dom h for some x0
  Polyhedron value_set;   // cl co union of h(x, 0)
  std::vector<FundamentalDirection> directions;
  bool part_b_applicable = false;
  Polyhedron intersection;
  std::optional<bool> part_b_equal;
  std::optional<bool> xbar_minimal_by_slice;
  std::optional<bool> xbar_minimal_by_subgradient;
};

// h on Q^{n+p}, x in the first n coordinates.
FundamentalReport FundamentalDuality(const SetFn& h, int n, int p,
                                     const std::optional<Matrix>& directions,
                                     const std::optional<Vector>& xbar);

}  // namespace svconvex

#endif  // SVCONVEX_DUALITY_H_
