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

// Polyhedral convex functions Q^n -> [-inf, +inf], stored by their closed
// epigraphs {(x, r) : g(x) <= r} in Q^{n+1}. The value at x is +inf when the
// vertical slice over x is empty and -inf when it is unbounded below.

#ifndef SVCONVEX_SCALAR_FN_H_
#define SVCONVEX_SCALAR_FN_H_

#include <optional>
#include <string>
#include <vector>

#include "svconvex/polyhedra.h"
#include "svconvex/rational.h"
#include "svconvex/xreal.h"

namespace svconvex {

class ScalarFn {
 public:
  // `epi` must live in Q^{n+1} and recede along the last coordinate.
  ScalarFn(int n, Polyhedron epi);

  static ScalarFn Affine(const Vector& xstar, const Rational& r);
  // -inf on {x : x*.x <= r}, +inf elsewhere.
  static ScalarFn ImproperExt(const Vector& xstar, const Rational& r);
  static ScalarFn Indicator(const Polyhedron& p);
  static ScalarFn Constant(int n, const XReal& c);
  // max_i (slopes_i . x + offsets_i) restricted to `domain`.
  static ScalarFn MaxAffine(const Matrix& slopes, const Vector& offsets,
                            const Polyhedron& domain);

  int n() const { return n_; }
  const Polyhedron& epi() const { return epi_; }

  XReal Eval(const Vector& x) const;
  Polyhedron Domain() const;
  // Nonempty domain and no -inf value.
  bool IsProper() const;
  // True iff the function takes the value -inf somewhere.
  bool HasMinusInf() const;
  // inf over all x, with a minimizer when the infimum is finite.
  XReal Infimum(Vector* argmin = nullptr) const;

  friend bool operator==(const ScalarFn& g, const ScalarFn& f) {
    return g.n_ == f.n_ && g.epi_ == f.epi_;
  }

 private:
  int n_;
  Polyhedron epi_;
};

ScalarFn Conjugate(const ScalarFn& g);
ScalarFn Biconjugate(const ScalarFn& g);
// Epigraph sum: the (closed) inf-convolution.
ScalarFn InfConvolve(const ScalarFn& g, const ScalarFn& f);
// x -> f(T x) for T of shape p x n.
ScalarFn ComposeLinear(const ScalarFn& f, const Matrix& t, int n);
// y -> inf{g(x) : T x = y} for T of shape p x n.
ScalarFn Pushforward(const Matrix& t, const ScalarFn& g, int p);
// Pointwise sums under the inf- and sup-addition. The sup-sum of two
// convex functions can fail to be convex; that case throws kDomain.
ScalarFn PointwiseInfAdd(const ScalarFn& g, const ScalarFn& f);
ScalarFn PointwiseSupAdd(const ScalarFn& g, const ScalarFn& f);

// inf over y* of g*(x* - T^T y*) (+) f*(y*) given conjugates gc on Q^n and
// fc on Q^p, under inf- or sup-addition. The argmin is stored when the
// value is attained.
XReal InfOverSplits(const ScalarFn& gc, const ScalarFn& fc, const Matrix& t,
                    const Vector& xstar, bool sup_addition,
                    Vector* witness = nullptr);

// One row of the chain-rule report for a dual point x*.
struct ChainRulePoint {
  Vector xstar;
  // (g inf-conv S f)* against g* (+sup) f*S^T and g* (+inf) f*S^T.
  XReal conv_lhs, conv_sup, conv_inf;
  // (g + f T)* against the sup- and inf-convolution of g* and T^T f*.
  XReal sum_lhs, sum_sup, sum_inf;
  // Statement (c): g or f identically +inf.
  bool improper_case = false;
  // Statement (d): fT = -inf somewhere on dom g, or both proper with
  // T(dom g) meeting dom f.
  bool qualified = false;
  std::optional<Vector> witness;
  // Every relation that the theorem asserts for this point holds.
  bool ok = true;
  std::vector<std::string> failures;
};

// g on Q^n, f on Q^p, T: Q^n -> Q^p (p x n), S: Q^p -> Q^n (n x p).
std::vector<ChainRulePoint> ChainConjugateCheck(
    const ScalarFn& g, const ScalarFn& f, const Matrix& t, const Matrix& s,
    const std::vector<Vector>& xstars, const std::vector<Vector>& ystars);

struct ScalarDualityReport {
  XReal primal;  // inf_x h(x, 0)
  XReal dual;    // sup_y* 0 -inf h*(0, y*)
  std::optional<Vector> witness;
  bool qualified = false;  // slice nonempty and h proper
  bool equal = false;
  // Attainment at a supplied point, decided both ways.
  std::optional<bool> attained_by_value;
  std::optional<bool> attained_by_conjugate;
  std::string note;
};

// h on Q^{n+p}; the last p coordinates form the perturbation block.
ScalarDualityReport FundamentalDualityScalar(
    const ScalarFn& h, int n, int p, const std::optional<Vector>& xbar);

}  // namespace svconvex

#endif  // SVCONVEX_SCALAR_FN_H_
