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

// Set-valued functions with values in the upper sets of an ordered space
// Q^m, stored through their epigraphs.

#ifndef SVCONVEX_UPPERSET_FN_H_
#define SVCONVEX_UPPERSET_FN_H_

#include <optional>
#include <vector>

#include "svconvex/polyhedra.h"
#include "svconvex/rational.h"
#include "svconvex/scalar_fn.h"
#include "svconvex/xreal.h"

namespace svconvex {

// Z = Q^m ordered by a polyhedral cone C with {0} != C and C^- != {0}.
class OrderedSpace {
 public:
  OrderedSpace(int m, const Matrix& cone_rays);

  int m() const { return m_; }
  const Matrix& cone_rays() const { return cone_rays_; }
  const Polyhedron& cone() const { return cone_; }
  const Polyhedron& polar() const { return polar_; }
  // Extreme rays of C^-, both orientations of its lines included.
  const Matrix& dual_rays() const { return dual_rays_; }

  bool InPolar(const Vector& zstar) const;
  // Throws kCone unless zstar lies in C^-.
  void RequirePolar(const Vector& zstar) const;

  friend bool operator==(const OrderedSpace& a, const OrderedSpace& b) {
    return a.m_ == b.m_ && a.cone_ == b.cone_;
  }

 private:
  int m_;
  Matrix cone_rays_;
  Polyhedron cone_;
  Polyhedron polar_;
  Matrix dual_rays_;
};

// A + C = A. Throws kDomain otherwise.
void RequireUpperSet(const OrderedSpace& space, const Polyhedron& a);

// H_alpha(z*) = {z : alpha <= -z*.z}; -inf gives Z, +inf gives the empty
// set, and for z* = 0 the value is Z when alpha <= 0 and empty otherwise.
struct HalfSpaceValue {
  Vector zstar;
  XReal alpha;

  Polyhedron ToPolyhedron() const;
  bool is_universe() const;
  bool is_empty() const;
};

// H(z*) = H_0(z*).
Polyhedron HalfSpace(const Vector& zstar);

// z -> x*.x - r on X paired with z* in C^-; r may be infinite.
struct Conaffine {
  Vector xstar;
  Vector zstar;
  XReal r;
};

class SetFn {
 public:
  SetFn(int n, OrderedSpace space, Polyhedron epi);

  // g(x) = {point_i} + C on a finite list of sites, then cl co.
  static SetFn FromSites(const OrderedSpace& space, const Matrix& xs,
                         const Matrix& points);
  // Every x maps to `value`.
  static SetFn Constant(int n, const OrderedSpace& space,
                        const Polyhedron& value);

  int n() const { return n_; }
  const OrderedSpace& space() const { return space_; }
  const Polyhedron& epi() const { return epi_; }

  friend bool operator==(const SetFn& a, const SetFn& b) {
    return a.n_ == b.n_ && a.space_ == b.space_ && a.epi_ == b.epi_;
  }

 private:
  int n_;
  OrderedSpace space_;
  Polyhedron epi_;
};

Polyhedron EvalSlice(const SetFn& g, const Vector& x);
Polyhedron Domain(const SetFn& g);

// inf{-z*.z : z in A}.
XReal ScalarizeSet(const Polyhedron& a, const Vector& zstar);

ScalarFn Scalarize(const SetFn& g, const Vector& zstar);
SetFn Setify(const ScalarFn& f, const OrderedSpace& space,
             const Vector& zstar);

HalfSpaceValue ConaffineEval(const Conaffine& a, const Vector& x);
SetFn ConaffineFn(const Conaffine& a, const OrderedSpace& space);
// S(x) contains g(x) for every x.
bool MinorantCheck(const Conaffine& a, const SetFn& g);

// g*(x*, z*, r), read off the scalar conjugate along z*.
HalfSpaceValue Conjugate(const SetFn& g, const Vector& xstar,
                         const Vector& zstar, const XReal& r);
// Same value from a precomputed (phi_{g,z*})*.
HalfSpaceValue ConjugateFrom(const ScalarFn& scalar_conjugate,
                             const Vector& xstar, const Vector& zstar,
                             const XReal& r);
// g*(x*, 0, r): Z when sigma(x* | dom g) <= r, empty otherwise.
HalfSpaceValue ConjugateZeroDirection(const SetFn& g, const Vector& xstar,
                                      const XReal& r);

// Nonzero directions used to rebuild cl co g from scalarizations: -c for
// each epigraph row (a, c) with c != 0 plus the extreme rays of C^-.
Matrix FacetDirections(const SetFn& g);
// Same for an upper set.
Matrix FacetDirections(const OrderedSpace& space, const Polyhedron& a);

struct BiconjugateResult {
  SetFn hull;     // from the generators of epi g
  SetFn dual;     // intersection of setified scalar biconjugates
  Matrix directions;
};

// Both routes; throws kTheorem when they differ.
BiconjugateResult BiconjugateBothRoutes(const SetFn& g);
SetFn Biconjugate(const SetFn& g);

// Intersection of the setified scalarizations at x over the facet
// directions (and z* = 0).
Polyhedron Descalarize(const SetFn& g, const Vector& x);

// A -* B = {z : B + z inside A}.
Polyhedron Residual(const Polyhedron& a, const Polyhedron& b);

SetFn Add(const SetFn& f, const SetFn& g);
SetFn InfConvolve(const SetFn& f, const SetFn& g);
// x -> f(T x) with T of shape p x n.
SetFn Compose(const SetFn& f, const Matrix& t, int n);
// y -> cl co of the union of g(x) over T x = y.
SetFn Pushforward(const Matrix& t, const SetFn& g, int p);
// cl co of the pointwise union.
SetFn PointwiseHull(const SetFn& f, const SetFn& g);

struct ProperReport {
  bool dom_nonempty = false;
  bool has_universe_slice = false;
  bool proper = false;
  // Facet directions along which g is z*-proper.
  Matrix proper_directions;
  // proper iff some nonzero direction is z*-proper.
  bool equivalence_holds = false;
};

ProperReport Properness(const SetFn& g);
bool ZstarProper(const SetFn& g, const Vector& zstar);

}  // namespace svconvex

#endif  // SVCONVEX_UPPERSET_FN_H_
