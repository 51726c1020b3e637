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

#include "svconvex/upperset_fn.h"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "svconvex/error.h"

namespace svconvex {
namespace {

using std::size_t;

std::vector<int> Range(int begin, int end) {
  std::vector<int> out;
  for (int i = begin; i < end; ++i) out.push_back(i);
  return out;
}

// diag(t, I_m) acting on (x, z).
Matrix LiftMap(const Matrix& t, int cols, int m) {
  Matrix out;
  for (const Vector& row : t) out.push_back(Concat(row, Zeros(m)));
  for (int k = 0; k < m; ++k) out.push_back(UnitVector(cols + m, cols + k));
  return out;
}

// (x, z) -> (x, -z*.z).
Matrix ScalarizingMap(int n, const Vector& zstar) {
  const int m = static_cast<int>(zstar.size());
  Matrix out;
  for (int j = 0; j < n; ++j) out.push_back(UnitVector(n + m, j));
  out.push_back(Concat(Zeros(n), Negate(zstar)));
  return out;
}

void RequireSameSpace(const SetFn& f, const SetFn& g) {
  if (!(f.space() == g.space())) {
    throw Error(ErrorCode::kCone, "functions use different ordering cones");
  }
}

void SortUnique(Matrix& rows) {
  std::sort(rows.begin(), rows.end(), LexLess);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Directions -c from rows whose z-part is c, starting at column `offset`.
Matrix DirectionsFromRows(const OrderedSpace& space, const Polyhedron& p,
                          int offset) {
  Matrix out;
  if (!p.is_empty()) {
    for (const Vector& row : p.a()) {
      Vector c = Slice(row, offset, offset + space.m());
      if (IsZero(c)) continue;
      out.push_back(Primitive(Negate(c)));
    }
  }
  for (const Vector& r : space.dual_rays()) out.push_back(Primitive(r));
  SortUnique(out);
  return out;
}

Polyhedron CheckedCone(int m, const Matrix& rays) {
  if (m < 1) throw Error(ErrorCode::kDimension, "image space needs m >= 1");
  for (const Vector& r : rays) {
    if (static_cast<int>(r.size()) != m) {
      throw Error(ErrorCode::kDimension, "cone ray has the wrong length");
    }
  }
  Polyhedron cone = ConeFromRays(m, rays);
  if (cone.rays().empty() && cone.lines().empty()) {
    throw Error(ErrorCode::kCone, "ordering cone is {0}");
  }
  return cone;
}

}  // namespace

OrderedSpace::OrderedSpace(int m, const Matrix& cone_rays)
    : m_(m),
      cone_rays_(cone_rays),
      cone_(CheckedCone(m, cone_rays)),
      polar_(PolarCone(cone_)),
      dual_rays_(polar_.AllRays()) {
  if (polar_.rays().empty() && polar_.lines().empty()) {
    throw Error(ErrorCode::kCone, "negative dual cone is {0}");
  }
}

bool OrderedSpace::InPolar(const Vector& zstar) const {
  return static_cast<int>(zstar.size()) == m_ && ContainsPoint(polar_, zstar);
}

void OrderedSpace::RequirePolar(const Vector& zstar) const {
  if (static_cast<int>(zstar.size()) != m_) {
    throw Error(ErrorCode::kDimension, "z* has the wrong length");
  }
  if (!ContainsPoint(polar_, zstar)) {
    throw Error(ErrorCode::kCone, "z* is not in the negative dual cone");
  }
}

void RequireUpperSet(const OrderedSpace& space, const Polyhedron& a) {
  if (a.dim() != space.m()) {
    throw Error(ErrorCode::kDimension, "upper set lives in the wrong space");
  }
  if (!RecessionContains(a, space.cone())) {
    throw Error(ErrorCode::kDomain, "set is not an upper set");
  }
}

Polyhedron HalfSpaceValue::ToPolyhedron() const {
  const int m = static_cast<int>(zstar.size());
  if (is_universe()) return Polyhedron::Universe(m);
  if (is_empty()) return Polyhedron::Empty(m);
  return Polyhedron::FromH(m, {Negate(zstar)}, {alpha.value()});
}

bool HalfSpaceValue::is_universe() const {
  if (alpha.is_neg_inf()) return true;
  return IsZero(zstar) && alpha <= XReal(0);
}

bool HalfSpaceValue::is_empty() const {
  if (alpha.is_pos_inf()) return true;
  return IsZero(zstar) && alpha > XReal(0);
}

Polyhedron HalfSpace(const Vector& zstar) {
  return HalfSpaceValue{zstar, XReal(0)}.ToPolyhedron();
}

SetFn::SetFn(int n, OrderedSpace space, Polyhedron epi)
    : n_(n), space_(std::move(space)), epi_(std::move(epi)) {
  const int m = space_.m();
  if (n < 0 || epi_.dim() != n + m) {
    throw Error(ErrorCode::kDimension, "epigraph must live in Q^{n+m}");
  }
  Matrix rays;
  for (const Vector& c : space_.cone().AllRays()) {
    rays.push_back(Concat(Zeros(n), c));
  }
  if (!RecessionContains(epi_, ConeFromRays(n + m, rays))) {
    throw Error(ErrorCode::kDomain, "graph is not of epigraphical type");
  }
}

SetFn SetFn::FromSites(const OrderedSpace& space, const Matrix& xs,
                       const Matrix& points) {
  if (xs.size() != points.size() || xs.empty()) {
    throw Error(ErrorCode::kDimension, "sites and points differ in number");
  }
  const int n = static_cast<int>(xs[0].size());
  const int m = space.m();
  Matrix vertices, rays;
  for (size_t i = 0; i < xs.size(); ++i) {
    vertices.push_back(Concat(xs[i], points[i]));
  }
  for (const Vector& c : space.cone().AllRays()) {
    rays.push_back(Concat(Zeros(n), c));
  }
  return SetFn(n, space, Polyhedron::FromV(n + m, vertices, rays));
}

SetFn SetFn::Constant(int n, const OrderedSpace& space,
                      const Polyhedron& value) {
  RequireUpperSet(space, value);
  return SetFn(n, space, Product(Polyhedron::Universe(n), value));
}

Polyhedron EvalSlice(const SetFn& g, const Vector& x) {
  const int n = g.n();
  const int m = g.space().m();
  if (static_cast<int>(x.size()) != n) {
    throw Error(ErrorCode::kDimension, "evaluation point dimension mismatch");
  }
  Matrix embed;
  for (int j = 0; j < n; ++j) embed.push_back(Zeros(m));
  for (int k = 0; k < m; ++k) embed.push_back(UnitVector(m, k));
  return Preimage(g.epi(), embed, Concat(x, Zeros(m)), m);
}

Polyhedron Domain(const SetFn& g) {
  if (g.epi().is_empty()) return Polyhedron::Empty(g.n());
  return Project(g.epi(), Range(0, g.n()));
}

XReal ScalarizeSet(const Polyhedron& a, const Vector& zstar) {
  return Negate(Support(a, zstar));
}

ScalarFn Scalarize(const SetFn& g, const Vector& zstar) {
  g.space().RequirePolar(zstar);
  const int n = g.n();
  if (IsZero(zstar)) return ScalarFn::Indicator(Domain(g));
  if (g.epi().is_empty()) return ScalarFn::Constant(n, XReal::PosInf());
  Polyhedron image = Image(g.epi(), ScalarizingMap(n, zstar), n + 1);
  return ScalarFn(
      n, MinkowskiSum(image, ConeFromRays(n + 1, {UnitVector(n + 1, n)})));
}

SetFn Setify(const ScalarFn& f, const OrderedSpace& space,
             const Vector& zstar) {
  space.RequirePolar(zstar);
  const int n = f.n();
  return SetFn(n, space,
               Preimage(f.epi(), ScalarizingMap(n, zstar), Zeros(n + 1),
                        n + space.m()));
}

HalfSpaceValue ConaffineEval(const Conaffine& a, const Vector& x) {
  return {a.zstar, InfDiff(XReal(Dot(a.xstar, x)), a.r)};
}

SetFn ConaffineFn(const Conaffine& a, const OrderedSpace& space) {
  space.RequirePolar(a.zstar);
  const int n = static_cast<int>(a.xstar.size());
  if (a.r.is_pos_inf()) {
    return SetFn::Constant(n, space, Polyhedron::Universe(space.m()));
  }
  if (a.r.is_neg_inf()) {
    return SetFn::Constant(n, space, Polyhedron::Empty(space.m()));
  }
  return Setify(ScalarFn::Affine(a.xstar, a.r.value()), space, a.zstar);
}

bool MinorantCheck(const Conaffine& a, const SetFn& g) {
  if (a.r.is_pos_inf()) return true;
  if (a.r.is_neg_inf()) return g.epi().is_empty();
  // x*.x - r <= phi_{g,z*}(x) for all x.
  return Contains(ScalarFn::Affine(a.xstar, a.r.value()).epi(),
                  Scalarize(g, a.zstar).epi());
}

HalfSpaceValue ConjugateFrom(const ScalarFn& scalar_conjugate,
                             const Vector& xstar, const Vector& zstar,
                             const XReal& r) {
  return {zstar, InfDiff(scalar_conjugate.Eval(xstar), r)};
}

HalfSpaceValue Conjugate(const SetFn& g, const Vector& xstar,
                         const Vector& zstar, const XReal& r) {
  if (static_cast<int>(xstar.size()) != g.n()) {
    throw Error(ErrorCode::kDimension, "x* has the wrong length");
  }
  return ConjugateFrom(svconvex::Conjugate(Scalarize(g, zstar)), xstar, zstar,
                       r);
}

HalfSpaceValue ConjugateZeroDirection(const SetFn& g, const Vector& xstar,
                                      const XReal& r) {
  if (static_cast<int>(xstar.size()) != g.n()) {
    throw Error(ErrorCode::kDimension, "x* has the wrong length");
  }
  const XReal sigma = Support(Domain(g), xstar);
  return {Zeros(g.space().m()), InfDiff(sigma, r)};
}

Matrix FacetDirections(const SetFn& g) {
  return DirectionsFromRows(g.space(), g.epi(), g.n());
}

Matrix FacetDirections(const OrderedSpace& space, const Polyhedron& a) {
  return DirectionsFromRows(space, a, 0);
}

BiconjugateResult BiconjugateBothRoutes(const SetFn& g) {
  const int n = g.n();
  const int m = g.space().m();
  const Polyhedron& epi = g.epi();
  Polyhedron hull = epi.is_empty()
                        ? Polyhedron::Empty(n + m)
                        : Polyhedron::FromV(n + m, epi.vertices(), epi.rays(),
                                            epi.lines());
  Matrix directions = FacetDirections(g);
  // z* = 0 keeps the domain; improper scalarizations close to -inf and
  // drop out of the intersection as Z.
  const Vector zero = Zeros(m);
  Polyhedron dual =
      Setify(Biconjugate(Scalarize(g, zero)), g.space(), zero).epi();
  for (const Vector& zstar : directions) {
    if (dual.is_empty()) break;
    dual = Intersect(
        dual, Setify(Biconjugate(Scalarize(g, zstar)), g.space(), zstar).epi());
  }
  if (!(hull == dual)) {
    throw Error(ErrorCode::kTheorem,
                "biconjugate routes disagree: generator hull vs scalarizations");
  }
  return {SetFn(n, g.space(), std::move(hull)),
          SetFn(n, g.space(), std::move(dual)), std::move(directions)};
}

SetFn Biconjugate(const SetFn& g) { return BiconjugateBothRoutes(g).dual; }

Polyhedron Descalarize(const SetFn& g, const Vector& x) {
  const int m = g.space().m();
  Polyhedron out = HalfSpaceValue{Zeros(m), Scalarize(g, Zeros(m)).Eval(x)}
                       .ToPolyhedron();
  for (const Vector& zstar : FacetDirections(g)) {
    if (out.is_empty()) break;
    out = Intersect(
        out, HalfSpaceValue{zstar, Scalarize(g, zstar).Eval(x)}.ToPolyhedron());
  }
  return out;
}

Polyhedron Residual(const Polyhedron& a, const Polyhedron& b) {
  const int m = a.dim();
  if (b.dim() != m) throw Error(ErrorCode::kDimension, "residual of mixed dims");
  // Row a.z >= alpha of A becomes a.z >= alpha -inf inf_{B} a.b.
  const Matrix rows = a.a();
  const Vector rhs = a.b();
  Matrix out_a;
  Vector out_b;
  for (size_t i = 0; i < rows.size(); ++i) {
    const XReal low = Negate(Support(b, Negate(rows[i])));
    const XReal level = InfDiff(XReal(rhs[i]), low);
    if (level.is_pos_inf()) return Polyhedron::Empty(m);
    if (level.is_neg_inf()) continue;
    out_a.push_back(rows[i]);
    out_b.push_back(level.value());
  }
  return Polyhedron::FromH(m, out_a, out_b);
}

SetFn Add(const SetFn& f, const SetFn& g) {
  RequireSameSpace(f, g);
  const int n = f.n();
  const int m = f.space().m();
  if (g.n() != n) throw Error(ErrorCode::kDimension, "sum of mixed domains");
  if (f.epi().is_empty() || g.epi().is_empty()) {
    return SetFn(n, f.space(), Polyhedron::Empty(n + m));
  }
  // (x, z, z1) with (x, z1) in epi f and (x, z - z1) in epi g.
  const int d = n + 2 * m;
  Matrix lift_f, lift_g;
  for (int j = 0; j < n; ++j) {
    lift_f.push_back(UnitVector(d, j));
    lift_g.push_back(UnitVector(d, j));
  }
  for (int k = 0; k < m; ++k) {
    lift_f.push_back(UnitVector(d, n + m + k));
    lift_g.push_back(Sub(UnitVector(d, n + k), UnitVector(d, n + m + k)));
  }
  Polyhedron lifted =
      Intersect(Preimage(f.epi(), lift_f, Zeros(n + m), d),
                Preimage(g.epi(), lift_g, Zeros(n + m), d));
  return SetFn(n, f.space(), Project(lifted, Range(0, n + m)));
}

SetFn InfConvolve(const SetFn& f, const SetFn& g) {
  RequireSameSpace(f, g);
  if (g.n() != f.n()) throw Error(ErrorCode::kDimension, "inf-convolution");
  return SetFn(f.n(), f.space(), MinkowskiSum(f.epi(), g.epi()));
}

SetFn Compose(const SetFn& f, const Matrix& t, int n) {
  const int m = f.space().m();
  if (static_cast<int>(t.size()) != f.n()) {
    throw Error(ErrorCode::kDimension, "composition with a map of wrong shape");
  }
  return SetFn(n, f.space(),
               Preimage(f.epi(), LiftMap(t, n, m), Zeros(f.n() + m), n + m));
}

SetFn Pushforward(const Matrix& t, const SetFn& g, int p) {
  const int m = g.space().m();
  if (static_cast<int>(t.size()) != p) {
    throw Error(ErrorCode::kDimension, "image under a map of wrong shape");
  }
  return SetFn(p, g.space(), Image(g.epi(), LiftMap(t, g.n(), m), p + m));
}

SetFn PointwiseHull(const SetFn& f, const SetFn& g) {
  RequireSameSpace(f, g);
  if (g.n() != f.n()) throw Error(ErrorCode::kDimension, "pointwise hull");
  return SetFn(f.n(), f.space(), HullUnion(f.epi(), g.epi()));
}

bool ZstarProper(const SetFn& g, const Vector& zstar) {
  return Scalarize(g, zstar).IsProper();
}

ProperReport Properness(const SetFn& g) {
  const int n = g.n();
  const int m = g.space().m();
  ProperReport rep;
  rep.dom_nonempty = !g.epi().is_empty();
  if (rep.dom_nonempty) {
    Matrix vertical;
    for (int k = 0; k < m; ++k) {
      vertical.push_back(UnitVector(n + m, n + k));
      vertical.push_back(Negate(UnitVector(n + m, n + k)));
    }
    // A polyhedral epigraph with one slice equal to Z has every nonempty
    // slice equal to Z.
    rep.has_universe_slice =
        RecessionContains(g.epi(), ConeFromRays(n + m, vertical));
  }
  rep.proper = rep.dom_nonempty && !rep.has_universe_slice;
  for (const Vector& zstar : FacetDirections(g)) {
    if (ZstarProper(g, zstar)) rep.proper_directions.push_back(zstar);
  }
  rep.equivalence_holds = rep.proper == !rep.proper_directions.empty();
  return rep;
}

}  // namespace svconvex
