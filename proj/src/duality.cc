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

#include "svconvex/duality.h"

#include <cstddef>
#include <map>
#include <sstream>
#include <utility>

#include "svconvex/error.h"
#include "svconvex/lp.h"

namespace svconvex {
namespace {

using std::size_t;

void RequireSameSpace(const SetFn& g, const SetFn& f) {
  if (!(g.space() == f.space())) {
    throw Error(ErrorCode::kCone, "functions use different ordering cones");
  }
}

void RequireShape(const Matrix& t, int rows, int cols, const char* what) {
  if (static_cast<int>(t.size()) != rows) {
    throw Error(ErrorCode::kDimension, what);
  }
  for (const Vector& row : t) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kDimension, what);
    }
  }
}

std::string Show(const Vector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(v[i]);
  }
  return out + ")";
}

Polyhedron Level(const ScalarFn& conj, const Vector& at, const Vector& zstar,
                 const XReal& r) {
  return ConjugateFrom(conj, at, zstar, r).ToPolyhedron();
}

Polyhedron ValueSet(const SetFn& g) {
  const int n = g.n();
  const int m = g.space().m();
  if (g.epi().is_empty()) return Polyhedron::Empty(m);
  std::vector<int> keep;
  for (int k = 0; k < m; ++k) keep.push_back(n + k);
  return Project(g.epi(), keep);
}

// Scalar pieces of a pair (g, f T) along one direction.
struct Along {
  ScalarFn phi_g;
  ScalarFn phi_f;
  ScalarFn gc;
  ScalarFn fc;
  bool qualified;
};

Along Scalarized(const SetFn& g, const SetFn& f, const Matrix& t,
                 const Vector& zstar) {
  ScalarFn pg = Scalarize(g, zstar);
  ScalarFn pf = Scalarize(f, zstar);
  const ScalarFn ft = ComposeLinear(pf, t, g.n());
  const Polyhedron dg = pg.Domain();
  const Polyhedron dft = ft.Domain();
  const bool meet = !Intersect(dg, dft).is_empty();
  // Polyhedral stand-in for continuity: proper pieces whose domains meet
  // through T, or a -inf value of one inside the domain of the other.
  const bool qualified =
      meet && ((pg.IsProper() && pf.IsProper()) || pg.HasMinusInf() ||
               ft.HasMinusInf());
  ScalarFn gc = Conjugate(pg);
  ScalarFn fc = Conjugate(pf);
  return {std::move(pg), std::move(pf), std::move(gc), std::move(fc),
          qualified};
}

}  // namespace

HalfSpaceValue ConjInfConvolve(const ScalarFn& c1, const ScalarFn& c2,
                               const Matrix& t, const Vector& xstar,
                               const Vector& zstar, const XReal& r,
                               Vector* witness) {
  const XReal level = InfOverSplits(c1, c2, t, xstar, false, witness);
  return {zstar, InfDiff(level, r)};
}

ChainRuleReport SetChainRule(const SetFn& g, const SetFn& f, const Matrix& t,
                             const Matrix& s,
                             const std::vector<DualTriple>& triples) {
  RequireSameSpace(g, f);
  const int n = g.n();
  const int p = f.n();
  RequireShape(t, p, n, "T must map X to Y");
  RequireShape(s, n, p, "S must map Y to X");
  const SetFn conv = InfConvolve(g, Pushforward(s, f, n));
  const SetFn sum = Add(g, Compose(f, t, n));
  const Matrix st = Transpose(s, p);
  const Matrix tt = Transpose(t, n);

  struct Cached {
    Along along;
    ScalarFn conv_c;
    ScalarFn sum_c;
  };
  std::map<Vector, Cached> cache;
  auto at = [&](const Vector& zstar) -> const Cached& {
    auto it = cache.find(zstar);
    if (it == cache.end()) {
      Cached c{Scalarized(g, f, t, zstar), Conjugate(Scalarize(conv, zstar)),
               Conjugate(Scalarize(sum, zstar))};
      it = cache.emplace(zstar, std::move(c)).first;
    }
    return it->second;
  };

  ChainRuleReport report;
  for (const DualTriple& tr : triples) {
    if (static_cast<int>(tr.xstar.size()) != n) {
      throw Error(ErrorCode::kDimension, "x* has the wrong length");
    }
    const Cached& c = at(tr.zstar);
    const Along& a = c.along;
    ChainRuleEntry e;
    e.triple = tr;
    auto require = [&e](bool cond, const std::string& what) {
      if (!cond) {
        e.ok = false;
        e.failures.push_back(what);
      }
    };

    const Vector sx = Apply(st, tr.xstar);
    const XReal split = a.fc.Eval(sx);
    e.conv_lhs = Level(c.conv_c, tr.xstar, tr.zstar, tr.r);
    e.conv_rhs =
        MinkowskiSum(Level(a.gc, tr.xstar, tr.zstar, InfDiff(tr.r, split)),
                     Level(a.fc, sx, tr.zstar, split));
    require(e.conv_lhs == e.conv_rhs, "(a) conjugate of inf-convolution");

    e.lhs = Level(c.sum_c, tr.xstar, tr.zstar, tr.r);
    e.mid = HalfSpaceValue{tr.zstar,
                           InfDiff(InfOverSplits(a.gc, a.fc, t, tr.xstar, true),
                                   tr.r)}
                .ToPolyhedron();
    Vector y;
    e.rhs = ConjInfConvolve(a.gc, a.fc, t, tr.xstar, tr.zstar, tr.r, &y)
                .ToPolyhedron();
    e.lhs_contains_mid = Contains(e.lhs, e.mid);
    e.mid_contains_rhs = Contains(e.mid, e.rhs);
    require(e.lhs_contains_mid, "(b) first inclusion");
    require(e.mid_contains_rhs, "(b) second inclusion");

    e.qualified = a.qualified;
    if (e.qualified) {
      require(e.lhs == e.rhs, "(c) equality");
      const XReal fy = a.fc.Eval(y);
      const Polyhedron split_value = MinkowskiSum(
          Level(a.gc, Sub(tr.xstar, Apply(tt, y)), tr.zstar, InfDiff(tr.r, fy)),
          Level(a.fc, y, tr.zstar, fy));
      const bool attained = e.lhs == split_value;
      require(attained, "(c) witness attains");
      if (attained) e.witness = y;
    }
    if (!e.ok) report.ok = false;
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::optional<PremiseWitness> SandwichPremiseViolation(const SetFn& g,
                                                       const SetFn& f,
                                                       const Matrix& t,
                                                       const Vector& zstar) {
  RequireSameSpace(g, f);
  const int n = g.n();
  const int p = f.n();
  const int m = g.space().m();
  RequireShape(t, p, n, "T must map X to Y");
  if (g.epi().is_empty() || f.epi().is_empty()) return std::nullopt;
  // (x, z, w) with (x, z) in epi g and (T x, w) in epi f.
  const int d = n + 2 * m;
  Matrix pick_g, pick_f;
  for (int j = 0; j < n + m; ++j) pick_g.push_back(UnitVector(d, j));
  for (const Vector& row : t) pick_f.push_back(Concat(row, Zeros(2 * m)));
  for (int k = 0; k < m; ++k) pick_f.push_back(UnitVector(d, n + m + k));
  const Polyhedron lifted =
      Intersect(Preimage(g.epi(), pick_g, Zeros(n + m), d),
                Preimage(f.epi(), pick_f, Zeros(p + m), d));
  if (lifted.is_empty()) return std::nullopt;
  // Violated iff -z*.(z + w) < 0 somewhere.
  const Vector cost = Concat(Zeros(n), Concat(Negate(zstar), Negate(zstar)));
  Matrix a = lifted.a();
  Vector b = lifted.b();
  LpResult r = Minimize(a, b, cost);
  Vector point;
  if (r.status == LpStatus::kOptimal) {
    if (sgn(r.value) >= 0) return std::nullopt;
    point = r.x;
  } else {
    a.push_back(Negate(cost));
    b.push_back(1);
    point = *FeasiblePoint(a, b, d);
  }
  return PremiseWitness{Slice(point, 0, n), Slice(point, n, n + m)};
}

SandwichResult Sandwich(const SetFn& g, const SetFn& f, const Matrix& t,
                        const Vector& zstar) {
  RequireSameSpace(g, f);
  const OrderedSpace& space = g.space();
  const int n = g.n();
  space.RequirePolar(zstar);
  if (IsZero(zstar)) {
    throw Error(ErrorCode::kPremise, "sandwich needs a nonzero z*");
  }
  if (auto bad = SandwichPremiseViolation(g, f, t, zstar)) {
    throw Error(ErrorCode::kPremise,
                "premise fails at x = " + Show(bad->x) + " with z = " +
                    Show(bad->z) + " in g(x) outside H(z*) -* f(Tx)");
  }
  const Along a = Scalarized(g, f, t, zstar);
  if (!(a.qualified && a.phi_g.IsProper() && a.phi_f.IsProper())) {
    throw Error(ErrorCode::kPremise,
                "qualification not established: scalarizations must be "
                "proper with T(dom g) meeting dom f");
  }
  Vector w;
  const XReal s0 = InfOverSplits(a.gc, a.fc, t, Zeros(n), false, &w);
  if (!s0.is_finite()) {
    throw Error(ErrorCode::kTheorem, "dual value is not finite");
  }
  const Vector ystar = Negate(w);
  const Matrix tt = Transpose(t, n);
  const Vector tty = Apply(tt, ystar);
  const XReal fval = a.fc.Eval(Negate(ystar));
  if (!fval.is_finite()) {
    throw Error(ErrorCode::kTheorem, "dual witness leaves the domain of f*");
  }
  // -z*.z0 = -(phi_f)*(-y*).
  const Vector z0 = Scale(fval.value() / Dot(zstar, zstar), zstar);
  SandwichResult res{ystar,
                     z0,
                     Setify(ScalarFn::Affine(tty, -fval.value()), space, zstar),
                     false,
                     false,
                     false,
                     std::nullopt,
                     std::nullopt};

  const Polyhedron h = HalfSpace(zstar);
  res.lower_inclusion = Contains(res.middle.epi(), g.epi());
  // middle(x) + f(Tx) inside H(z*) for every x.
  res.upper_inclusion =
      Contains(Product(Polyhedron::Universe(n), h),
               Add(res.middle, Compose(f, t, n)).epi());
  if (!res.lower_inclusion || !res.upper_inclusion) {
    throw Error(ErrorCode::kTheorem, "sandwich inclusion fails");
  }
  const Polyhedron gstar = Level(a.gc, tty, zstar, XReal(0));
  const Polyhedron fstar = Level(a.fc, Negate(res.ystar), zstar, XReal(0));
  res.z0_in_conjugates = ContainsPoint(gstar, res.z0) &&
                         ContainsPoint(Residual(h, fstar), res.z0);

  // Touching: phi_g(x0) = -phi_f(T x0).
  Vector x0;
  const XReal gap =
      PointwiseInfAdd(a.phi_g, ComposeLinear(a.phi_f, t, n)).Infimum(&x0);
  if (gap == XReal(0)) {
    const Polyhedron left = MinkowskiSum(EvalSlice(g, x0), h);
    const Polyhedron right = Residual(h, EvalSlice(f, Apply(t, x0)));
    if (left == right) {
      res.touching_point = x0;
      res.conjugate_equalities =
          gstar == MinkowskiSum(Polyhedron::Point(res.z0), h) &&
          fstar == MinkowskiSum(Polyhedron::Point(Negate(res.z0)), h);
    }
  }
  return res;
}

DualityReport FenchelRockafellar(const SetFn& g, const SetFn& f,
                                 const Matrix& t,
                                 const std::optional<Matrix>& directions,
                                 const std::vector<Vector>& sample_ystars) {
  RequireSameSpace(g, f);
  const OrderedSpace& space = g.space();
  const int n = g.n();
  const int p = f.n();
  const int m = space.m();
  RequireShape(t, p, n, "T must map X to Y");
  const SetFn ft = Compose(f, t, n);
  DualityReport rep;
  rep.p = ValueSet(Add(g, ft));
  const Matrix dirs = directions ? *directions : FacetDirections(space, rep.p);
  const Matrix tt = Transpose(t, n);

  rep.intersection = Polyhedron::Universe(m);
  bool all_qualified = true;
  for (const Vector& zstar : dirs) {
    space.RequirePolar(zstar);
    DirectionResult d;
    d.zstar = zstar;
    if (IsZero(zstar)) {
      // H(0) = Z, so every residual is Z.
      d.d = {zstar, XReal::NegInf()};
      d.weak_ok = true;
      rep.directions.push_back(std::move(d));
      continue;
    }
    const Along a = Scalarized(g, f, t, zstar);
    const Polyhedron h = HalfSpace(zstar);
    auto residual_at = [&](const Vector& ystar) {
      return Residual(
          h, MinkowskiSum(Level(a.gc, Apply(tt, ystar), zstar, XReal(0)),
                          Level(a.fc, Negate(ystar), zstar, XReal(0))));
    };
    Vector w;
    const XReal inf = InfOverSplits(a.gc, a.fc, t, Zeros(n), false, &w);
    d.d = {zstar, InfDiff(XReal(0), inf)};
    const Polyhedron dz = d.d.ToPolyhedron();
    d.weak_ok = Contains(dz, rep.p);
    d.qualified = a.qualified;
    if (d.qualified) {
      d.strong_ok = MinkowskiSum(rep.p, h) == dz;
      d.witness = Negate(w);
      d.witness_ok = residual_at(*d.witness) == dz;
    } else {
      all_qualified = false;
    }
    for (const Vector& ystar : sample_ystars) {
      if (!Contains(residual_at(ystar), dz)) d.samples_ok = false;
    }
    rep.intersection = Intersect(rep.intersection, dz);
    rep.directions.push_back(std::move(d));
  }
  rep.intersection_equals_p = rep.intersection == rep.p;
  // fT(x0) = Z for some x0 in dom g.
  bool universe_value = false;
  if (Properness(ft).has_universe_slice) {
    universe_value = !Intersect(Domain(g), Domain(ft)).is_empty();
  }
  rep.intersection_asserted = all_qualified || universe_value;
  return rep;
}

FundamentalReport FundamentalDuality(const SetFn& h, int n, int p,
                                     const std::optional<Matrix>& directions,
                                     const std::optional<Vector>& xbar) {
  if (h.n() != n + p) {
    throw Error(ErrorCode::kDimension, "perturbation block does not fit");
  }
  if (xbar && static_cast<int>(xbar->size()) != n) {
    throw Error(ErrorCode::kDimension, "x-bar has the wrong length");
  }
  const OrderedSpace& space = h.space();
  const int m = space.m();
  Matrix embed;  // x -> (x, 0)
  for (int j = 0; j < n + p; ++j) {
    embed.push_back(j < n ? UnitVector(n, j) : Zeros(n));
  }
  const SetFn slice = Compose(h, embed, n);
  FundamentalReport rep;
  rep.feasible = !slice.epi().is_empty();
  rep.value_set = ValueSet(slice);
  const Matrix dirs =
      directions ? *directions : FacetDirections(space, rep.value_set);
  std::optional<Polyhedron> at_xbar;
  Vector xbar0;
  if (xbar) {
    xbar0 = Concat(*xbar, Zeros(p));
    at_xbar = EvalSlice(h, xbar0);
  }

  rep.intersection = Polyhedron::Universe(m);
  bool all_proper = true;
  bool all_subgradients = true;
  for (const Vector& zstar : dirs) {
    space.RequirePolar(zstar);
    if (IsZero(zstar)) {
      throw Error(ErrorCode::kDomain, "directions must be nonzero");
    }
    FundamentalDirection d;
    d.zstar = zstar;
    const ScalarFn phi = Scalarize(h, zstar);
    const ScalarDualityReport s =
        FundamentalDualityScalar(phi, n, p, std::nullopt);
    d.zstar_proper = phi.IsProper();
    d.qualified = rep.feasible && d.zstar_proper;
    all_proper = all_proper && d.zstar_proper;
    const Polyhedron hz = HalfSpace(zstar);
    d.lhs = MinkowskiSum(rep.value_set, hz);
    d.rhs = {zstar, s.dual};
    d.equal = d.lhs == d.rhs.ToPolyhedron();
    rep.intersection = Intersect(rep.intersection, d.rhs.ToPolyhedron());
    if (s.witness) {
      d.witness = s.witness;
      const ScalarFn hc = Conjugate(phi);
      const Vector pair = Concat(Zeros(n), *s.witness);
      const Polyhedron hstar = Level(hc, pair, zstar, XReal(0));
      d.witness_ok = Residual(hz, hstar) == d.lhs;
      if (at_xbar) {
        d.attained_by_slice = MinkowskiSum(*at_xbar, hz) == d.lhs;
        const Polyhedron s_val =
            ConaffineEval({pair, zstar, XReal(0)}, xbar0).ToPolyhedron();
        d.attained_by_subgradient =
            Contains(hstar, Residual(s_val, *at_xbar));
        all_subgradients = all_subgradients && *d.attained_by_subgradient;
      }
    } else if (at_xbar) {
      all_subgradients = false;
    }
    rep.directions.push_back(std::move(d));
  }
  rep.part_b_applicable = rep.feasible && all_proper;
  if (rep.part_b_applicable) {
    rep.part_b_equal = rep.intersection == rep.value_set;
    if (at_xbar) {
      rep.xbar_minimal_by_slice = *at_xbar == rep.value_set;
      rep.xbar_minimal_by_subgradient = all_subgradients;
    }
  }
  return rep;
}

}  // namespace svconvex
