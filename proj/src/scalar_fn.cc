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

#include "svconvex/scalar_fn.h"

#include <cstddef>
#include <utility>

#include "svconvex/error.h"
#include "svconvex/lp.h"

namespace svconvex {
namespace {

using std::size_t;

// Block matrix diag(t, 1) acting on (x, r).
Matrix WithVertical(const Matrix& t, int cols) {
  Matrix out;
  for (const Vector& row : t) out.push_back(Concat(row, Vector{0}));
  out.push_back(UnitVector(cols + 1, cols));
  return out;
}

XReal FromLp(const LpResult& r, bool negate) {
  switch (r.status) {
    case LpStatus::kInfeasible:
      return negate ? XReal::NegInf() : XReal::PosInf();
    case LpStatus::kUnbounded:
      return negate ? XReal::PosInf() : XReal::NegInf();
    case LpStatus::kOptimal:
      break;
  }
  return XReal(negate ? Rational(-r.value) : r.value);
}

}  // namespace

ScalarFn::ScalarFn(int n, Polyhedron epi) : n_(n), epi_(std::move(epi)) {
  if (epi_.dim() != n + 1) {
    throw Error(ErrorCode::kDimension, "epigraph must live in Q^{n+1}");
  }
  if (!RecessionContains(epi_, ConeFromRays(n + 1, {UnitVector(n + 1, n)}))) {
    throw Error(ErrorCode::kDomain, "set is not an epigraph");
  }
}

ScalarFn ScalarFn::Affine(const Vector& xstar, const Rational& r) {
  const int n = static_cast<int>(xstar.size());
  return ScalarFn(n, Polyhedron::FromH(n + 1, {Concat(Negate(xstar), Vector{1})},
                                       {Rational(-r)}));
}

ScalarFn ScalarFn::ImproperExt(const Vector& xstar, const Rational& r) {
  const int n = static_cast<int>(xstar.size());
  return ScalarFn(n, Polyhedron::FromH(n + 1, {Concat(Negate(xstar), Vector{0})},
                                       {Rational(-r)}));
}

ScalarFn ScalarFn::Indicator(const Polyhedron& p) {
  return ScalarFn(p.dim(), Product(p, Polyhedron::FromH(1, {Vector{1}}, {0})));
}

ScalarFn ScalarFn::Constant(int n, const XReal& c) {
  if (c.is_pos_inf()) return ScalarFn(n, Polyhedron::Empty(n + 1));
  if (c.is_neg_inf()) return ScalarFn(n, Polyhedron::Universe(n + 1));
  return ScalarFn(n, Polyhedron::FromH(n + 1, {UnitVector(n + 1, n)}, {c.value()}));
}

ScalarFn ScalarFn::MaxAffine(const Matrix& slopes, const Vector& offsets,
                             const Polyhedron& domain) {
  const int n = domain.dim();
  if (slopes.size() != offsets.size()) {
    throw Error(ErrorCode::kDimension, "slopes and offsets differ in length");
  }
  Matrix a;
  Vector b;
  for (size_t i = 0; i < slopes.size(); ++i) {
    a.push_back(Concat(Negate(slopes[i]), Vector{1}));
    b.push_back(offsets[i]);
  }
  Polyhedron graph = Polyhedron::FromH(n + 1, a, b);
  return ScalarFn(n, Intersect(graph, Product(domain, Polyhedron::Universe(1))));
}

XReal ScalarFn::Eval(const Vector& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw Error(ErrorCode::kDimension, "evaluation point dimension mismatch");
  }
  if (epi_.is_empty()) return XReal::PosInf();
  const size_t r = static_cast<size_t>(n_);
  for (size_t i = 0; i < epi_.eq_a().size(); ++i) {
    const Vector& row = epi_.eq_a()[i];
    if (Dot(Slice(row, 0, n_), x) != epi_.eq_b()[i]) return XReal::PosInf();
  }
  std::vector<XReal> bounds;
  for (size_t i = 0; i < epi_.in_a().size(); ++i) {
    const Vector& row = epi_.in_a()[i];
    const Rational rest = epi_.in_b()[i] - Dot(Slice(row, 0, n_), x);
    if (sgn(row[r]) == 0) {
      if (sgn(rest) > 0) return XReal::PosInf();
    } else {
      bounds.emplace_back(rest / row[r]);
    }
  }
  return SupOf(bounds);
}

Polyhedron ScalarFn::Domain() const {
  if (epi_.is_empty()) return Polyhedron::Empty(n_);
  std::vector<int> keep;
  for (int j = 0; j < n_; ++j) keep.push_back(j);
  return Project(epi_, keep);
}

bool ScalarFn::HasMinusInf() const {
  if (epi_.is_empty()) return false;
  for (const Vector& row : epi_.in_a()) {
    if (sgn(row[static_cast<size_t>(n_)]) > 0) return false;
  }
  return true;
}

bool ScalarFn::IsProper() const { return !epi_.is_empty() && !HasMinusInf(); }

XReal ScalarFn::Infimum(Vector* argmin) const {
  LpResult r = Minimize(epi_.a(), epi_.b(), UnitVector(n_ + 1, n_));
  if (r.status == LpStatus::kOptimal && argmin != nullptr) {
    *argmin = Slice(r.x, 0, n_);
  }
  return FromLp(r, false);
}

ScalarFn Conjugate(const ScalarFn& g) {
  const int n = g.n();
  const Polyhedron& epi = g.epi();
  if (epi.is_empty()) return ScalarFn(n, Polyhedron::Universe(n + 1));
  // Vertex (v, rho) gives t >= x*.v - rho; ray (d, s) gives x*.d <= s.
  Matrix a;
  Vector b;
  const size_t r = static_cast<size_t>(n);
  for (const Vector& v : epi.vertices()) {
    a.push_back(Concat(Negate(Slice(v, 0, n)), Vector{1}));
    b.push_back(-v[r]);
  }
  for (const Vector& d : epi.AllRays()) {
    a.push_back(Concat(Negate(Slice(d, 0, n)), Vector{0}));
    b.push_back(-d[r]);
  }
  return ScalarFn(n, Polyhedron::FromH(n + 1, a, b));
}

ScalarFn Biconjugate(const ScalarFn& g) { return Conjugate(Conjugate(g)); }

ScalarFn InfConvolve(const ScalarFn& g, const ScalarFn& f) {
  if (g.n() != f.n()) throw Error(ErrorCode::kDimension, "inf-convolution");
  return ScalarFn(g.n(), MinkowskiSum(g.epi(), f.epi()));
}

ScalarFn ComposeLinear(const ScalarFn& f, const Matrix& t, int n) {
  if (static_cast<int>(t.size()) != f.n()) {
    throw Error(ErrorCode::kDimension, "composition with a map of wrong shape");
  }
  return ScalarFn(n, Preimage(f.epi(), WithVertical(t, n), Zeros(f.n() + 1), n + 1));
}

ScalarFn Pushforward(const Matrix& t, const ScalarFn& g, int p) {
  if (static_cast<int>(t.size()) != p) {
    throw Error(ErrorCode::kDimension, "image under a map of wrong shape");
  }
  return ScalarFn(p, Image(g.epi(), WithVertical(t, g.n()), p + 1));
}

ScalarFn PointwiseInfAdd(const ScalarFn& g, const ScalarFn& f) {
  const int n = g.n();
  if (f.n() != n) throw Error(ErrorCode::kDimension, "pointwise sum");
  if (g.epi().is_empty() || f.epi().is_empty()) {
    return ScalarFn(n, Polyhedron::Empty(n + 1));
  }
  // Lift to (x, r, r1) with (x, r1) in epi g and (x, r - r1) in epi f.
  const int d = n + 2;
  Matrix lift_g, lift_f;
  for (int j = 0; j < n; ++j) {
    lift_g.push_back(UnitVector(d, j));
    lift_f.push_back(UnitVector(d, j));
  }
  lift_g.push_back(UnitVector(d, n + 1));
  lift_f.push_back(Sub(UnitVector(d, n), UnitVector(d, n + 1)));
  Polyhedron lifted = Intersect(Preimage(g.epi(), lift_g, Zeros(n + 1), d),
                                Preimage(f.epi(), lift_f, Zeros(n + 1), d));
  std::vector<int> keep;
  for (int j = 0; j <= n; ++j) keep.push_back(j);
  return ScalarFn(n, Project(lifted, keep));
}

ScalarFn PointwiseSupAdd(const ScalarFn& g, const ScalarFn& f) {
  const int n = g.n();
  if (f.n() != n) throw Error(ErrorCode::kDimension, "pointwise sum");
  if (!g.HasMinusInf() && !f.HasMinusInf()) return PointwiseInfAdd(g, f);
  // The result is -inf on the union of the -inf regions and +inf elsewhere.
  Polyhedron rg = g.HasMinusInf() ? g.Domain() : Polyhedron::Empty(n);
  Polyhedron rf = f.HasMinusInf() ? f.Domain() : Polyhedron::Empty(n);
  Polyhedron region = Polyhedron::Empty(n);
  if (Contains(rg, rf)) {
    region = rg;
  } else if (Contains(rf, rg)) {
    region = rf;
  } else {
    throw Error(ErrorCode::kDomain, "sup-sum is not convex");
  }
  return ScalarFn(n, Product(region, Polyhedron::Universe(1)));
}

XReal InfOverSplits(const ScalarFn& gc, const ScalarFn& fc, const Matrix& t,
                    const Vector& xstar, bool sup_addition, Vector* witness) {
  const int n = gc.n();
  const int p = fc.n();
  if (static_cast<int>(t.size()) != p || static_cast<int>(xstar.size()) != n) {
    throw Error(ErrorCode::kDimension, "split dimensions");
  }
  // y* -> x* - T^T y* as an affine map into Q^n.
  const Matrix tt = Transpose(t, n);
  Matrix neg_tt;
  for (const Vector& row : tt) neg_tt.push_back(Negate(row));
  Polyhedron dom_a = Preimage(gc.Domain(), neg_tt, xstar, p);
  Polyhedron dom_b = fc.Domain();
  auto found = [&](const Polyhedron& where) {
    if (witness != nullptr) *witness = *FeasiblePoint(where.a(), where.b(), p);
    return XReal::NegInf();
  };
  const bool minus_a = gc.HasMinusInf();
  const bool minus_b = fc.HasMinusInf();
  if (sup_addition) {
    if (minus_a && !dom_a.is_empty()) return found(dom_a);
    if (minus_b && !dom_b.is_empty()) return found(dom_b);
  }
  Polyhedron both = Intersect(dom_a, dom_b);
  if (both.is_empty()) {
    if (witness != nullptr) *witness = Zeros(p);
    return XReal::PosInf();
  }
  if (minus_a || minus_b) return found(both);

  // Variables (y*, t1, t2): (x* - T^T y*, t1) in epi gc, (y*, t2) in epi fc.
  const int d = p + 2;
  Matrix a;
  Vector b;
  const Matrix ga = gc.epi().a();
  const Vector gb = gc.epi().b();
  for (size_t i = 0; i < ga.size(); ++i) {
    const Vector ax = Slice(ga[i], 0, n);
    Vector row = Negate(Apply(t, ax));
    row.push_back(ga[i][static_cast<size_t>(n)]);
    row.push_back(0);
    a.push_back(std::move(row));
    b.push_back(gb[i] - Dot(ax, xstar));
  }
  const Matrix fa = fc.epi().a();
  const Vector fb = fc.epi().b();
  for (size_t i = 0; i < fa.size(); ++i) {
    Vector row = Slice(fa[i], 0, p);
    row.push_back(0);
    row.push_back(fa[i][static_cast<size_t>(p)]);
    a.push_back(std::move(row));
    b.push_back(fb[i]);
  }
  Vector cost = Zeros(d);
  cost[static_cast<size_t>(p)] = 1;
  cost[static_cast<size_t>(p + 1)] = 1;
  LpResult r = Minimize(a, b, cost);
  if (r.status == LpStatus::kOptimal && witness != nullptr) {
    *witness = Slice(r.x, 0, p);
  }
  return FromLp(r, false);
}

std::vector<ChainRulePoint> ChainConjugateCheck(
    const ScalarFn& g, const ScalarFn& f, const Matrix& t, const Matrix& s,
    const std::vector<Vector>& xstars, const std::vector<Vector>& ystars) {
  const int n = g.n();
  const int p = f.n();
  if (static_cast<int>(t.size()) != p || static_cast<int>(s.size()) != n) {
    throw Error(ErrorCode::kDimension, "chain rule maps have wrong shape");
  }
  const ScalarFn gc = Conjugate(g);
  const ScalarFn fc = Conjugate(f);
  const ScalarFn conv_conj = Conjugate(InfConvolve(g, Pushforward(s, f, n)));
  const ScalarFn fT = ComposeLinear(f, t, n);
  const ScalarFn sum_conj = Conjugate(PointwiseInfAdd(g, fT));
  // Epigraph route for g* inf-conv T^T f*, used as a cross-check.
  const ScalarFn conv_route = InfConvolve(gc, Pushforward(Transpose(t, n), fc, n));
  const Matrix st = Transpose(s, p);

  const bool improper = g.epi().is_empty() || f.epi().is_empty();
  bool qualified = false;
  if (!g.epi().is_empty() && fT.HasMinusInf() &&
      !Intersect(fT.Domain(), g.Domain()).is_empty()) {
    qualified = true;
  } else if (g.IsProper() && f.IsProper() &&
             !Intersect(g.Domain(), fT.Domain()).is_empty()) {
    qualified = true;
  }

  std::vector<ChainRulePoint> out;
  for (const Vector& xstar : xstars) {
    ChainRulePoint pt;
    pt.xstar = xstar;
    auto require = [&pt](bool cond, const std::string& what) {
      if (!cond) {
        pt.ok = false;
        pt.failures.push_back(what);
      }
    };
    const XReal g_at = gc.Eval(xstar);
    const XReal f_at = fc.Eval(Apply(st, xstar));
    pt.conv_lhs = conv_conj.Eval(xstar);
    pt.conv_sup = SupAdd(g_at, f_at);
    pt.conv_inf = InfAdd(g_at, f_at);
    require(pt.conv_lhs == pt.conv_sup, "(a) conjugate of inf-convolution");
    require(pt.conv_sup <= pt.conv_inf, "(a) sup-sum below inf-sum");

    Vector y;
    pt.sum_lhs = sum_conj.Eval(xstar);
    pt.sum_sup = InfOverSplits(gc, fc, t, xstar, true);
    pt.sum_inf = InfOverSplits(gc, fc, t, xstar, false, &y);
    require(pt.sum_lhs <= pt.sum_sup, "(b) first inequality");
    require(pt.sum_sup <= pt.sum_inf, "(b) second inequality");
    require(pt.sum_inf == conv_route.Eval(xstar), "(b) epigraph route");

    pt.improper_case = improper;
    if (improper) {
      require(pt.sum_lhs.is_neg_inf(), "(c) conjugate is -inf");
      require(pt.sum_sup.is_neg_inf(), "(c) sup-convolution is -inf");
      for (const Vector& ystar : ystars) {
        const Vector shifted = Sub(xstar, Apply(Transpose(t, n), ystar));
        require(pt.sum_lhs == SupAdd(gc.Eval(shifted), fc.Eval(ystar)),
                "(c) split identity");
      }
    }
    pt.qualified = qualified;
    if (qualified) {
      require(!pt.sum_lhs.is_neg_inf(), "(d) conjugate is not -inf");
      require(pt.sum_lhs == pt.sum_inf, "(d) equality");
      const Vector shifted = Sub(xstar, Apply(Transpose(t, n), y));
      const bool attained = pt.sum_lhs == InfAdd(gc.Eval(shifted), fc.Eval(y));
      require(attained, "(d) witness attains");
      if (attained) pt.witness = y;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

ScalarDualityReport FundamentalDualityScalar(
    const ScalarFn& h, int n, int p, const std::optional<Vector>& xbar) {
  if (h.n() != n + p) {
    throw Error(ErrorCode::kDimension, "perturbation block does not fit");
  }
  ScalarDualityReport rep;
  Matrix embed;  // x -> (x, 0)
  for (int j = 0; j < n + p; ++j) {
    embed.push_back(j < n ? UnitVector(n, j) : Zeros(n));
  }
  const ScalarFn slice = ComposeLinear(h, embed, n);
  rep.primal = slice.Infimum();

  // sup_y* -h*(0, y*) = -inf_y* h*(0, y*).
  const ScalarFn hc = Conjugate(h);
  Matrix pick;  // y* -> (0, y*)
  for (int j = 0; j < n + p; ++j) {
    pick.push_back(j < n ? Zeros(p) : UnitVector(p, j - n));
  }
  const ScalarFn dual_fn = ComposeLinear(hc, pick, p);
  Vector y;
  const XReal inf_dual = dual_fn.Infimum(&y);
  rep.dual = Negate(inf_dual);
  if (inf_dual.is_finite()) {
    rep.witness = y;
  } else if (inf_dual.is_pos_inf()) {
    // Every y* attains: the conjugate is +inf along the whole slice.
    rep.witness = Zeros(p);
  }

  rep.qualified = h.IsProper() && !slice.epi().is_empty();
  rep.equal = rep.primal == rep.dual;
  if (h.epi().is_empty()) {
    rep.note = "empty domain: both sides +inf";
  } else if (!rep.qualified) {
    rep.note = "qualification not established";
  }

  if (xbar) {
    const XReal at = slice.Eval(*xbar);
    rep.attained_by_value = at == rep.primal;
    // Some y* with h*(0, y*) = 0 -inf h(xbar, 0).
    const XReal target = InfDiff(XReal(0), at);
    if (target.is_finite()) {
      Polyhedron level = Intersect(
          dual_fn.epi(),
          Polyhedron::FromHE(p + 1, {}, {}, {UnitVector(p + 1, p)}, {target.value()}));
      rep.attained_by_conjugate = !level.is_empty();
    } else if (target.is_pos_inf()) {
      rep.attained_by_conjugate =
          dual_fn.epi().is_empty() || !dual_fn.Domain().is_universe();
    } else {
      rep.attained_by_conjugate = dual_fn.HasMinusInf();
    }
  }
  return rep;
}

}  // namespace svconvex
