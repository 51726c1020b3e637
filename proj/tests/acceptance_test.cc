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

// Acceptance run: one line per criterion, PASS only when every instance
// agrees and the wall-clock budget holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "svconvex/cli_io.h"
#include "svconvex/duality.h"
#include "svconvex/error.h"
#include "svconvex/oracle.h"
#include "svconvex/upperset_fn.h"
#include "test_util.h"

namespace svconvex {
namespace {

using testing::M;
using testing::Q;
using testing::Random;
using testing::V;

// Failures of the current criterion; the first few are printed.
struct Tally {
  int checked = 0;
  std::vector<std::string> failures;
  void Expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

SetFn Fixture(const std::string& name) {
  return io::ParseSetFn(
      io::ReadFile(std::string(SVCONVEX_FIXTURE_DIR) + "/" + name));
}

io::UpperSet UpperFixture(const std::string& name) {
  return io::ParseUpperSet(
      io::ReadFile(std::string(SVCONVEX_FIXTURE_DIR) + "/" + name));
}

Polyhedron Row(const Vector& a, const Rational& b) {
  return Polyhedron::FromH(static_cast<int>(a.size()), {a}, {b});
}

// ---- 1: extended reals ---------------------------------------------------

// Definitional sweeps over a window of integers [-w, w] plus the two
// infinities. A finite value that moves when the window doubles is the
// unbounded limit.

// inf{r + s : r, s real, r >= a, s >= b}.
XReal InfAddOn(const XReal& a, const XReal& b, int w) {
  XReal best = XReal::PosInf();
  for (int r = -w; r <= w; ++r) {
    for (int s = -w; s <= w; ++s) {
      if (XReal(r) >= a && XReal(s) >= b && XReal(r + s) < best) {
        best = XReal(r + s);
      }
    }
  }
  return best;
}

// sup{r + s : r, s real, r <= a, s <= b}.
XReal SupAddOn(const XReal& a, const XReal& b, int w) {
  XReal best = XReal::NegInf();
  for (int r = -w; r <= w; ++r) {
    for (int s = -w; s <= w; ++s) {
      if (XReal(r) <= a && XReal(s) <= b && XReal(r + s) > best) {
        best = XReal(r + s);
      }
    }
  }
  return best;
}

std::vector<XReal> Candidates(int w) {
  std::vector<XReal> out{XReal::NegInf()};
  for (int t = -w; t <= w; ++t) out.emplace_back(t);
  out.push_back(XReal::PosInf());
  return out;
}

// inf{t : a <= b (+inf) t}.
XReal InfDiffOn(const XReal& a, const XReal& b, int w) {
  XReal best = XReal::PosInf();
  for (const XReal& t : Candidates(w)) {
    if (a <= InfAddOn(b, t, w) && t < best) best = t;
  }
  return best;
}

// sup{t : b (+sup) t <= a}.
XReal SupDiffOn(const XReal& a, const XReal& b, int w) {
  XReal best = XReal::NegInf();
  for (const XReal& t : Candidates(w)) {
    if (SupAddOn(b, t, w) <= a && t > best) best = t;
  }
  return best;
}

XReal Limit(const std::function<XReal(int)>& f) {
  const XReal small = f(4);
  const XReal big = f(8);
  if (small == big) return big;
  return big < small ? XReal::NegInf() : XReal::PosInf();
}

XReal DefInfAdd(const XReal& a, const XReal& b) {
  return Limit([&](int w) { return InfAddOn(a, b, w); });
}
XReal DefSupAdd(const XReal& a, const XReal& b) {
  return Limit([&](int w) { return SupAddOn(a, b, w); });
}
XReal DefInfDiff(const XReal& a, const XReal& b) {
  return Limit([&](int w) { return InfDiffOn(a, b, w); });
}
XReal DefSupDiff(const XReal& a, const XReal& b) {
  return Limit([&](int w) { return SupDiffOn(a, b, w); });
}

void Criterion1(Tally& t) {
  const std::vector<XReal> grid{XReal::NegInf(), XReal(-1), XReal(0),
                                XReal(1), XReal::PosInf()};
  for (const XReal& a : grid) {
    for (const XReal& b : grid) {
      const std::string at = ToString(a) + "," + ToString(b);
      t.Expect(InfAdd(a, b) == DefInfAdd(a, b), "inf-add " + at);
      t.Expect(SupAdd(a, b) == DefSupAdd(a, b), "sup-add " + at);
      t.Expect(InfDiff(a, b) == DefInfDiff(a, b), "inf-diff " + at);
      t.Expect(SupDiff(a, b) == DefSupDiff(a, b), "sup-diff " + at);
      for (const XReal& s : grid) {
        t.Expect((a <= InfAdd(b, s)) == (InfDiff(a, b) <= s),
                 "inf adjunction " + at + "," + ToString(s));
        t.Expect((SupAdd(b, s) <= a) == (s <= SupDiff(a, b)),
                 "sup adjunction " + at + "," + ToString(s));
      }
    }
  }
}

// ---- 2: half-spaces against upper sets ----------------------------------

void Criterion2(Tally& t) {
  Random rnd(101);
  for (int it = 0; it < 100; ++it) {
    const int m = rnd.Int(1, 3);
    OrderedSpace s = rnd.Space(m);
    const Vector zs = rnd.DualVec(s);
    Polyhedron a = MinkowskiSum(rnd.VPoly(m, 3, 1), s.cone());
    if (rnd.Coin(10)) a = Polyhedron::Empty(m);
    const XReal alpha = rnd.Coin(10) ? XReal::NegInf() : XReal(rnd.Rat(-3, 3));
    const XReal sigma = Support(a, zs);
    const std::string at = "instance " + std::to_string(it);
    t.Expect(HalfSpaceValue({zs, XReal(0)}).ToPolyhedron() == HalfSpace(zs),
             at + ": H_0 = H");
    const Polyhedron h = HalfSpaceValue{zs, alpha}.ToPolyhedron();
    t.Expect(MinkowskiSum(a, h) ==
                 HalfSpaceValue{zs, InfAdd(alpha, Negate(sigma))}.ToPolyhedron(),
             at + ": A + H_alpha");
    t.Expect(Residual(h, a) ==
                 HalfSpaceValue{zs, InfDiff(alpha, Negate(sigma))}.ToPolyhedron(),
             at + ": H_alpha -* A");
  }
}

// ---- 3, 4: biconjugation -----------------------------------------------

void Criterion3(Tally& t) {
  Random rnd(103);
  for (int it = 0; it < 100; ++it) {
    OrderedSpace s = rnd.Space(rnd.Int(1, 3));
    SetFn g = rnd.Fn(s, rnd.Int(1, 3));
    const std::string at = "instance " + std::to_string(it);
    try {
      BiconjugateResult b = BiconjugateBothRoutes(g);
      t.Expect(b.hull == b.dual, at + ": routes differ");
      t.Expect(b.hull.epi() == g.epi(), at + ": hull differs from cl co g");
    } catch (const Error& e) {
      t.Expect(false, at + ": " + e.what());
    }
  }
}

void Criterion4(Tally& t) {
  Random rnd(104);
  for (int it = 0; it < 50; ++it) {
    OrderedSpace s = rnd.Space(rnd.Int(1, 2));
    const int n = rnd.Int(1, 2);
    // Finitely many sites: neither convex nor closed, so the grid sweep is
    // the conjugate of g itself and FromSites is its closed convex hull.
    Matrix xs, zs;
    for (int i = 0; i < rnd.Int(1, 4); ++i) {
      xs.push_back(rnd.Vec(n, -2, 2, 2));
      zs.push_back(rnd.Vec(s.m(), -2, 2, 2));
    }
    oracle::GridFn sites{xs, {}};
    for (const Vector& z : zs) sites.points.push_back({z});
    SetFn hull = SetFn::FromSites(s, xs, zs);
    SetFn bic = Biconjugate(hull);
    for (int k = 0; k < 20; ++k) {
      const Vector xstar = rnd.Vec(n, -2, 2, 2);
      const Vector zstar = rnd.DualVec(s);
      const XReal r = rnd.Coin(10) ? XReal::NegInf() : XReal(rnd.Rat(-2, 2));
      const HalfSpaceValue v = Conjugate(bic, xstar, zstar, r);
      const std::string at =
          "instance " + std::to_string(it) + " triple " + std::to_string(k);
      t.Expect(v.ToPolyhedron() == Conjugate(hull, xstar, zstar, r).ToPolyhedron(),
               at + ": hull");
      const XReal level = oracle::GridSetConjugateLevel(sites, xstar, zstar, r);
      if (IsZero(zstar)) {
        t.Expect(v.is_universe() == (level <= XReal(0)), at + ": z* = 0");
      } else {
        t.Expect(v.alpha == level, at + ": level");
      }
    }
  }
}

// ---- 5: scalarization calculus -----------------------------------------

void Criterion5(Tally& t) {
  Random rnd(105);
  for (int it = 0; it < 50; ++it) {
    OrderedSpace s = rnd.Space(rnd.Int(1, 2));
    const int n = rnd.Int(1, 2);
    SetFn f = rnd.Fn(s, n);
    SetFn g = rnd.Fn(s, n);
    const Vector zs = rnd.DualVec(s);
    const ScalarFn pf = Scalarize(f, zs);
    const ScalarFn pg = Scalarize(g, zs);
    const std::string at = "instance " + std::to_string(it);
    t.Expect(Scalarize(Add(f, g), zs) == PointwiseInfAdd(pf, pg), at + ": sum");
    t.Expect(Scalarize(InfConvolve(f, g), zs) == InfConvolve(pf, pg),
             at + ": inf-convolution");
    t.Expect(Scalarize(PointwiseHull(f, g), zs) ==
                 ScalarFn(n, HullUnion(pf.epi(), pg.epi())),
             at + ": pointwise infimum");
    Matrix tm;
    for (int i = 0; i < n; ++i) tm.push_back(rnd.Vec(n, -2, 2));
    t.Expect(Scalarize(Compose(f, tm, n), zs) == ComposeLinear(pf, tm, n),
             at + ": composition");
    const int p = rnd.Int(1, 2);
    Matrix u;
    for (int i = 0; i < p; ++i) u.push_back(rnd.Vec(n, -2, 2));
    t.Expect(Scalarize(Pushforward(u, f, p), zs) == Pushforward(u, pf, p),
             at + ": image");
  }
}

// ---- 6-9: duality -------------------------------------------------------

void Criterion6(Tally& t) {
  Random rnd(106);
  int improper = 0;
  for (int it = 0; it < 100; ++it) {
    OrderedSpace s = rnd.Space(rnd.Int(1, 2));
    const int n = rnd.Int(1, 2);
    const int p = rnd.Int(1, 2);
    SetFn g = rnd.Fn(s, n);
    SetFn f = rnd.Fn(s, p);
    // Every fourth instance is forced improper.
    if (it % 8 == 0) g = SetFn(n, s, Polyhedron::Empty(n + s.m()));
    if (it % 8 == 4) f = SetFn::Constant(p, s, Polyhedron::Universe(s.m()));
    if (!Properness(g).proper || !Properness(f).proper) ++improper;
    Matrix tm;
    for (int i = 0; i < p; ++i) tm.push_back(rnd.Vec(n, -2, 2));
    DualityReport rep = FenchelRockafellar(g, f, tm, std::nullopt);
    for (const DirectionResult& d : rep.directions) {
      t.Expect(d.weak_ok && Contains(d.d.ToPolyhedron(), rep.p),
               "instance " + std::to_string(it) + ": D(z*) misses P");
    }
  }
  t.Expect(improper >= 25, "too few improper instances");
}

void Criterion7(Tally& t) {
  DualityReport rep = FenchelRockafellar(
      Fixture("fr_g.json"), Fixture("fr_f.json"), Identity(1), std::nullopt);
  int found = 0;
  for (const DirectionResult& d : rep.directions) {
    const Polyhedron got = d.d.ToPolyhedron();
    t.Expect(d.witness.has_value() && d.witness_ok == true, "witness");
    if (d.zstar == V({-1, -1})) {
      t.Expect(got == Row(V({1, 1}), 1), "D((-1,-1))");
      ++found;
    } else if (d.zstar == V({-1, 0})) {
      t.Expect(got == Row(V({1, 0}), 0), "D((-1,0))");
      ++found;
    } else if (d.zstar == V({0, -1})) {
      t.Expect(got == Row(V({0, 1}), 0), "D((0,-1))");
      ++found;
    }
  }
  t.Expect(found == 3, "directions");
  t.Expect(rep.intersection == rep.p && rep.intersection_equals_p,
           "intersection");
}

void Criterion8(Tally& t) {
  SandwichResult s = Sandwich(Fixture("abs2.json"), Fixture("sandwich_f.json"),
                              Identity(1), V({0, -1}));
  t.Expect(s.ystar == V({-1}), "y*");
  t.Expect(s.z0 == V({0, 0}), "z0");
  t.Expect(s.lower_inclusion, "lower inclusion");
  t.Expect(s.upper_inclusion, "upper inclusion");
  t.Expect(s.touching_point.has_value() && s.conjugate_equalities == true,
           "touching case");
}

void Criterion9(Tally& t) {
  SetFn g = Fixture("gap_g.json");
  SetFn f = Fixture("gap_f.json");
  std::vector<DualTriple> triples;
  Random rnd(109);
  for (int k = 0; k < 30; ++k) {
    Vector zs = rnd.DualVec(g.space());
    if (IsZero(zs)) zs = V({-1, -1});
    triples.push_back({rnd.Vec(1, -3, 3, 2), zs, XReal(rnd.Rat(-3, 3, 2))});
  }
  ChainRuleReport rep = SetChainRule(g, f, Identity(1), Identity(1), triples);
  t.Expect(rep.ok, "chain rule report");
  for (const ChainRuleEntry& e : rep.entries) {
    t.Expect(e.lhs.is_universe(), "lhs = Z");
    t.Expect(e.rhs.is_empty(), "rhs = empty");
  }
}

// ---- 10, 11: oracle -----------------------------------------------------

void Criterion10(Tally& t) {
  oracle::NonclosedDemo d = oracle::NonclosedScalarizationDemo();
  t.Expect(d.at_zero.is_pos_inf(), "phi(0) = +inf");
  t.Expect(d.closure_at_zero == XReal(0), "cl phi(0) = 0");
  bool quarter = false;
  for (const auto& [x, phi] : d.samples) {
    t.Expect(x > 0 && phi == XReal(0), "phi(" + ToString(x) + ") = 0");
    quarter = quarter || x == Q(1, 4);
  }
  t.Expect(quarter, "x = 1/4 sampled");
}

void Criterion11(Tally& t) {
  const char* fns[] = {"abs2.json",     "fr_g.json",    "fr_f.json",
                       "sandwich_f.json", "sandwich_f_bad.json",
                       "gap_g.json",    "gap_f.json",   "fundamental_h.json"};
  for (const char* name : fns) {
    SetFn g = Fixture(name);
    // Box points plus the x-parts of the epigraph generators.
    std::vector<Vector> xs = oracle::LatticeBox(g.n(), -3, 3);
    for (const Vector& v : g.epi().vertices()) xs.push_back(Slice(v, 0, g.n()));
    oracle::GridFn grid;
    for (const Vector& x : xs) {
      Polyhedron slice = EvalSlice(g, x);
      grid.xs.push_back(x);
      grid.points.push_back(slice.is_empty() ? Matrix{} : slice.vertices());
    }
    Matrix dirs = FacetDirections(g);
    for (const Vector& zs : dirs) {
      const ScalarFn phi = Scalarize(g, zs);
      for (size_t i = 0; i < xs.size(); ++i) {
        const XReal exact = phi.Eval(xs[i]);
        const XReal sweep = oracle::GridScalarize(grid.points[i], zs);
        t.Expect(exact <= sweep, std::string(name) + ": scalarize bound");
        Polyhedron slice = EvalSlice(g, xs[i]);
        const bool pure = slice.is_empty() ||
                          Polyhedron::FromV(slice.dim(), {Zeros(slice.dim())},
                                            slice.rays(), slice.lines()) ==
                              g.space().cone();
        if (pure) t.Expect(exact == sweep, std::string(name) + ": scalarize");
      }
      for (const Vector& xstar : oracle::LatticeBox(g.n(), -1, 1)) {
        for (int r = -1; r <= 1; ++r) {
          const HalfSpaceValue v = Conjugate(g, xstar, zs, XReal(r));
          const XReal level =
              oracle::GridSetConjugateLevel(grid, xstar, zs, XReal(r));
          t.Expect(level <= v.alpha, std::string(name) + ": conjugate bound");
          if (!v.alpha.is_pos_inf()) {
            t.Expect(level == v.alpha, std::string(name) + ": conjugate");
          }
        }
      }
    }
  }
  io::UpperSet a = UpperFixture("res_a.json");
  io::UpperSet b = UpperFixture("res_b.json");
  std::vector<Vector> box = oracle::LatticeBox(2, -10, 10);
  Polyhedron res = Residual(a.set, b.set);
  Polyhedron sum = MinkowskiSum(a.set, b.set);
  std::vector<Vector> exact_res, exact_sum;
  for (const Vector& z : box) {
    if (ContainsPoint(res, z)) exact_res.push_back(z);
    if (ContainsPoint(sum, z)) exact_sum.push_back(z);
  }
  t.Expect(oracle::GridResidual(a.set.a(), a.set.b(), b.set.vertices(), box) ==
               exact_res,
           "residual lattice");
  t.Expect(oracle::GridMinkowski(a.set.vertices(), b.set.vertices(),
                                 a.space.cone().a(), box) == exact_sum,
           "minkowski lattice");
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Tally&)> run;
};

}  // namespace
}  // namespace svconvex

int main() {
  using svconvex::Tally;
  const std::vector<svconvex::Criterion> all = {
      {1, "extended-real operators and adjunction", 1, svconvex::Criterion1},
      {2, "half-space identities", 10, svconvex::Criterion2},
      {3, "biconjugate by two routes", 60, svconvex::Criterion3},
      {4, "conjugate of the closed convex hull", 30, svconvex::Criterion4},
      {5, "scalarization calculus", 30, svconvex::Criterion5},
      {6, "weak duality", 60, svconvex::Criterion6},
      {7, "staircase strong duality", 1, svconvex::Criterion7},
      {8, "sandwich", 1, svconvex::Criterion8},
      {9, "chain-rule gap", 1, svconvex::Criterion9},
      {10, "non-closed scalarization", 1, svconvex::Criterion10},
      {11, "oracle agreement", 30, svconvex::Criterion11},
  };
  int failed = 0;
  for (const auto& c : all) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool ok = t.failures.empty() && secs <= c.budget_s;
    if (!ok) ++failed;
    std::printf("criterion %2d %-40s %s  checks=%d time=%.2fs budget=%.0fs\n",
                c.id, c.name, ok ? "PASS" : "FAIL", t.checked, secs,
                c.budget_s);
    for (size_t i = 0; i < t.failures.size() && i < 5; ++i) {
      std::printf("    %s\n", t.failures[i].c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
