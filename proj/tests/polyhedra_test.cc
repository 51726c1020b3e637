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

#include "svconvex/polyhedra.h"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "svconvex/double_description.h"
#include "svconvex/error.h"
#include "test_util.h"

namespace svconvex {
namespace {

using testing::M;
using testing::Q;
using testing::Random;
using testing::Show;
using testing::V;

Polyhedron Orthant2() { return Polyhedron::FromH(2, M({{1, 0}, {0, 1}}), V({0, 0})); }

// {p} + Q^2_+.
Polyhedron ShiftedOrthant(const Vector& p) {
  return Polyhedron::FromV(2, {p}, M({{1, 0}, {0, 1}}));
}

TEST(DoubleDescriptionTest, Orthant) {
  ConeGenerators g = DoubleDescription(2, M({{1, 0}, {0, 1}}));
  EXPECT_TRUE(g.lines.empty());
  std::sort(g.rays.begin(), g.rays.end(), LexLess);
  EXPECT_EQ(g.rays, M({{0, 1}, {1, 0}}));
}

TEST(DoubleDescriptionTest, HalfSpaceKeepsLines) {
  ConeGenerators g = DoubleDescription(3, M({{1, 1, 0}}));
  EXPECT_EQ(g.lines.size(), 2u);
  EXPECT_EQ(g.rays.size(), 1u);
}

TEST(DoubleDescriptionTest, PointedConeOverSquare) {
  // Cone over the square [-1,1]^2 at height 1.
  Matrix rows = M({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}});
  ConeGenerators g = DoubleDescription(3, rows);
  EXPECT_TRUE(g.lines.empty());
  EXPECT_EQ(g.rays.size(), 4u);
}

TEST(PolyhedraTest, ToVrepOrthant) {
  Polyhedron p = Orthant2();
  EXPECT_EQ(p.vertices(), M({{0, 0}}));
  EXPECT_EQ(p.rays(), M({{0, 1}, {1, 0}}));
}

TEST(PolyhedraTest, ToHrepFromVertices) {
  Polyhedron p = Polyhedron::FromV(2, M({{0, 1}, {1, 0}}), M({{1, 0}, {0, 1}}));
  Polyhedron expected =
      Polyhedron::FromH(2, M({{1, 0}, {0, 1}, {1, 1}}), V({0, 0, 1}));
  EXPECT_EQ(p, expected) << Show(p);
  EXPECT_EQ(p.in_a(), M({{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(p.in_b(), V({0, 0, 1}));
}

TEST(PolyhedraTest, EmptyFromInfeasibleRows) {
  Polyhedron p = Polyhedron::FromH(1, M({{1}, {-1}}), V({1, 0}));
  EXPECT_TRUE(p.is_empty());
  EXPECT_TRUE(p.vertices().empty());
  EXPECT_EQ(p.a(), M({{0}}));
  EXPECT_EQ(p.b(), V({1}));
}

TEST(PolyhedraTest, CanonicalScaling) {
  Polyhedron p = Polyhedron::FromH(1, M({{1}, {2}}), V({0, 0}));
  Polyhedron q = Polyhedron::FromH(1, M({{1}}), V({0}));
  EXPECT_EQ(p, q);
  Polyhedron r = Polyhedron::FromH(2, M({{Q(1, 2), Q(3, 2)}}), V({Q(1, 3)}));
  EXPECT_EQ(r.in_a(), M({{1, 3}}));
  EXPECT_EQ(r.in_b(), V({Q(2, 3)}));
}

TEST(PolyhedraTest, EqualitiesAreEchelon) {
  // x + y = 1, 2x + 2y >= 2 (redundant), x >= 0.
  Polyhedron p = Polyhedron::FromHE(2, M({{2, 2}, {1, 0}}), V({2, 0}),
                                    M({{1, 1}}), V({1}));
  EXPECT_EQ(p.eq_a(), M({{1, 1}}));
  EXPECT_EQ(p.eq_b(), V({1}));
  ASSERT_EQ(p.in_a().size(), 1u);
  // x >= 0 reduced modulo x + y = 1 becomes -y >= -1.
  EXPECT_EQ(p.in_a(), M({{0, -1}}));
  EXPECT_EQ(p.in_b(), V({-1}));
}

TEST(PolyhedraTest, UniverseAndPoint) {
  Polyhedron u = Polyhedron::Universe(3);
  EXPECT_TRUE(u.is_universe());
  EXPECT_EQ(u, Polyhedron::FromH(3, {}, {}));
  Polyhedron pt = Polyhedron::Point(V({1, Q(1, 2)}));
  EXPECT_EQ(pt.eq_a().size(), 2u);
  EXPECT_TRUE(ContainsPoint(pt, V({1, Q(1, 2)})));
}

TEST(PolyhedraTest, ProjectExamples) {
  // z >= x, z >= -x in (x, z), keep x.
  Polyhedron p = Polyhedron::FromH(2, M({{-1, 1}, {1, 1}}), V({0, 0}));
  EXPECT_TRUE(Project(p, {0}).is_universe());
  // 0 <= x <= 1, z = x, keep z.
  Polyhedron q = Polyhedron::FromHE(2, M({{1, 0}, {-1, 0}}), V({0, -1}),
                                    M({{1, -1}}), V({0}));
  EXPECT_EQ(Project(q, {1}), Polyhedron::FromH(1, M({{1}, {-1}}), V({0, -1})));
  // Unit cube, keep the first two coordinates.
  Polyhedron cube = Polyhedron::FromH(
      3, M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
      V({0, 0, 0, -1, -1, -1}));
  Polyhedron square = Polyhedron::FromH(
      2, M({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), V({0, 0, -1, -1}));
  EXPECT_EQ(Project(cube, {0, 1}), square);
  EXPECT_EQ(ProjectFromGenerators(cube, {0, 1}), square);
}

TEST(PolyhedraTest, ProjectReordersColumns) {
  Polyhedron p = Polyhedron::FromH(3, M({{1, 0, 0}, {0, 0, 1}}), V({1, 2}));
  Polyhedron q = Project(p, {2, 0});
  EXPECT_EQ(q, Polyhedron::FromH(2, M({{1, 0}, {0, 1}}), V({2, 1})));
}

TEST(PolyhedraTest, SupportExamples) {
  Polyhedron box = Polyhedron::FromH(
      2, M({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), V({-1, -1, -1, -1}));
  EXPECT_EQ(Support(box, V({1, 1})), XReal(2));
  EXPECT_EQ(Support(Polyhedron::Empty(2), V({1, 1})), XReal::NegInf());
  EXPECT_EQ(Support(ShiftedOrthant(V({1, 2})), V({0, -1})), XReal(-2));
  EXPECT_EQ(Support(ShiftedOrthant(V({1, 2})), V({0, 1})), XReal::PosInf());
}

TEST(PolyhedraTest, SetOperationExamples) {
  Polyhedron half = Polyhedron::FromH(2, M({{0, 1}}), V({0}));
  EXPECT_EQ(MinkowskiSum(ShiftedOrthant(V({1, 2})), half),
            Polyhedron::FromH(2, M({{0, 1}}), V({2})));
  EXPECT_TRUE(MinkowskiSum(half, Polyhedron::Empty(2)).is_empty());
  EXPECT_EQ(HullUnion(ShiftedOrthant(V({0, 1})), ShiftedOrthant(V({1, 0}))),
            Polyhedron::FromH(2, M({{1, 0}, {0, 1}, {1, 1}}), V({0, 0, 1})));
  EXPECT_TRUE(Contains(Orthant2(), ShiftedOrthant(V({1, 1}))));
  EXPECT_FALSE(Contains(ShiftedOrthant(V({1, 1})), Orthant2()));
}

TEST(PolyhedraTest, PolarConeExamples) {
  Polyhedron polar = PolarCone(Orthant2());
  EXPECT_EQ(polar.rays(), M({{-1, 0}, {0, -1}}));
  EXPECT_TRUE(PolarCone(Polyhedron::Point(V({0, 0}))).is_universe());
  Polyhedron ray = ConeFromRays(2, M({{1, 1}}));
  EXPECT_EQ(PolarCone(ray), Polyhedron::FromH(2, M({{-1, -1}}), V({0})));
  EXPECT_EQ(PolarCone(PolarCone(ray)), ray);
  EXPECT_THROW(PolarCone(ShiftedOrthant(V({1, 1}))), Error);
}

TEST(PolyhedraTest, RecessionContainsExamples) {
  EXPECT_TRUE(RecessionContains(ShiftedOrthant(V({1, 2})), Orthant2()));
  Polyhedron box = Polyhedron::FromH(
      2, M({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), V({0, 0, -1, -1}));
  EXPECT_FALSE(RecessionContains(box, Orthant2()));
  EXPECT_TRUE(RecessionContains(Polyhedron::Empty(2), Orthant2()));
}

TEST(PolyhedraTest, ImageAndPreimage) {
  // Segment [0,1] in Q mapped by x -> (x, 2x).
  Polyhedron seg = Polyhedron::FromH(1, M({{1}, {-1}}), V({0, -1}));
  Polyhedron img = Image(seg, M({{1}, {2}}), 2);
  EXPECT_EQ(img, Polyhedron::FromV(2, M({{0, 0}, {1, 2}}), {}));
  Polyhedron back = Preimage(img, M({{1}, {2}}), V({0, 0}), 1);
  EXPECT_EQ(back, seg);
  Polyhedron shifted = Preimage(seg, M({{1}}), V({1}), 1);
  EXPECT_EQ(shifted, Polyhedron::FromH(1, M({{1}, {-1}}), V({-1, 0})));
}

// Vertices of a bounded H-polytope by trying every square subsystem.
Matrix BruteForceVertices(const Polyhedron& p) {
  const Matrix a = p.a();
  const Vector b = p.b();
  const int d = p.dim();
  Matrix out;
  std::vector<int> pick(static_cast<std::size_t>(d));
  std::vector<bool> mask(a.size(), false);
  std::fill(mask.begin(), mask.begin() + std::min<std::size_t>(a.size(), d), true);
  if (static_cast<int>(a.size()) < d) return out;
  std::sort(mask.begin(), mask.end(), std::greater<bool>());
  do {
    Matrix sa;
    Vector sb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask[i]) {
        sa.push_back(a[i]);
        sb.push_back(b[i]);
      }
    }
    auto x = testing::SolveSquare(sa, sb);
    if (x && ContainsPoint(p, *x)) out.push_back(*x);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end(), LexLess);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(PolyhedraPropertyTest, VerticesMatchBruteForceOnPolytopes) {
  Random rnd(11);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = rnd.Int(1, 3);
    Matrix a;
    Vector b;
    for (int j = 0; j < d; ++j) {
      a.push_back(UnitVector(d, j));
      b.push_back(-3);
      a.push_back(Negate(UnitVector(d, j)));
      b.push_back(-3);
    }
    const int extra = rnd.Int(0, 5);
    for (int i = 0; i < extra; ++i) {
      a.push_back(rnd.Vec(d, -3, 3));
      b.push_back(rnd.Rat(-3, 3));
    }
    Polyhedron p = Polyhedron::FromH(d, a, b);
    if (p.is_empty()) continue;
    EXPECT_EQ(p.vertices(), BruteForceVertices(p)) << Show(p);
    EXPECT_TRUE(p.rays().empty());
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(PolyhedraPropertyTest, RoundTrip) {
  Random rnd(12);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = rnd.Int(1, 4);
    Polyhedron p = rnd.HPoly(d, 8);
    Polyhedron from_v = Polyhedron::FromV(d, p.vertices(), p.rays(), p.lines());
    Polyhedron from_h = Polyhedron::FromH(d, p.a(), p.b());
    EXPECT_EQ(p, from_v) << Show(p) << " vs " << Show(from_v);
    EXPECT_EQ(p, from_h);
    EXPECT_EQ(p.vertices(), from_h.vertices());
    EXPECT_EQ(p.rays(), from_h.rays());
    for (const Vector& v : p.vertices()) EXPECT_TRUE(ContainsPoint(p, v));
  }
}

TEST(PolyhedraPropertyTest, CanonicalRowsAreIrredundantByLp) {
  Random rnd(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = rnd.Int(1, 4);
    Polyhedron p = rnd.HPoly(d, 8);
    if (p.is_empty()) continue;
    // The LP route keeps every canonical row of a full-dimensional set.
    std::vector<int> keep = IrredundantRowsByLp(p.in_a(), p.in_b());
    if (p.eq_a().empty()) {
      EXPECT_EQ(keep.size(), p.in_a().size()) << Show(p);
    }
    // Duplicated rows collapse to one per facet.
    Matrix doubled = p.in_a();
    Vector doubled_b = p.in_b();
    doubled.insert(doubled.end(), p.in_a().begin(), p.in_a().end());
    doubled_b.insert(doubled_b.end(), p.in_b().begin(), p.in_b().end());
    if (p.eq_a().empty()) {
      EXPECT_EQ(IrredundantRowsByLp(doubled, doubled_b).size(),
                p.in_a().size());
    }
  }
}

TEST(PolyhedraPropertyTest, SupportOfMinkowskiSum) {
  Random rnd(14);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = rnd.Int(1, 3);
    Polyhedron p = rnd.VPoly(d, 4, 2);
    Polyhedron q = rnd.Coin(15) ? Polyhedron::Empty(d) : rnd.VPoly(d, 4, 2);
    Polyhedron sum = MinkowskiSum(p, q);
    for (int s = 0; s < 4; ++s) {
      Vector w = rnd.Vec(d, -3, 3);
      const XReal lhs = Support(sum, w);
      if (q.is_empty()) {
        EXPECT_EQ(lhs, XReal::NegInf());
      } else {
        EXPECT_EQ(lhs, InfAdd(Support(p, w), Support(q, w)));
      }
      EXPECT_EQ(lhs, SupportFromGenerators(sum, w));
    }
  }
}

TEST(PolyhedraPropertyTest, LatticeOperations) {
  Random rnd(15);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = rnd.Int(1, 3);
    Polyhedron p = rnd.HPoly(d, 6);
    Polyhedron q = rnd.HPoly(d, 6);
    Polyhedron join = HullUnion(p, q);
    Polyhedron meet = Intersect(p, q);
    EXPECT_TRUE(Contains(join, p));
    EXPECT_TRUE(Contains(join, q));
    EXPECT_TRUE(Contains(p, meet));
    EXPECT_TRUE(Contains(q, meet));
    EXPECT_EQ(Contains(p, q) && Contains(q, p), p == q);
  }
}

TEST(PolyhedraPropertyTest, ProjectionMatchesGeneratorImage) {
  Random rnd(16);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = rnd.Int(2, 4);
    Polyhedron p = rnd.HPoly(d, 7);
    std::vector<int> keep;
    for (int j = 0; j < d; ++j) {
      if (rnd.Coin(50)) keep.push_back(j);
    }
    std::shuffle(keep.begin(), keep.end(), rnd.engine());
    EXPECT_EQ(Project(p, keep), ProjectFromGenerators(p, keep)) << Show(p);
  }
}

TEST(PolyhedraPropertyTest, PolarIsInvolutive) {
  Random rnd(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = rnd.Int(1, 3);
    Matrix rays;
    const int k = rnd.Int(0, 4);
    for (int i = 0; i < k; ++i) rays.push_back(rnd.Vec(d, -2, 2));
    Polyhedron cone = ConeFromRays(d, rays);
    EXPECT_EQ(PolarCone(PolarCone(cone)), cone);
  }
}

}  // namespace
}  // namespace svconvex
