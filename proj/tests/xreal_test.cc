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

#include "svconvex/xreal.h"

#include <functional>
#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "svconvex/error.h"

namespace svconvex {
namespace {

// Reals are sampled on [-kEdge, kEdge]. Grid answers are finite values in
// [-2, 2], so a sweep result beyond kEdge / 2 can only come from an infinity.
constexpr int kEdge = 40;

std::vector<XReal> Grid() {
  return {XReal::NegInf(), XReal(-1), XReal(0), XReal(1), XReal::PosInf()};
}

XReal FromSweep(std::optional<long> best, bool is_inf) {
  if (!best) return is_inf ? XReal::PosInf() : XReal::NegInf();
  if (*best <= -kEdge / 2) return XReal::NegInf();
  if (*best >= kEdge / 2) return XReal::PosInf();
  return XReal(*best);
}

// inf{r + s : a <= r, b <= s} over sampled reals.
XReal DefInfAdd(const XReal& a, const XReal& b) {
  std::optional<long> best;
  for (long r = -kEdge; r <= kEdge; ++r) {
    for (long s = -kEdge; s <= kEdge; ++s) {
      if (a <= XReal(r) && b <= XReal(s) && (!best || r + s < *best)) {
        best = r + s;
      }
    }
  }
  return FromSweep(best, true);
}

// sup{r + s : r <= a, s <= b} over sampled reals.
XReal DefSupAdd(const XReal& a, const XReal& b) {
  std::optional<long> best;
  for (long r = -kEdge; r <= kEdge; ++r) {
    for (long s = -kEdge; s <= kEdge; ++s) {
      if (XReal(r) <= a && XReal(s) <= b && (!best || r + s > *best)) {
        best = r + s;
      }
    }
  }
  return FromSweep(best, false);
}

std::vector<XReal> Candidates() {
  std::vector<XReal> out{XReal::NegInf(), XReal::PosInf()};
  for (int t = -4; t <= 4; ++t) out.emplace_back(t);
  return out;
}

// inf{t : a <= b (+inf) t}; monotone in t, so a finite candidate set that
// contains every possible finite answer is exhaustive.
XReal DefInfDiff(const XReal& a, const XReal& b) {
  XReal best = XReal::PosInf();
  for (const XReal& t : Candidates()) {
    if (a <= DefInfAdd(b, t) && t < best) best = t;
  }
  return best;
}

// sup{t : b (+sup) t <= a}.
XReal DefSupDiff(const XReal& a, const XReal& b) {
  XReal best = XReal::NegInf();
  for (const XReal& t : Candidates()) {
    if (DefSupAdd(b, t) <= a && t > best) best = t;
  }
  return best;
}

TEST(XRealTest, InfAddMatchesDefinition) {
  for (const XReal& a : Grid()) {
    for (const XReal& b : Grid()) {
      EXPECT_EQ(InfAdd(a, b), DefInfAdd(a, b)) << ToString(a) << " " << ToString(b);
      EXPECT_EQ(InfAdd(a, b), InfAdd(b, a));
    }
  }
}

TEST(XRealTest, SupAddMatchesDefinition) {
  for (const XReal& a : Grid()) {
    for (const XReal& b : Grid()) {
      EXPECT_EQ(SupAdd(a, b), DefSupAdd(a, b)) << ToString(a) << " " << ToString(b);
    }
  }
}

TEST(XRealTest, ResiduationsMatchDefinition) {
  for (const XReal& a : Grid()) {
    for (const XReal& b : Grid()) {
      EXPECT_EQ(InfDiff(a, b), DefInfDiff(a, b)) << ToString(a) << " " << ToString(b);
      EXPECT_EQ(SupDiff(a, b), DefSupDiff(a, b)) << ToString(a) << " " << ToString(b);
      EXPECT_EQ(InfDiff(a, b), SupAdd(a, Negate(b)));
      EXPECT_EQ(SupDiff(a, b), InfAdd(a, Negate(b)));
    }
  }
}

TEST(XRealTest, Adjunction) {
  for (const XReal& a : Grid()) {
    for (const XReal& b : Grid()) {
      for (const XReal& t : Grid()) {
        EXPECT_EQ(a <= InfAdd(b, t), InfDiff(a, b) <= t);
      }
    }
  }
}

TEST(XRealTest, NegationSwapsAdditions) {
  for (const XReal& a : Grid()) {
    for (const XReal& b : Grid()) {
      EXPECT_EQ(Negate(InfAdd(a, b)), SupAdd(Negate(a), Negate(b)));
    }
  }
}

TEST(XRealTest, AdditionsDistributeOverInfAndSup) {
  const std::vector<XReal> grid = Grid();
  for (const XReal& a : grid) {
    for (const XReal& b : grid) {
      for (const XReal& c : grid) {
        std::vector<XReal> pair{b, c};
        std::vector<XReal> inf_sums{InfAdd(a, b), InfAdd(a, c)};
        std::vector<XReal> sup_sums{SupAdd(a, b), SupAdd(a, c)};
        EXPECT_EQ(InfAdd(a, InfOf(pair)), InfOf(inf_sums));
        EXPECT_EQ(SupAdd(a, SupOf(pair)), SupOf(sup_sums));
      }
    }
  }
}

TEST(XRealTest, Examples) {
  EXPECT_EQ(InfAdd(XReal::PosInf(), XReal::NegInf()), XReal::PosInf());
  EXPECT_EQ(InfAdd(XReal(Rational(3, 2)), XReal(Rational(-1, 2))), XReal(1));
  EXPECT_EQ(InfAdd(XReal::NegInf(), XReal(7)), XReal::NegInf());
  EXPECT_EQ(SupAdd(XReal::NegInf(), XReal::PosInf()), XReal::NegInf());
  EXPECT_EQ(SupAdd(XReal(2), XReal(2)), XReal(4));
  EXPECT_EQ(SupAdd(XReal::PosInf(), XReal(5)), XReal::PosInf());
  EXPECT_EQ(InfDiff(XReal(5), XReal(3)), XReal(2));
  EXPECT_EQ(InfDiff(XReal(4), XReal::NegInf()), XReal::PosInf());
  EXPECT_EQ(InfDiff(XReal::NegInf(), XReal::PosInf()), XReal::NegInf());
  EXPECT_EQ(SupDiff(XReal(5), XReal(3)), XReal(2));
  EXPECT_EQ(SupDiff(XReal::PosInf(), XReal::PosInf()), XReal::PosInf());
  EXPECT_EQ(SupDiff(XReal(3), XReal::PosInf()), XReal::NegInf());
  EXPECT_EQ(Scale(0, XReal::PosInf()), XReal(0));
  EXPECT_EQ(Scale(-1, XReal::PosInf()), XReal::NegInf());
  EXPECT_EQ(Scale(2, XReal(Rational(3, 2))), XReal(3));
  EXPECT_THROW(Scale(Rational(-1, 2), XReal(1)), Error);
  EXPECT_EQ(InfOf({}), XReal::PosInf());
  EXPECT_EQ(SupOf({}), XReal::NegInf());
  std::vector<XReal> mixed{XReal(3), XReal::NegInf(), XReal(7)};
  EXPECT_EQ(InfOf(mixed), XReal::NegInf());
}

TEST(XRealTest, ParseAndPrint) {
  EXPECT_EQ(ToString(ParseXReal("+inf")), "+inf");
  EXPECT_EQ(ToString(ParseXReal("-inf")), "-inf");
  EXPECT_EQ(ToString(ParseXReal("6/4")), "3/2");
  EXPECT_EQ(ToString(ParseXReal("-2")), "-2");
  EXPECT_THROW(ParseXReal("1/0"), Error);
  EXPECT_THROW(ParseXReal("abc"), Error);
}

}  // namespace
}  // namespace svconvex
