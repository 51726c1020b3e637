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

#include "svconvex/lp.h"

#include <random>

#include <gtest/gtest.h>

namespace svconvex {
namespace {

Matrix M(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix out;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

Vector V(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TEST(LpTest, BoxMinimum) {
  // 0 <= x, y <= 2; minimize -x - y.
  Matrix a = M({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  Vector b = V({0, 0, -2, -2});
  Vector c = V({-1, -1});
  LpResult r = Minimize(a, b, c);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, -4);
  EXPECT_TRUE(VerifyCertificate(a, b, c, r));
}

TEST(LpTest, Infeasible) {
  Matrix a = M({{1}, {-1}});
  Vector b = V({1, 0});
  Vector c = V({0});
  LpResult r = Minimize(a, b, c);
  ASSERT_EQ(r.status, LpStatus::kInfeasible);
  EXPECT_TRUE(VerifyCertificate(a, b, c, r));
  EXPECT_FALSE(FeasiblePoint(a, b, 1).has_value());
}

TEST(LpTest, Unbounded) {
  Matrix a = M({{1, 1}});
  Vector b = V({1});
  Vector c = V({1, 0});
  LpResult r = Minimize(a, b, c);
  ASSERT_EQ(r.status, LpStatus::kUnbounded);
  EXPECT_TRUE(VerifyCertificate(a, b, c, r));
}

TEST(LpTest, NoConstraints) {
  LpResult r = Minimize({}, {}, V({0, 0}));
  EXPECT_EQ(r.status, LpStatus::kOptimal);
  r = Minimize({}, {}, V({0, 1}));
  EXPECT_EQ(r.status, LpStatus::kUnbounded);
  EXPECT_TRUE(VerifyCertificate({}, {}, V({0, 1}), r));
}

TEST(LpTest, DegenerateEqualityPair) {
  // x + y = 1 written as two inequalities, plus x >= 0, y >= 0.
  Matrix a = M({{1, 1}, {-1, -1}, {1, 0}, {0, 1}, {2, 2}});
  Vector b = V({1, -1, 0, 0, 2});
  Vector c = V({1, 3});
  LpResult r = Minimize(a, b, c);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(VerifyCertificate(a, b, c, r));
}

TEST(LpTest, RandomCertificates) {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> rows(0, 8);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = dim(rng);
    const int k = rows(rng);
    Matrix a(static_cast<std::size_t>(k), Vector(static_cast<std::size_t>(n)));
    Vector b(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = coef(rng);
      b[i] = Rational(coef(rng), 1 + (trial % 3));
      b[i].canonicalize();
    }
    Vector c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c[j] = coef(rng);
    LpResult r = Minimize(a, b, c);
    ++counts[static_cast<int>(r.status)];
    EXPECT_TRUE(VerifyCertificate(a, b, c, r))
        << "trial " << trial << " status " << static_cast<int>(r.status);
  }
  // The generator reaches all three outcomes.
  EXPECT_GT(counts[0], 0);
  EXPECT_GT(counts[1], 0);
  EXPECT_GT(counts[2], 0);
}

}  // namespace
}  // namespace svconvex
