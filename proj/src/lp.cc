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

#include <cstddef>
#include <vector>

namespace svconvex {
namespace {

// Tableau over the standard-form variables
//   [x+ (n) | x- (n) | s (k) | artificials (na)]
// with one row per constraint of A x >= b rewritten as
//   sign_i * (A_i x+ - A_i x- - s_i) = sign_i * b_i,  rhs >= 0.
class Tableau {
 public:
  Tableau(const Matrix& a, const Vector& b, int n)
      : n_(n), k_(static_cast<int>(a.size())) {
    sign_.assign(static_cast<std::size_t>(k_), 1);
    std::vector<int> needs_artificial;
    for (int i = 0; i < k_; ++i) {
      if (sgn(b[static_cast<std::size_t>(i)]) <= 0) {
        sign_[static_cast<std::size_t>(i)] = -1;
      } else {
        needs_artificial.push_back(i);
      }
    }
    num_art_ = static_cast<int>(needs_artificial.size());
    cols_ = 2 * n_ + k_ + num_art_;
    rows_.assign(static_cast<std::size_t>(k_),
                 Vector(static_cast<std::size_t>(cols_ + 1), 0));
    basis_.assign(static_cast<std::size_t>(k_), -1);
    initial_basis_.assign(static_cast<std::size_t>(k_), -1);
    for (int i = 0; i < k_; ++i) {
      Vector& row = rows_[static_cast<std::size_t>(i)];
      const Rational sg = sign_[static_cast<std::size_t>(i)];
      for (int j = 0; j < n_; ++j) {
        const Rational& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (sgn(aij) == 0) continue;
        row[static_cast<std::size_t>(j)] = sg * aij;
        row[static_cast<std::size_t>(n_ + j)] = -sg * aij;
      }
      row[static_cast<std::size_t>(2 * n_ + i)] = -sg;
      row[static_cast<std::size_t>(cols_)] = sg * b[static_cast<std::size_t>(i)];
      if (sign_[static_cast<std::size_t>(i)] < 0) {
        basis_[static_cast<std::size_t>(i)] = 2 * n_ + i;
      }
    }
    for (int t = 0; t < num_art_; ++t) {
      const int i = needs_artificial[static_cast<std::size_t>(t)];
      const int col = 2 * n_ + k_ + t;
      rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 1;
      basis_[static_cast<std::size_t>(i)] = col;
    }
    initial_basis_ = basis_;
  }

  bool IsArtificial(int col) const { return col >= 2 * n_ + k_; }
  int num_art() const { return num_art_; }

  // Runs simplex iterations for the given cost vector (length cols_).
  // Returns the entering column when the problem is unbounded, else -1.
  int Optimize(const Vector& cost, bool allow_artificial) {
    while (true) {
      Vector reduced = ReducedCosts(cost);
      int entering = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allow_artificial && IsArtificial(j)) continue;
        if (sgn(reduced[static_cast<std::size_t>(j)]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return -1;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < k_; ++i) {
        const Rational& coef = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
        if (sgn(coef) <= 0) continue;
        Rational ratio = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)] / coef;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return entering;
      Pivot(leaving, entering);
    }
  }

  // Moves zero-level artificials out of the basis where possible.
  void DriveOutArtificials() {
    for (int i = 0; i < k_; ++i) {
      if (!IsArtificial(basis_[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < 2 * n_ + k_; ++j) {
        if (sgn(rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
          Pivot(i, j);
          break;
        }
      }
    }
  }

  Rational ObjectiveValue(const Vector& cost) const {
    Rational v = 0;
    for (int i = 0; i < k_; ++i) {
      v += cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] *
           rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)];
    }
    return v;
  }

  Vector PrimalX() const {
    Vector z(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < k_; ++i) {
      z[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] =
          rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)];
    }
    return SplitToX(z);
  }

  Vector RayX(int entering) const {
    Vector z(static_cast<std::size_t>(cols_), 0);
    z[static_cast<std::size_t>(entering)] = 1;
    for (int i = 0; i < k_; ++i) {
      z[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] =
          -rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
    }
    return SplitToX(z);
  }

  // Multipliers for the original rows of A x >= b: y_i = sign_i * pi_i with
  // pi = c_B^T B^{-1}; B^{-1} is read from the initial identity columns.
  Vector Duals(const Vector& cost) const {
    Vector y(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      const int col = initial_basis_[static_cast<std::size_t>(i)];
      // The slack column of a sign=-1 row is +e_i; an artificial column is +e_i.
      Rational pi = 0;
      for (int r = 0; r < k_; ++r) {
        const Rational& cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
        if (sgn(cb) == 0) continue;
        pi += cb * rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      }
      y[static_cast<std::size_t>(i)] = sign_[static_cast<std::size_t>(i)] * pi;
    }
    return y;
  }

  int cols() const { return cols_; }
  int n() const { return n_; }
  int k() const { return k_; }

 private:
  Vector ReducedCosts(const Vector& cost) const {
    Vector d = cost;
    for (int i = 0; i < k_; ++i) {
      const Rational& cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
      if (sgn(cb) == 0) continue;
      const Vector& row = rows_[static_cast<std::size_t>(i)];
      for (int j = 0; j < cols_; ++j) {
        if (sgn(row[static_cast<std::size_t>(j)]) != 0) {
          d[static_cast<std::size_t>(j)] -= cb * row[static_cast<std::size_t>(j)];
        }
      }
    }
    return d;
  }

  void Pivot(int r, int q) {
    Vector& prow = rows_[static_cast<std::size_t>(r)];
    const Rational inv = 1 / prow[static_cast<std::size_t>(q)];
    for (Rational& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    for (int i = 0; i < k_; ++i) {
      if (i == r) continue;
      Vector& row = rows_[static_cast<std::size_t>(i)];
      const Rational f = row[static_cast<std::size_t>(q)];
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (sgn(prow[static_cast<std::size_t>(j)]) != 0) {
          row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
      }
    }
    basis_[static_cast<std::size_t>(r)] = q;
  }

  Vector SplitToX(const Vector& z) const {
    Vector x(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      x[static_cast<std::size_t>(j)] =
          z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(n_ + j)];
    }
    return x;
  }

  int n_;
  int k_;
  int num_art_ = 0;
  int cols_ = 0;
  std::vector<int> sign_;
  Matrix rows_;
  std::vector<int> basis_;
  std::vector<int> initial_basis_;
};

}  // namespace

LpResult Minimize(const Matrix& a, const Vector& b, const Vector& c) {
  const int n = static_cast<int>(c.size());
  LpResult result;
  if (a.empty()) {
    if (IsZero(c)) {
      result.status = LpStatus::kOptimal;
      result.value = 0;
      result.x = Zeros(n);
      return result;
    }
    result.status = LpStatus::kUnbounded;
    result.x = Zeros(n);
    result.ray = Negate(c);
    return result;
  }
  Tableau tab(a, b, n);
  if (tab.num_art() > 0) {
    Vector phase1(static_cast<std::size_t>(tab.cols()), 0);
    for (int j = 0; j < tab.cols(); ++j) {
      if (tab.IsArtificial(j)) phase1[static_cast<std::size_t>(j)] = 1;
    }
    tab.Optimize(phase1, /*allow_artificial=*/true);
    if (sgn(tab.ObjectiveValue(phase1)) > 0) {
      result.status = LpStatus::kInfeasible;
      result.y = tab.Duals(phase1);
      return result;
    }
    tab.DriveOutArtificials();
  }
  Vector cost(static_cast<std::size_t>(tab.cols()), 0);
  for (int j = 0; j < n; ++j) {
    cost[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
    cost[static_cast<std::size_t>(n + j)] = -c[static_cast<std::size_t>(j)];
  }
  const int entering = tab.Optimize(cost, /*allow_artificial=*/false);
  result.x = tab.PrimalX();
  if (entering >= 0) {
    result.status = LpStatus::kUnbounded;
    result.ray = tab.RayX(entering);
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = tab.ObjectiveValue(cost);
  result.y = tab.Duals(cost);
  return result;
}

std::optional<Vector> FeasiblePoint(const Matrix& a, const Vector& b, int dim) {
  LpResult r = Minimize(a, b, Zeros(dim));
  if (r.status == LpStatus::kInfeasible) return std::nullopt;
  return r.x;
}

bool VerifyCertificate(const Matrix& a, const Vector& b, const Vector& c,
                       const LpResult& result) {
  const std::size_t n = c.size();
  auto feasible = [&](const Vector& x) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (Dot(a[i], x) < b[i]) return false;
    }
    return true;
  };
  auto transpose_times = [&](const Vector& y) {
    Vector out(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) out[j] += y[i] * a[i][j];
    }
    return out;
  };
  auto nonnegative = [](const Vector& y) {
    for (const Rational& v : y) {
      if (sgn(v) < 0) return false;
    }
    return true;
  };
  switch (result.status) {
    case LpStatus::kOptimal:
      return feasible(result.x) && Dot(c, result.x) == result.value &&
             nonnegative(result.y) && transpose_times(result.y) == c &&
             Dot(b, result.y) == result.value;
    case LpStatus::kInfeasible:
      return nonnegative(result.y) && IsZero(transpose_times(result.y)) &&
             sgn(Dot(b, result.y)) > 0;
    case LpStatus::kUnbounded: {
      if (!feasible(result.x) || sgn(Dot(c, result.ray)) >= 0) return false;
      for (const Vector& row : a) {
        if (sgn(Dot(row, result.ray)) < 0) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace svconvex
