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

#include "svconvex/rational.h"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <utility>

#include "svconvex/error.h"

namespace svconvex {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const std::size_t slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) {
    throw Error(ErrorCode::kRational,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kRational,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string ToString(const Rational& q) { return q.get_str(10); }

Vector Zeros(int dim) { return Vector(static_cast<std::size_t>(dim), 0); }

Vector UnitVector(int dim, int index) {
  Vector v = Zeros(dim);
  v[static_cast<std::size_t>(index)] = 1;
  return v;
}

Vector ParseVector(std::string_view csv) {
  Vector out;
  if (Trim(csv).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(ParseRational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational Dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

bool IsZero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Vector Add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector Sub(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector Scale(const Rational& t, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

Vector Negate(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Vector Concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vector Slice(const Vector& v, int begin, int end) {
  return Vector(v.begin() + begin, v.begin() + end);
}

void MakePrimitive(Vector& v) {
  mpz_class lcm_den = 1;
  for (const Rational& q : v) {
    if (sgn(q) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                             q.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const Rational& q : v) {
    if (sgn(q) == 0) continue;
    mpz_class n = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return;
  Rational factor(lcm_den, g);
  factor.canonicalize();
  for (Rational& q : v) {
    if (sgn(q) != 0) q *= factor;
  }
}

Vector Primitive(Vector v) {
  MakePrimitive(v);
  return v;
}

Matrix Transpose(const Matrix& m, int cols) {
  Matrix out(static_cast<std::size_t>(cols), Zeros(static_cast<int>(m.size())));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) {
      out[j][i] = m[i][j];
    }
  }
  return out;
}

Vector Apply(const Matrix& m, const Vector& v) {
  Vector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = Dot(m[i], v);
  return out;
}

Matrix Identity(int dim) {
  Matrix out;
  for (int i = 0; i < dim; ++i) out.push_back(UnitVector(dim, i));
  return out;
}

int Rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

bool LexLess(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace svconvex
