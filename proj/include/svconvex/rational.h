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

// Exact rational scalars and the small dense vector/matrix helpers shared by
// every module. All geometry in this library is carried out over Q.

#ifndef SVCONVEX_RATIONAL_H_
#define SVCONVEX_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace svconvex {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
// Row-major dense matrix; every row has the same length.
using Matrix = std::vector<Vector>;

// Accepts "p", "-p", "+p" and "p/q" with q != 0. Throws Error(kRational).
Rational ParseRational(std::string_view text);
std::string ToString(const Rational& q);

Vector Zeros(int dim);
Vector UnitVector(int dim, int index);
Vector ParseVector(std::string_view csv);  // "1,-1/2,0"

Rational Dot(const Vector& a, const Vector& b);
bool IsZero(const Vector& v);
Vector Add(const Vector& a, const Vector& b);
Vector Sub(const Vector& a, const Vector& b);
Vector Scale(const Rational& t, const Vector& v);
Vector Negate(const Vector& v);
Vector Concat(const Vector& a, const Vector& b);
Vector Slice(const Vector& v, int begin, int end);

// Scales v by a positive rational so its entries become coprime integers.
// Zero vectors are left unchanged.
void MakePrimitive(Vector& v);
Vector Primitive(Vector v);

Matrix Transpose(const Matrix& m, int cols);
Vector Apply(const Matrix& m, const Vector& v);
Matrix Identity(int dim);
// Rank by exact Gaussian elimination.
int Rank(Matrix m);

// Lexicographic order on equal-length vectors.
bool LexLess(const Vector& a, const Vector& b);

}  // namespace svconvex

#endif  // SVCONVEX_RATIONAL_H_
