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
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "svconvex/double_description.h"
#include "svconvex/error.h"
#include "svconvex/lp.h"

namespace svconvex {
namespace {

using std::size_t;

void CheckWidth(const Matrix& rows, size_t width, const char* what) {
  for (const Vector& r : rows) {
    if (r.size() != width) {
      throw Error(ErrorCode::kDimension,
                  std::string(what) + ": row of length " +
                      std::to_string(r.size()) + ", expected " +
                      std::to_string(width));
    }
  }
}

// Reduced row echelon form; zero rows dropped. `pivots` receives the pivot
// column of each returned row. Only the first `pivot_cols` columns may be
// pivots.
Matrix Rref(Matrix m, size_t pivot_cols, std::vector<size_t>* pivots) {
  pivots->clear();
  size_t rank = 0;
  for (size_t c = 0; c < pivot_cols && rank < m.size(); ++c) {
    size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    m[rank] = Scale(1 / m[rank][c], m[rank]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      m[r] = Sub(m[r], Scale(m[r][c], m[rank]));
    }
    pivots->push_back(c);
    ++rank;
  }
  m.resize(rank);
  return m;
}

// Positive multiple of v whose first `prefix` entries are coprime integers.
// If that prefix is zero the whole vector is made primitive instead.
void MakePrefixPrimitive(Vector& v, size_t prefix) {
  Vector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(prefix));
  if (IsZero(head)) {
    MakePrimitive(v);
    return;
  }
  size_t lead = 0;
  while (sgn(head[lead]) == 0) ++lead;
  const Rational before = head[lead];
  MakePrimitive(head);
  const Rational factor = head[lead] / before;
  for (Rational& q : v) q *= factor;
}

// Subtracts multiples of echelon rows so that v vanishes on their pivots.
void ReduceModulo(Vector& v, const Matrix& basis,
                  const std::vector<size_t>& pivots) {
  for (size_t i = 0; i < basis.size(); ++i) {
    const Rational f = v[pivots[i]] / basis[i][pivots[i]];
    if (sgn(f) != 0) v = Sub(v, Scale(f, basis[i]));
  }
}

void SortUnique(Matrix& rows) {
  std::sort(rows.begin(), rows.end(), LexLess);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

struct VRep {
  Matrix vertices, rays, lines;
};

struct HRep {
  Matrix eq_a;
  Vector eq_b;
  Matrix in_a;
  Vector in_b;
};

// Brings a V-rep into the canonical shape documented in the header.
void NormalizeV(int dim, VRep& v) {
  std::vector<size_t> pivots;
  v.lines = Rref(v.lines, static_cast<size_t>(dim), &pivots);
  for (Vector& l : v.lines) MakePrefixPrimitive(l, static_cast<size_t>(dim));
  for (Vector& p : v.vertices) ReduceModulo(p, v.lines, pivots);
  Matrix rays;
  for (Vector r : v.rays) {
    ReduceModulo(r, v.lines, pivots);
    if (IsZero(r)) continue;
    MakePrimitive(r);
    rays.push_back(std::move(r));
  }
  v.rays = std::move(rays);
  SortUnique(v.vertices);
  SortUnique(v.rays);
}

// Minimal V-rep of {A x >= b, E x = f}, or nothing if the set is empty.
std::optional<VRep> VFromH(int dim, const Matrix& a, const Vector& b,
                           const Matrix& e, const Vector& f) {
  Matrix cone;
  auto lift = [&](const Vector& row, const Rational& rhs, bool negate) {
    Vector h = row;
    h.push_back(-rhs);
    cone.push_back(negate ? Negate(h) : h);
  };
  for (size_t i = 0; i < e.size(); ++i) {
    lift(e[i], f[i], false);
    lift(e[i], f[i], true);
  }
  for (size_t i = 0; i < a.size(); ++i) lift(a[i], b[i], false);
  cone.push_back(UnitVector(dim + 1, dim));
  ConeGenerators gens = DoubleDescription(dim + 1, cone);
  VRep out;
  const size_t t = static_cast<size_t>(dim);
  for (const Vector& r : gens.rays) {
    Vector x = Slice(r, 0, dim);
    if (sgn(r[t]) > 0) {
      out.vertices.push_back(Scale(1 / r[t], x));
    } else {
      out.rays.push_back(std::move(x));
    }
  }
  if (out.vertices.empty()) return std::nullopt;
  for (const Vector& l : gens.lines) out.lines.push_back(Slice(l, 0, dim));
  NormalizeV(dim, out);
  return out;
}

// Canonical H-rep of a nonempty V-rep.
HRep HFromV(int dim, const VRep& v) {
  Matrix cone;
  for (const Vector& p : v.vertices) {
    Vector row = p;
    row.push_back(-1);
    cone.push_back(std::move(row));
  }
  for (const Vector& r : v.rays) cone.push_back(Concat(r, Vector{0}));
  for (const Vector& l : v.lines) {
    cone.push_back(Concat(l, Vector{0}));
    cone.push_back(Concat(Negate(l), Vector{0}));
  }
  ConeGenerators gens = DoubleDescription(dim + 1, cone);
  const size_t d = static_cast<size_t>(dim);
  HRep out;
  std::vector<size_t> pivots;
  Matrix eq = Rref(gens.lines, d, &pivots);
  for (Vector& row : eq) {
    MakePrefixPrimitive(row, d);
    out.eq_b.push_back(row[d]);
    row.pop_back();
    out.eq_a.push_back(std::move(row));
  }
  Matrix eq_full;
  for (size_t i = 0; i < out.eq_a.size(); ++i) {
    eq_full.push_back(Concat(out.eq_a[i], Vector{out.eq_b[i]}));
  }
  Matrix ineq;
  for (Vector r : gens.rays) {
    ReduceModulo(r, eq_full, pivots);
    if (IsZero(Slice(r, 0, dim))) continue;  // the trivial row 0 >= -1
    MakePrefixPrimitive(r, d);
    ineq.push_back(std::move(r));
  }
  SortUnique(ineq);
  for (Vector& row : ineq) {
    out.in_b.push_back(row[d]);
    row.pop_back();
    out.in_a.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Polyhedron Polyhedron::FromH(int dim, const Matrix& a, const Vector& b) {
  return FromHE(dim, a, b, {}, {});
}

Polyhedron Polyhedron::FromHE(int dim, const Matrix& a, const Vector& b,
                              const Matrix& e, const Vector& f) {
  if (dim < 0) throw Error(ErrorCode::kDimension, "negative dimension");
  CheckWidth(a, static_cast<size_t>(dim), "inequality");
  CheckWidth(e, static_cast<size_t>(dim), "equality");
  if (a.size() != b.size() || e.size() != f.size()) {
    throw Error(ErrorCode::kDimension, "row count and right-hand side differ");
  }
  std::optional<VRep> v = VFromH(dim, a, b, e, f);
  if (!v) return Empty(dim);
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = false;
  p.vertices_ = std::move(v->vertices);
  p.rays_ = std::move(v->rays);
  p.lines_ = std::move(v->lines);
  p.CanonicalizeFromV();
  return p;
}

Polyhedron Polyhedron::FromV(int dim, const Matrix& vertices,
                             const Matrix& rays, const Matrix& lines) {
  if (dim < 0) throw Error(ErrorCode::kDimension, "negative dimension");
  CheckWidth(vertices, static_cast<size_t>(dim), "vertex");
  CheckWidth(rays, static_cast<size_t>(dim), "ray");
  CheckWidth(lines, static_cast<size_t>(dim), "line");
  if (vertices.empty()) return Empty(dim);
  HRep h = HFromV(dim, VRep{vertices, rays, lines});
  return FromHE(dim, h.in_a, h.in_b, h.eq_a, h.eq_b);
}

Polyhedron Polyhedron::Empty(int dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = true;
  return p;
}

Polyhedron Polyhedron::Universe(int dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = false;
  p.vertices_ = {Zeros(dim)};
  p.lines_ = Identity(dim);
  return p;
}

Polyhedron Polyhedron::Point(const Vector& x) {
  Polyhedron p;
  p.dim_ = static_cast<int>(x.size());
  p.empty_ = false;
  p.vertices_ = {x};
  p.CanonicalizeFromV();
  return p;
}

void Polyhedron::CanonicalizeFromV() {
  HRep h = HFromV(dim_, VRep{vertices_, rays_, lines_});
  eq_a_ = std::move(h.eq_a);
  eq_b_ = std::move(h.eq_b);
  in_a_ = std::move(h.in_a);
  in_b_ = std::move(h.in_b);
}

Matrix Polyhedron::a() const {
  if (empty_) return {Zeros(dim_)};
  Matrix out;
  for (const Vector& row : eq_a_) {
    out.push_back(row);
    out.push_back(Negate(row));
  }
  out.insert(out.end(), in_a_.begin(), in_a_.end());
  return out;
}

Vector Polyhedron::b() const {
  if (empty_) return {Rational(1)};
  Vector out;
  for (const Rational& q : eq_b_) {
    out.push_back(q);
    out.push_back(-q);
  }
  out.insert(out.end(), in_b_.begin(), in_b_.end());
  return out;
}

Matrix Polyhedron::AllRays() const {
  Matrix out = rays_;
  for (const Vector& l : lines_) {
    out.push_back(l);
    out.push_back(Negate(l));
  }
  return out;
}

bool operator==(const Polyhedron& p, const Polyhedron& q) {
  return p.dim_ == q.dim_ && p.empty_ == q.empty_ && p.eq_a_ == q.eq_a_ &&
         p.eq_b_ == q.eq_b_ && p.in_a_ == q.in_a_ && p.in_b_ == q.in_b_;
}

bool ContainsPoint(const Polyhedron& p, const Vector& x) {
  if (static_cast<int>(x.size()) != p.dim()) {
    throw Error(ErrorCode::kDimension, "point dimension mismatch");
  }
  if (p.is_empty()) return false;
  for (size_t i = 0; i < p.eq_a().size(); ++i) {
    if (Dot(p.eq_a()[i], x) != p.eq_b()[i]) return false;
  }
  for (size_t i = 0; i < p.in_a().size(); ++i) {
    if (Dot(p.in_a()[i], x) < p.in_b()[i]) return false;
  }
  return true;
}

bool Contains(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorCode::kDimension, "containment between different spaces");
  }
  if (q.is_empty()) return true;
  if (p.is_empty()) return false;
  for (const Vector& v : q.vertices()) {
    if (!ContainsPoint(p, v)) return false;
  }
  for (const Vector& r : q.AllRays()) {
    for (const Vector& row : p.eq_a()) {
      if (sgn(Dot(row, r)) != 0) return false;
    }
    for (const Vector& row : p.in_a()) {
      if (sgn(Dot(row, r)) < 0) return false;
    }
  }
  return true;
}

namespace {

void CheckSameDim(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorCode::kDimension, "operands live in different spaces");
  }
}

Matrix AppendRows(Matrix a, const Matrix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vector AppendRows(Vector a, const Vector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Polyhedron Intersect(const Polyhedron& p, const Polyhedron& q) {
  CheckSameDim(p, q);
  if (p.is_empty() || q.is_empty()) return Polyhedron::Empty(p.dim());
  return Polyhedron::FromHE(p.dim(), AppendRows(p.in_a(), q.in_a()),
                            AppendRows(p.in_b(), q.in_b()),
                            AppendRows(p.eq_a(), q.eq_a()),
                            AppendRows(p.eq_b(), q.eq_b()));
}

Polyhedron MinkowskiSum(const Polyhedron& p, const Polyhedron& q) {
  CheckSameDim(p, q);
  if (p.is_empty() || q.is_empty()) return Polyhedron::Empty(p.dim());
  Matrix vertices;
  for (const Vector& u : p.vertices()) {
    for (const Vector& v : q.vertices()) vertices.push_back(Add(u, v));
  }
  return Polyhedron::FromV(p.dim(), vertices, AppendRows(p.rays(), q.rays()),
                           AppendRows(p.lines(), q.lines()));
}

Polyhedron HullUnion(const Polyhedron& p, const Polyhedron& q) {
  CheckSameDim(p, q);
  if (p.is_empty()) return q;
  if (q.is_empty()) return p;
  return Polyhedron::FromV(p.dim(), AppendRows(p.vertices(), q.vertices()),
                           AppendRows(p.rays(), q.rays()),
                           AppendRows(p.lines(), q.lines()));
}

Polyhedron Product(const Polyhedron& p, const Polyhedron& q) {
  const int dim = p.dim() + q.dim();
  if (p.is_empty() || q.is_empty()) return Polyhedron::Empty(dim);
  auto left = [&](const Vector& v) { return Concat(v, Zeros(q.dim())); };
  auto right = [&](const Vector& v) { return Concat(Zeros(p.dim()), v); };
  Matrix a, e;
  Vector b, f;
  for (size_t i = 0; i < p.in_a().size(); ++i) {
    a.push_back(left(p.in_a()[i]));
    b.push_back(p.in_b()[i]);
  }
  for (size_t i = 0; i < q.in_a().size(); ++i) {
    a.push_back(right(q.in_a()[i]));
    b.push_back(q.in_b()[i]);
  }
  for (size_t i = 0; i < p.eq_a().size(); ++i) {
    e.push_back(left(p.eq_a()[i]));
    f.push_back(p.eq_b()[i]);
  }
  for (size_t i = 0; i < q.eq_a().size(); ++i) {
    e.push_back(right(q.eq_a()[i]));
    f.push_back(q.eq_b()[i]);
  }
  return Polyhedron::FromHE(dim, a, b, e, f);
}

XReal Support(const Polyhedron& p, const Vector& w) {
  if (static_cast<int>(w.size()) != p.dim()) {
    throw Error(ErrorCode::kDimension, "support direction dimension mismatch");
  }
  LpResult r = Minimize(p.a(), p.b(), Negate(w));
  switch (r.status) {
    case LpStatus::kInfeasible:
      return XReal::NegInf();
    case LpStatus::kUnbounded:
      return XReal::PosInf();
    case LpStatus::kOptimal:
      break;
  }
  return XReal(-r.value);
}

XReal SupportFromGenerators(const Polyhedron& p, const Vector& w) {
  if (p.is_empty()) return XReal::NegInf();
  for (const Vector& r : p.AllRays()) {
    if (sgn(Dot(w, r)) > 0) return XReal::PosInf();
  }
  std::vector<XReal> values;
  for (const Vector& v : p.vertices()) values.emplace_back(Dot(w, v));
  return SupOf(values);
}

Polyhedron Project(const Polyhedron& p, const std::vector<int>& keep) {
  std::set<int> seen;
  for (int k : keep) {
    if (k < 0 || k >= p.dim() || !seen.insert(k).second) {
      throw Error(ErrorCode::kDimension, "projection index out of range");
    }
  }
  const int out_dim = static_cast<int>(keep.size());
  if (p.is_empty()) return Polyhedron::Empty(out_dim);

  // cols[j] is the original coordinate held in column j of the system.
  std::vector<int> cols;
  for (int j = 0; j < p.dim(); ++j) cols.push_back(j);
  Polyhedron current = p;
  while (static_cast<int>(cols.size()) > out_dim) {
    Matrix ea = current.eq_a(), ia = current.in_a();
    Vector eb = current.eq_b(), ib = current.in_b();
    const size_t width = cols.size();

    // Pick the cheapest coordinate to eliminate: any coordinate with an
    // equality row is free, otherwise minimize the Fourier-Motzkin growth.
    size_t best = width;
    long best_cost = 0;
    bool best_has_eq = false;
    for (size_t j = 0; j < width; ++j) {
      if (seen.count(cols[j]) != 0) continue;
      bool has_eq = false;
      for (const Vector& row : ea) has_eq = has_eq || sgn(row[j]) != 0;
      long pos = 0, neg = 0;
      for (const Vector& row : ia) {
        if (sgn(row[j]) > 0) ++pos;
        if (sgn(row[j]) < 0) ++neg;
      }
      const long cost = pos * neg - pos - neg;
      if (best == width || (has_eq && !best_has_eq) ||
          (has_eq == best_has_eq && cost < best_cost)) {
        best = j;
        best_cost = cost;
        best_has_eq = has_eq;
      }
    }
    const size_t j = best;

    Matrix na, ne;
    Vector nb, nf;
    auto drop = [j](const Vector& row) {
      Vector out = row;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
      return out;
    };
    if (best_has_eq) {
      size_t pivot = 0;
      while (sgn(ea[pivot][j]) == 0) ++pivot;
      const Vector prow = ea[pivot];
      const Rational pb = eb[pivot];
      auto substitute = [&](Vector& row, Rational& rhs) {
        const Rational f = row[j] / prow[j];
        if (sgn(f) == 0) return;
        row = Sub(row, Scale(f, prow));
        rhs -= f * pb;
      };
      for (size_t i = 0; i < ea.size(); ++i) {
        if (i == pivot) continue;
        substitute(ea[i], eb[i]);
        ne.push_back(drop(ea[i]));
        nf.push_back(eb[i]);
      }
      for (size_t i = 0; i < ia.size(); ++i) {
        substitute(ia[i], ib[i]);
        na.push_back(drop(ia[i]));
        nb.push_back(ib[i]);
      }
    } else {
      for (size_t i = 0; i < ea.size(); ++i) {
        ne.push_back(drop(ea[i]));
        nf.push_back(eb[i]);
      }
      std::vector<size_t> pos, neg;
      for (size_t i = 0; i < ia.size(); ++i) {
        const int s = sgn(ia[i][j]);
        if (s == 0) {
          na.push_back(drop(ia[i]));
          nb.push_back(ib[i]);
        } else {
          (s > 0 ? pos : neg).push_back(i);
        }
      }
      for (size_t u : pos) {
        for (size_t v : neg) {
          const Rational cu = -ia[v][j];
          const Rational cv = ia[u][j];
          Vector row = Add(Scale(cu, ia[u]), Scale(cv, ia[v]));
          na.push_back(drop(row));
          nb.push_back(cu * ib[u] + cv * ib[v]);
        }
      }
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    current = Polyhedron::FromHE(static_cast<int>(cols.size()), na, nb, ne, nf);
    if (current.is_empty()) return Polyhedron::Empty(out_dim);
  }

  // Reorder the surviving columns to follow `keep`.
  std::vector<size_t> order;
  for (int k : keep) {
    order.push_back(static_cast<size_t>(
        std::find(cols.begin(), cols.end(), k) - cols.begin()));
  }
  auto permute = [&](const Vector& row) {
    Vector out;
    for (size_t idx : order) out.push_back(row[idx]);
    return out;
  };
  Matrix a, e;
  for (const Vector& row : current.in_a()) a.push_back(permute(row));
  for (const Vector& row : current.eq_a()) e.push_back(permute(row));
  return Polyhedron::FromHE(out_dim, a, current.in_b(), e, current.eq_b());
}

Polyhedron ProjectFromGenerators(const Polyhedron& p,
                                 const std::vector<int>& keep) {
  const int out_dim = static_cast<int>(keep.size());
  if (p.is_empty()) return Polyhedron::Empty(out_dim);
  auto pick = [&](const Matrix& rows) {
    Matrix out;
    for (const Vector& row : rows) {
      Vector v;
      for (int k : keep) v.push_back(row[static_cast<size_t>(k)]);
      out.push_back(std::move(v));
    }
    return out;
  };
  return Polyhedron::FromV(out_dim, pick(p.vertices()), pick(p.rays()),
                           pick(p.lines()));
}

Polyhedron Image(const Polyhedron& p, const Matrix& m, int out_dim) {
  const int d = p.dim();
  CheckWidth(m, static_cast<size_t>(d), "linear map");
  if (static_cast<int>(m.size()) != out_dim) {
    throw Error(ErrorCode::kDimension, "linear map row count mismatch");
  }
  if (p.is_empty()) return Polyhedron::Empty(out_dim);
  // Variables (x, y) with y = m x.
  Matrix a, e;
  Vector f;
  for (const Vector& row : p.in_a()) a.push_back(Concat(row, Zeros(out_dim)));
  for (const Vector& row : p.eq_a()) e.push_back(Concat(row, Zeros(out_dim)));
  f = p.eq_b();
  for (int i = 0; i < out_dim; ++i) {
    e.push_back(Concat(Negate(m[static_cast<size_t>(i)]),
                       UnitVector(out_dim, i)));
    f.push_back(0);
  }
  Polyhedron lifted = Polyhedron::FromHE(d + out_dim, a, p.in_b(), e, f);
  std::vector<int> keep;
  for (int i = 0; i < out_dim; ++i) keep.push_back(d + i);
  return Project(lifted, keep);
}

Polyhedron Preimage(const Polyhedron& p, const Matrix& m, const Vector& shift,
                    int in_dim) {
  CheckWidth(m, static_cast<size_t>(in_dim), "linear map");
  if (static_cast<int>(m.size()) != p.dim() ||
      static_cast<int>(shift.size()) != p.dim()) {
    throw Error(ErrorCode::kDimension, "linear map row count mismatch");
  }
  if (p.is_empty()) return Polyhedron::Empty(in_dim);
  const Matrix mt = Transpose(m, in_dim);
  auto pull = [&](const Matrix& rows, const Vector& rhs, Matrix* out_rows,
                  Vector* out_rhs) {
    for (size_t i = 0; i < rows.size(); ++i) {
      out_rows->push_back(Apply(mt, rows[i]));
      out_rhs->push_back(rhs[i] - Dot(rows[i], shift));
    }
  };
  Matrix a, e;
  Vector b, f;
  pull(p.in_a(), p.in_b(), &a, &b);
  pull(p.eq_a(), p.eq_b(), &e, &f);
  return Polyhedron::FromHE(in_dim, a, b, e, f);
}

Polyhedron PolarCone(const Polyhedron& cone) {
  if (cone.is_empty() || !ContainsPoint(cone, Zeros(cone.dim()))) {
    throw Error(ErrorCode::kCone, "polar of a set that is not a cone");
  }
  if (cone.vertices().size() != 1 || !IsZero(cone.vertices()[0])) {
    throw Error(ErrorCode::kCone, "polar of a set that is not a cone");
  }
  Matrix a;
  for (const Vector& r : cone.AllRays()) a.push_back(Negate(r));
  return Polyhedron::FromH(cone.dim(), a, Zeros(static_cast<int>(a.size())));
}

bool RecessionContains(const Polyhedron& p, const Polyhedron& cone) {
  if (p.dim() != cone.dim()) {
    throw Error(ErrorCode::kDimension, "cone lives in a different space");
  }
  if (p.is_empty()) return true;
  const Matrix rows = p.a();
  for (const Vector& r : cone.AllRays()) {
    for (const Vector& row : rows) {
      if (sgn(Dot(row, r)) < 0) return false;
    }
  }
  return true;
}

Polyhedron RecessionCone(const Polyhedron& p) {
  if (p.is_empty()) return Polyhedron::Point(Zeros(p.dim()));
  return Polyhedron::FromV(p.dim(), {Zeros(p.dim())}, p.rays(), p.lines());
}

Polyhedron ConeFromRays(int dim, const Matrix& rays) {
  return Polyhedron::FromV(dim, {Zeros(dim)}, rays);
}

std::vector<int> IrredundantRowsByLp(const Matrix& a, const Vector& b) {
  std::vector<int> active;
  for (size_t i = 0; i < a.size(); ++i) active.push_back(static_cast<int>(i));
  for (size_t i = 0; i < a.size(); ++i) {
    Matrix others;
    Vector rhs;
    for (int k : active) {
      if (k == static_cast<int>(i)) continue;
      others.push_back(a[static_cast<size_t>(k)]);
      rhs.push_back(b[static_cast<size_t>(k)]);
    }
    LpResult r = Minimize(others, rhs, a[i]);
    const bool implied =
        r.status == LpStatus::kInfeasible ||
        (r.status == LpStatus::kOptimal && r.value >= b[i]);
    if (implied) {
      active.erase(std::find(active.begin(), active.end(), static_cast<int>(i)));
    }
  }
  return active;
}

}  // namespace svconvex
