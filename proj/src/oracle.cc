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

#include "svconvex/oracle.h"

#include <cstddef>

namespace svconvex::oracle {

std::vector<Vector> LatticeBox(int dim, int lo, int hi, int den) {
  std::vector<Vector> out;
  std::vector<int> idx(static_cast<std::size_t>(dim), lo);
  while (true) {
    Vector p;
    for (int v : idx) {
      Rational q(v, den);
      q.canonicalize();
      p.push_back(q);
    }
    out.push_back(std::move(p));
    int k = dim - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == hi) {
      idx[static_cast<std::size_t>(k)] = lo;
      --k;
    }
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
  }
  return out;
}

GridScalar SampleScalar(const std::function<XReal(const Vector&)>& f,
                        const std::vector<Vector>& xs) {
  GridScalar g;
  g.xs = xs;
  for (const Vector& x : xs) g.values.push_back(f(x));
  return g;
}

XReal GridConjugate(const GridScalar& g, const Vector& xstar) {
  XReal best = XReal::NegInf();
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    const XReal term = InfDiff(XReal(Dot(xstar, g.xs[i])), g.values[i]);
    if (term > best) best = term;
  }
  return best;
}

XReal GridInfimum(const GridScalar& g) {
  XReal best = XReal::PosInf();
  for (const XReal& v : g.values) {
    if (v < best) best = v;
  }
  return best;
}

XReal GridScalarize(const Matrix& points, const Vector& zstar) {
  XReal best = XReal::PosInf();
  for (const Vector& p : points) {
    const XReal v(-Dot(zstar, p));
    if (v < best) best = v;
  }
  return best;
}

XReal GridSetConjugateLevel(const GridFn& g, const Vector& xstar,
                            const Vector& zstar, const XReal& r) {
  XReal best = XReal::NegInf();
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    if (g.points[i].empty()) continue;  // S(x) -inf of the empty set is Z
    XReal support = XReal::NegInf();
    for (const Vector& p : g.points[i]) {
      const XReal v(Dot(zstar, p));
      if (v > support) support = v;
    }
    const XReal shift = InfDiff(XReal(Dot(xstar, g.xs[i])), r);
    const XReal level = InfAdd(shift, support);
    if (level > best) best = level;
  }
  return best;
}

bool InUpperSet(const Matrix& points, const Matrix& cone_normals,
                const Vector& w) {
  for (const Vector& p : points) {
    const Vector diff = Sub(w, p);
    bool inside = true;
    for (const Vector& row : cone_normals) {
      if (sgn(Dot(row, diff)) < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

std::vector<Vector> GridResidual(const Matrix& a_rows, const Vector& a_rhs,
                                 const Matrix& b_samples,
                                 const std::vector<Vector>& box) {
  std::vector<Vector> out;
  for (const Vector& z : box) {
    bool ok = true;
    for (const Vector& b : b_samples) {
      const Vector w = Add(b, z);
      for (std::size_t i = 0; i < a_rows.size() && ok; ++i) {
        if (Dot(a_rows[i], w) < a_rhs[i]) ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<Vector> GridMinkowski(const Matrix& pa, const Matrix& pb,
                                  const Matrix& cone_normals,
                                  const std::vector<Vector>& box) {
  Matrix sums;
  for (const Vector& a : pa) {
    for (const Vector& b : pb) sums.push_back(Add(a, b));
  }
  std::vector<Vector> out;
  for (const Vector& z : box) {
    if (InUpperSet(sums, cone_normals, z)) out.push_back(z);
  }
  return out;
}

NonclosedDemo NonclosedScalarizationDemo() {
  const Vector zstar{0, -1};
  NonclosedDemo demo;
  demo.at_zero = GridScalarize({}, zstar);
  demo.closure_at_zero = demo.at_zero;
  for (int k = 1; k <= 32; ++k) {
    Rational x(k, 16);
    x.canonicalize();
    const Matrix value{Vector{1 / x, 0}};
    const XReal phi = GridScalarize(value, zstar);
    demo.samples.emplace_back(x, phi);
    if (x <= Rational(1, 8) && phi < demo.closure_at_zero) {
      demo.closure_at_zero = phi;
    }
  }
  return demo;
}

}  // namespace svconvex::oracle
