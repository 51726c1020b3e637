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

// Exact rational convex polyhedra in Q^d. A Polyhedron always carries both
// a canonical H-representation and a minimal V-representation; both are
// computed once at construction and the object is immutable afterwards.
//
// Canonical H-rep: equality rows in reduced row echelon form (primitive
// integer normals, positive leading entry) and irredundant inequality rows
// reduced modulo the equalities, with primitive integer normals and sorted
// lexicographically. The empty set is the single row 0 >= 1; the whole
// space has no rows. Two polyhedra are equal iff their canonical forms are.

#ifndef SVCONVEX_POLYHEDRA_H_
#define SVCONVEX_POLYHEDRA_H_

#include <vector>

#include "svconvex/rational.h"
#include "svconvex/xreal.h"

namespace svconvex {

class Polyhedron {
 public:
  // The empty subset of Q^0; a placeholder for later assignment.
  Polyhedron() = default;

  // {x : A x >= b}.
  static Polyhedron FromH(int dim, const Matrix& a, const Vector& b);
  // {x : A x >= b, E x = f}.
  static Polyhedron FromHE(int dim, const Matrix& a, const Vector& b,
                           const Matrix& e, const Vector& f);
  // conv(vertices) + cone(rays) + span(lines). No vertices means empty.
  static Polyhedron FromV(int dim, const Matrix& vertices, const Matrix& rays,
                          const Matrix& lines = {});
  static Polyhedron Empty(int dim);
  static Polyhedron Universe(int dim);
  static Polyhedron Point(const Vector& p);

  int dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  bool is_universe() const { return !empty_ && eq_a_.empty() && in_a_.empty(); }

  // Canonical parts.
  const Matrix& eq_a() const { return eq_a_; }
  const Vector& eq_b() const { return eq_b_; }
  const Matrix& in_a() const { return in_a_; }
  const Vector& in_b() const { return in_b_; }

  // Full H-rep A x >= b, every equality emitted as a pair of opposite rows
  // (equality pairs first). The empty set yields the row 0 >= 1.
  Matrix a() const;
  Vector b() const;

  // Minimal V-rep. Lines form an echelon basis; vertices and rays are
  // reduced modulo the lines, rays primitive, all lists sorted.
  const Matrix& vertices() const { return vertices_; }
  const Matrix& rays() const { return rays_; }
  const Matrix& lines() const { return lines_; }
  // Rays together with both orientations of every line.
  Matrix AllRays() const;

  friend bool operator==(const Polyhedron& p, const Polyhedron& q);

 private:
  // Fills the canonical H-rep from a minimal V-rep already stored.
  void CanonicalizeFromV();

  int dim_ = 0;
  bool empty_ = true;
  Matrix eq_a_;
  Vector eq_b_;
  Matrix in_a_;
  Vector in_b_;
  Matrix vertices_;
  Matrix rays_;
  Matrix lines_;
};

bool ContainsPoint(const Polyhedron& p, const Vector& x);
// q is a subset of p.
bool Contains(const Polyhedron& p, const Polyhedron& q);

Polyhedron Intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron MinkowskiSum(const Polyhedron& p, const Polyhedron& q);
Polyhedron HullUnion(const Polyhedron& p, const Polyhedron& q);
Polyhedron Product(const Polyhedron& p, const Polyhedron& q);

// sup{w.x : x in p}: -inf for the empty set, +inf if unbounded. Exact LP.
XReal Support(const Polyhedron& p, const Vector& w);
// Same value read off the generators; an independent route for tests.
XReal SupportFromGenerators(const Polyhedron& p, const Vector& w);

// Projection onto the coordinates listed in `keep` (in that order), by
// Fourier-Motzkin elimination of the remaining coordinates.
Polyhedron Project(const Polyhedron& p, const std::vector<int>& keep);
// Same projection from the generators (image of the V-rep).
Polyhedron ProjectFromGenerators(const Polyhedron& p,
                                 const std::vector<int>& keep);

// {m x : x in p} for an out_dim x dim matrix m, through a lifted system
// and Project.
Polyhedron Image(const Polyhedron& p, const Matrix& m, int out_dim);
// {x in Q^in_dim : m x + shift in p}.
Polyhedron Preimage(const Polyhedron& p, const Matrix& m, const Vector& shift,
                    int in_dim);

// {z* : z*.c <= 0 for every c in cone}; `cone` must contain the origin.
Polyhedron PolarCone(const Polyhedron& cone);
// Every generator direction of `cone` is a recession direction of p.
bool RecessionContains(const Polyhedron& p, const Polyhedron& cone);
Polyhedron RecessionCone(const Polyhedron& p);
// cone(rays) as a polyhedron.
Polyhedron ConeFromRays(int dim, const Matrix& rays);

// Rows of A x >= b that are not implied by the others, decided with one LP
// per row. Kept as an independent check on the canonical form.
std::vector<int> IrredundantRowsByLp(const Matrix& a, const Vector& b);

}  // namespace svconvex

#endif  // SVCONVEX_POLYHEDRA_H_
