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

#include "svconvex/double_description.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace svconvex {
namespace {

// Fixed-width set of constraint indices.
class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  Bits And(const Bits& o) const {
    Bits out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
  }

  bool SubsetOf(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }

  int Count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vector v;
  Bits tight;
};

}  // namespace

ConeGenerators DoubleDescription(int dim, const Matrix& constraints) {
  const std::size_t k = constraints.size();
  Matrix lines = Identity(dim);
  std::vector<Ray> rays;

  for (std::size_t c = 0; c < k; ++c) {
    const Vector& m = constraints[c];
    if (IsZero(m)) {
      for (Ray& r : rays) r.tight.Set(c);
      continue;
    }

    // A line not orthogonal to m turns into a ray; the remaining lines and
    // rays are shifted along it onto the hyperplane m.y = 0.
    std::size_t pivot = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (sgn(Dot(m, lines[i])) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < lines.size()) {
      Vector l = lines[pivot];
      Rational ml = Dot(m, l);
      if (sgn(ml) < 0) {
        l = Negate(l);
        ml = -ml;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (Vector& other : lines) {
        const Rational f = Dot(m, other) / ml;
        if (sgn(f) != 0) other = Sub(other, Scale(f, l));
        MakePrimitive(other);
      }
      for (Ray& r : rays) {
        const Rational f = Dot(m, r.v) / ml;
        if (sgn(f) != 0) r.v = Sub(r.v, Scale(f, l));
        MakePrimitive(r.v);
        r.tight.Set(c);
      }
      // The former line is tight on every earlier constraint.
      Ray fresh{Primitive(l), Bits(k)};
      for (std::size_t p = 0; p < c; ++p) fresh.tight.Set(p);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = Dot(m, rays[i].v);
      const int s = sgn(val[i]);
      if (s > 0) pos.push_back(i);
      if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (sgn(val[i]) == 0) rays[i].tight.Set(c);
      }
      continue;
    }

    // Adjacent extreme rays of a pointed cone of dimension d share at least
    // d - 2 tight constraints.
    const int min_common = dim - static_cast<int>(lines.size()) - 2;
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].tight.And(rays[q].tight);
        if (common.Count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.SubsetOf(rays[t].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector combo = Sub(Scale(val[p], rays[q].v), Scale(val[q], rays[p].v));
        MakePrimitive(combo);
        common.Set(c);
        next.push_back(Ray{std::move(combo), std::move(common)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int s = sgn(val[i]);
      if (s < 0) continue;
      if (s == 0) rays[i].tight.Set(c);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lines = std::move(lines);
  for (Ray& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace svconvex
