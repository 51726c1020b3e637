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

// Extended reals Q ∪ {-inf, +inf} with the two Dedekind additions and the
// two residuations. The inf-addition lets +inf dominate, the sup-addition
// lets -inf dominate; idif and sdif are their residuals.

#ifndef SVCONVEX_XREAL_H_
#define SVCONVEX_XREAL_H_

#include <span>
#include <string>
#include <string_view>

#include "svconvex/rational.h"

namespace svconvex {

class XReal {
 public:
  enum class Tag { kNegInf, kFinite, kPosInf };

  XReal() = default;
  XReal(const Rational& value) : tag_(Tag::kFinite), value_(value) {}  // NOLINT
  XReal(long value) : tag_(Tag::kFinite), value_(value) {}             // NOLINT
  XReal(int value) : tag_(Tag::kFinite), value_(value) {}              // NOLINT

  static XReal PosInf() { return XReal(Tag::kPosInf); }
  static XReal NegInf() { return XReal(Tag::kNegInf); }

  Tag tag() const { return tag_; }
  bool is_finite() const { return tag_ == Tag::kFinite; }
  bool is_pos_inf() const { return tag_ == Tag::kPosInf; }
  bool is_neg_inf() const { return tag_ == Tag::kNegInf; }
  // Requires is_finite().
  const Rational& value() const;

  friend int Compare(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, const XReal& b) {
    return Compare(a, b) == 0;
  }
  friend bool operator<(const XReal& a, const XReal& b) {
    return Compare(a, b) < 0;
  }
  friend bool operator<=(const XReal& a, const XReal& b) {
    return Compare(a, b) <= 0;
  }
  friend bool operator>(const XReal& a, const XReal& b) {
    return Compare(a, b) > 0;
  }
  friend bool operator>=(const XReal& a, const XReal& b) {
    return Compare(a, b) >= 0;
  }

 private:
  explicit XReal(Tag tag) : tag_(tag) {}

  Tag tag_ = Tag::kFinite;
  Rational value_ = 0;
};

XReal InfAdd(const XReal& a, const XReal& b);
XReal SupAdd(const XReal& a, const XReal& b);
// inf{t : a <= InfAdd(b, t)}
XReal InfDiff(const XReal& a, const XReal& b);
// sup{t : SupAdd(b, t) <= a}
XReal SupDiff(const XReal& a, const XReal& b);
XReal Negate(const XReal& a);
// t >= 0 or t == -1; 0 * (+-inf) = 0. Throws Error(kDomain) otherwise.
XReal Scale(const Rational& t, const XReal& a);

// Lattice infimum / supremum; InfOf({}) = +inf and SupOf({}) = -inf.
XReal InfOf(std::span<const XReal> values);
XReal SupOf(std::span<const XReal> values);

// "p/q", "p", "+inf", "-inf".
std::string ToString(const XReal& a);
XReal ParseXReal(std::string_view text);

}  // namespace svconvex

#endif  // SVCONVEX_XREAL_H_
