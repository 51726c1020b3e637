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

#include <cassert>

#include "svconvex/error.h"

namespace svconvex {

using Tag = XReal::Tag;

const Rational& XReal::value() const {
  if (tag_ != Tag::kFinite) {
    throw Error(ErrorCode::kDomain, "value() of an infinite extended real");
  }
  return value_;
}

int Compare(const XReal& a, const XReal& b) {
  if (a.tag_ != b.tag_) {
    return static_cast<int>(a.tag_) < static_cast<int>(b.tag_) ? -1 : 1;
  }
  if (a.tag_ != Tag::kFinite) return 0;
  return cmp(a.value_, b.value_);
}

// The four binary operators below are written as explicit 3x3 tag tables.
// Rows are the tag of `a`, columns the tag of `b`, in the order
// {-inf, finite, +inf}. "sum"/"diff" mark the finite-finite cell.

XReal InfAdd(const XReal& a, const XReal& b) {
  //            -inf   finite  +inf
  // -inf       -inf   -inf    +inf
  // finite     -inf   sum     +inf
  // +inf       +inf   +inf    +inf
  switch (a.tag()) {
    case Tag::kPosInf:
      return XReal::PosInf();
    case Tag::kNegInf:
      return b.is_pos_inf() ? XReal::PosInf() : XReal::NegInf();
    case Tag::kFinite:
      switch (b.tag()) {
        case Tag::kNegInf:
          return XReal::NegInf();
        case Tag::kPosInf:
          return XReal::PosInf();
        case Tag::kFinite:
          return XReal(a.value() + b.value());
      }
  }
  assert(false);
  return {};
}

XReal SupAdd(const XReal& a, const XReal& b) {
  //            -inf   finite  +inf
  // -inf       -inf   -inf    -inf
  // finite     -inf   sum     +inf
  // +inf       -inf   +inf    +inf
  switch (a.tag()) {
    case Tag::kNegInf:
      return XReal::NegInf();
    case Tag::kPosInf:
      return b.is_neg_inf() ? XReal::NegInf() : XReal::PosInf();
    case Tag::kFinite:
      switch (b.tag()) {
        case Tag::kNegInf:
          return XReal::NegInf();
        case Tag::kPosInf:
          return XReal::PosInf();
        case Tag::kFinite:
          return XReal(a.value() + b.value());
      }
  }
  assert(false);
  return {};
}

XReal InfDiff(const XReal& a, const XReal& b) {
  //            -inf   finite  +inf
  // -inf       -inf   -inf    -inf
  // finite     +inf   diff    -inf
  // +inf       +inf   +inf    -inf
  switch (a.tag()) {
    case Tag::kNegInf:
      return XReal::NegInf();
    case Tag::kPosInf:
      return b.is_pos_inf() ? XReal::NegInf() : XReal::PosInf();
    case Tag::kFinite:
      switch (b.tag()) {
        case Tag::kNegInf:
          return XReal::PosInf();
        case Tag::kPosInf:
          return XReal::NegInf();
        case Tag::kFinite:
          return XReal(a.value() - b.value());
      }
  }
  assert(false);
  return {};
}

XReal SupDiff(const XReal& a, const XReal& b) {
  //            -inf   finite  +inf
  // -inf       +inf   -inf    -inf
  // finite     +inf   diff    -inf
  // +inf       +inf   +inf    +inf
  switch (a.tag()) {
    case Tag::kPosInf:
      return XReal::PosInf();
    case Tag::kNegInf:
      return b.is_neg_inf() ? XReal::PosInf() : XReal::NegInf();
    case Tag::kFinite:
      switch (b.tag()) {
        case Tag::kNegInf:
          return XReal::PosInf();
        case Tag::kPosInf:
          return XReal::NegInf();
        case Tag::kFinite:
          return XReal(a.value() - b.value());
      }
  }
  assert(false);
  return {};
}

XReal Negate(const XReal& a) {
  switch (a.tag()) {
    case Tag::kNegInf:
      return XReal::PosInf();
    case Tag::kPosInf:
      return XReal::NegInf();
    case Tag::kFinite:
      return XReal(Rational(-a.value()));
  }
  assert(false);
  return {};
}

XReal Scale(const Rational& t, const XReal& a) {
  if (t == -1) return Negate(a);
  if (sgn(t) < 0) {
    throw Error(ErrorCode::kDomain,
                "scale factor must be nonnegative or -1, got " + ToString(t));
  }
  if (sgn(t) == 0) return XReal(0);
  if (!a.is_finite()) return a;
  return XReal(Rational(t * a.value()));
}

XReal InfOf(std::span<const XReal> values) {
  XReal best = XReal::PosInf();
  for (const XReal& v : values) {
    if (v < best) best = v;
  }
  return best;
}

XReal SupOf(std::span<const XReal> values) {
  XReal best = XReal::NegInf();
  for (const XReal& v : values) {
    if (v > best) best = v;
  }
  return best;
}

std::string ToString(const XReal& a) {
  switch (a.tag()) {
    case Tag::kNegInf:
      return "-inf";
    case Tag::kPosInf:
      return "+inf";
    case Tag::kFinite:
      return ToString(a.value());
  }
  return "";
}

XReal ParseXReal(std::string_view text) {
  if (text == "+inf" || text == "inf") return XReal::PosInf();
  if (text == "-inf") return XReal::NegInf();
  return XReal(ParseRational(text));
}

}  // namespace svconvex
