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

// Built-in fixtures run through the same parse/emit path as user files.

#include <iostream>
#include <string>

#include "svconvex/cli_io.h"
#include "svconvex/duality.h"
#include "svconvex/error.h"
#include "svconvex/oracle.h"
#include "svconvex/upperset_fn.h"

namespace svconvex {
namespace {

using io::Json;

constexpr const char* kOrthant = R"({"m": 2, "cone_rays": [[1, 0], [0, 1]]})";

SetFn Fn(int n, const std::string& rows, const std::string& rhs) {
  return io::ParseSetFn(Json::parse(
      R"({"space": )" + std::string(kOrthant) + R"(, "n": )" +
      std::to_string(n) + R"(, "epi": {"A": )" + rows + R"(, "b": )" + rhs +
      "}}"));
}

Polyhedron Row(const Vector& a, long b) {
  return Polyhedron::FromH(static_cast<int>(a.size()), {a}, {Rational(b)});
}

Vector V(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

int RunSelftest() {
  Json checks = Json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back(Json{{"name", name}, {"verdict", ok ? "holds" : "failed"}});
    all = all && ok;
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      check(name, fn());
    } catch (const Error& e) {
      checks.push_back(Json{{"name", name}, {"verdict", "failed"},
                            {"error", e.what()}});
      all = false;
    }
  };

  guarded("xreal_adjunction", [] {
    const XReal grid[] = {XReal::NegInf(), XReal(-1), XReal(0), XReal(1),
                          XReal::PosInf()};
    for (const XReal& a : grid) {
      for (const XReal& b : grid) {
        for (const XReal& t : grid) {
          if ((a <= InfAdd(b, t)) != (InfDiff(a, b) <= t)) return false;
          if ((SupAdd(b, t) <= a) != (t <= SupDiff(a, b))) return false;
        }
      }
    }
    return true;
  });

  SetFn staircase = Fn(1, "[[1,0,0],[-1,0,0],[-1,1,0],[1,0,1]]", "[0,-1,0,1]");
  SetFn abs2 = Fn(1, "[[-1,1,0],[-1,0,1],[1,0,1]]", "[0,0,0]");
  SetFn linear2 = Fn(1, "[[0,1,0],[-1,0,1]]", "[0,0]");
  SetFn cone_valued = SetFn::Constant(1, staircase.space(),
                                      staircase.space().cone());
  const Matrix id = Identity(1);

  guarded("round_trip", [&] {
    for (const SetFn* g : {&staircase, &abs2, &linear2, &cone_valued}) {
      Json e = io::Emit(*g, true);
      if (io::Emit(io::ParseSetFn(e), true) != e) return false;
    }
    return true;
  });

  guarded("conjugate_abs2", [&] {
    return Conjugate(abs2, V({0}), V({0, -1}), XReal(0)).ToPolyhedron() ==
           Row(V({0, 1}), 0);
  });

  guarded("biconjugate_two_routes", [&] {
    for (const SetFn* g : {&staircase, &abs2, &linear2, &cone_valued}) {
      BiconjugateResult b = BiconjugateBothRoutes(*g);
      if (!(b.hull == b.dual) || !(b.hull.epi() == g->epi())) return false;
    }
    return true;
  });

  guarded("fr_staircase", [&] {
    DualityReport rep =
        FenchelRockafellar(staircase, cone_valued, id, std::nullopt);
    bool ok = rep.intersection_asserted && rep.intersection_equals_p;
    for (const DirectionResult& d : rep.directions) {
      ok = ok && d.weak_ok && d.strong_ok == true && d.witness_ok == true;
      if (d.zstar == V({-1, -1})) {
        ok = ok && d.d.ToPolyhedron() == Row(V({1, 1}), 1);
      }
    }
    return ok && rep.directions.size() == 3;
  });

  guarded("sandwich_abs2_linear", [&] {
    SandwichResult s = Sandwich(abs2, linear2, id, V({0, -1}));
    return s.ystar == V({-1}) && s.z0 == V({0, 0}) && s.lower_inclusion &&
           s.upper_inclusion && s.conjugate_equalities == true;
  });

  guarded("chain_gap", [&] {
    SetFn g(1, staircase.space(), Polyhedron::Empty(3));
    SetFn f = SetFn::Constant(1, g.space(), Polyhedron::Universe(2));
    ChainRuleReport rep =
        SetChainRule(g, f, id, id, {{V({0}), V({-1, -1}), XReal(0)}});
    return rep.ok && rep.entries[0].lhs.is_universe() &&
           rep.entries[0].rhs.is_empty();
  });

  guarded("nonclosed_demo", [] {
    oracle::NonclosedDemo d = oracle::NonclosedScalarizationDemo();
    bool ok = d.at_zero.is_pos_inf() && d.closure_at_zero == XReal(0);
    for (const auto& s : d.samples) ok = ok && s.second == XReal(0);
    return ok;
  });

  guarded("residual_shifted_cones", [&] {
    const OrderedSpace& s = staircase.space();
    Polyhedron a = MinkowskiSum(Polyhedron::Point(V({1, 2})), s.cone());
    Polyhedron b = MinkowskiSum(Polyhedron::Point(V({-1, 1})), s.cone());
    Polyhedron res = Residual(a, b);
    std::vector<Vector> box = oracle::LatticeBox(2, -4, 4);
    std::vector<Vector> grid =
        oracle::GridResidual(a.a(), a.b(), b.vertices(), box);
    std::vector<Vector> exact;
    for (const Vector& z : box) {
      if (ContainsPoint(res, z)) exact.push_back(z);
    }
    return res == MinkowskiSum(Polyhedron::Point(V({2, 1})), s.cone()) &&
           grid == exact;
  });

  Json doc;
  doc["version"] = io::kFormatVersion;
  doc["command"] = "selftest";
  doc["checks"] = std::move(checks);
  doc["verdict"] = all ? "ok" : "theorem_failure";
  std::cout << doc.dump(2) << "\n";
  return all ? 0 : 2;
}

}  // namespace svconvex
