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

// svconvex: command-line front end. Reads JSON problem files, prints a JSON
// report on stdout. Exit 0 when every asserted check holds, 2 when a
// theorem-level check fails, 1 on usage or input errors.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svconvex/cli_io.h"
#include "svconvex/duality.h"
#include "svconvex/error.h"
#include "svconvex/oracle.h"
#include "svconvex/polyhedra.h"
#include "svconvex/scalar_fn.h"
#include "svconvex/upperset_fn.h"
#include "svconvex/xreal.h"

namespace svconvex {
namespace {

using io::Emit;
using io::Json;

struct Options {
  std::string g, f, h, a, b, phi, space;
  std::string t = "id";
  std::string s;
  std::string xstar, zstar, r = "0";
  std::string directions = "auto";
  std::string triples = "auto";
  std::string xbar;
  int p = -1;
  int box = 3;
  std::string emit;
  bool vrep() const { return emit == "vrep"; }
};

// Collects checks; a failed asserted check turns the exit code into 2.
class Report {
 public:
  explicit Report(std::string command) {
    doc_["version"] = io::kFormatVersion;
    doc_["command"] = std::move(command);
    doc_["args"] = Json::object();
    doc_["result"] = Json::object();
    doc_["checks"] = Json::array();
  }

  Json& args() { return doc_["args"]; }
  Json& result() { return doc_["result"]; }

  void Check(const std::string& name, const std::string& statement, bool ok,
             const std::string& pass = "holds") {
    Json c;
    c["name"] = name;
    c["statement"] = statement;
    c["verdict"] = ok ? pass : "failed";
    doc_["checks"].push_back(std::move(c));
    if (!ok) failed_ = true;
  }

  // Informational comparison, never fails the run.
  void Note(const std::string& name, const std::string& statement,
            const std::string& verdict) {
    Json c;
    c["name"] = name;
    c["statement"] = statement;
    c["verdict"] = verdict;
    c["asserted"] = false;
    doc_["checks"].push_back(std::move(c));
  }

  int Finish() {
    doc_["verdict"] = failed_ ? "theorem_failure" : "ok";
    std::cout << doc_.dump(2) << "\n";
    return failed_ ? 2 : 0;
  }

 private:
  Json doc_;
  bool failed_ = false;
};

std::string Relation(const Polyhedron& big, const Polyhedron& small) {
  if (big == small) return "equal";
  return Contains(big, small) ? "strict" : "failed";
}

SetFn LoadSetFn(const std::string& path, const char* flag) {
  if (path.empty()) {
    throw Error(ErrorCode::kUsage, std::string("missing ") + flag);
  }
  return io::ParseSetFn(io::ReadFile(path));
}

io::UpperSet LoadUpperSet(const std::string& path, const char* flag) {
  if (path.empty()) {
    throw Error(ErrorCode::kUsage, std::string("missing ") + flag);
  }
  return io::ParseUpperSet(io::ReadFile(path));
}

Vector ArgVector(const std::string& text, int dim, const std::string& flag) {
  if (text.empty()) throw Error(ErrorCode::kUsage, "missing " + flag);
  Json j = Json::array();
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    j.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return io::ParseVector(j, "/" + flag, dim);
}

XReal ArgXReal(const std::string& text, const std::string& flag) {
  return io::ParseXReal(Json(text), "/" + flag);
}

Matrix ArgLinMap(const std::string& text, int rows, int cols,
                 const std::string& flag) {
  if (text == "id") return io::ParseLinMap(Json("id"), rows, cols, "/" + flag);
  return io::ParseLinMap(io::ReadFile(text), rows, cols, "");
}

std::optional<Matrix> ArgDirections(const std::string& text, int m) {
  if (text == "auto") return std::nullopt;
  Json j = io::ReadFile(text);
  if (j.is_object() && j.contains("directions")) {
    return io::ParseMatrix(j["directions"], "/directions", m);
  }
  return io::ParseMatrix(j, "", m);
}

Json EmitOpt(const std::optional<Vector>& v) {
  return v ? Emit(*v) : Json(nullptr);
}

Json EmitOpt(const std::optional<bool>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Lattice points of [-k, k]^n.
std::vector<Vector> Box(int n, int k) { return oracle::LatticeBox(n, -k, k); }

// Recession cone of p equals C: sampled vertices plus C rebuild p.
bool RecessionIsCone(const Polyhedron& p, const OrderedSpace& space) {
  if (p.is_empty()) return true;
  Polyhedron rec =
      Polyhedron::FromV(p.dim(), {Zeros(p.dim())}, p.rays(), p.lines());
  return rec == space.cone();
}

Matrix ConeNormals(const OrderedSpace& space) { return space.cone().a(); }

// ---- scalarize / setify -------------------------------------------------

int RunScalarize(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  Vector zs = ArgVector(o.zstar, g.space().m(), "zstar");
  Report rep("scalarize");
  rep.args()["zstar"] = Emit(zs);
  ScalarFn phi = Scalarize(g, zs);
  rep.result()["phi"] = Emit(phi, o.vrep());
  bool ok = true;
  for (const Vector& x : Box(g.n(), 2)) {
    if (phi.Eval(x) != ScalarizeSet(EvalSlice(g, x), zs)) ok = false;
  }
  rep.Check("pointwise", "phi(x) = inf{-z*.z : z in g(x)} on the lattice box",
            ok, "equal");
  return rep.Finish();
}

int RunSetify(const Options& o) {
  if (o.phi.empty() || o.space.empty()) {
    throw Error(ErrorCode::kUsage, "setify needs --phi and --space");
  }
  ScalarFn phi = io::ParseScalarFn(io::ReadFile(o.phi));
  OrderedSpace space = io::ParseSpace(io::ReadFile(o.space), "");
  Vector zs = ArgVector(o.zstar, space.m(), "zstar");
  Report rep("setify");
  rep.args()["zstar"] = Emit(zs);
  SetFn s = Setify(phi, space, zs);
  rep.result()["setfn"] = Emit(s, o.vrep());
  if (!IsZero(zs)) {
    rep.Check("round_trip", "scalarizing the setification along z* returns phi",
              Scalarize(s, zs).epi() == phi.epi(), "equal");
  }
  return rep.Finish();
}

// ---- conjugate / biconj -------------------------------------------------

oracle::GridFn SampleFn(const SetFn& g, int k) {
  oracle::GridFn grid;
  for (const Vector& x : Box(g.n(), k)) {
    grid.xs.push_back(x);
    Polyhedron slice = EvalSlice(g, x);
    grid.points.push_back(slice.is_empty() ? Matrix{} : slice.vertices());
  }
  return grid;
}

int RunConjugate(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  Vector xs = ArgVector(o.xstar, g.n(), "xstar");
  Vector zs = ArgVector(o.zstar, g.space().m(), "zstar");
  XReal r = ArgXReal(o.r, "r");
  Report rep("conjugate");
  rep.args()["xstar"] = Emit(xs);
  rep.args()["zstar"] = Emit(zs);
  rep.args()["r"] = Emit(r);
  HalfSpaceValue v = Conjugate(g, xs, zs, r);
  rep.result()["value"] = Emit(v, o.vrep());
  HalfSpaceValue hull = Conjugate(Biconjugate(g), xs, zs, r);
  rep.Check("closed_hull", "g* equals (cl co g)* at this triple",
            hull.ToPolyhedron() == v.ToPolyhedron(), "equal");
  if (!IsZero(zs)) {
    XReal grid = oracle::GridSetConjugateLevel(SampleFn(g, o.box), xs, zs, r);
    rep.result()["grid_level"] = Emit(grid);
    rep.Check("grid_bound", "grid level is a lower bound of the exact level",
              grid <= v.alpha, grid == v.alpha ? "equal" : "bounded");
  }
  return rep.Finish();
}

int RunBiconj(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  Report rep("biconj");
  BiconjugateResult b = BiconjugateBothRoutes(g);
  rep.result()["biconjugate"] = Emit(b.hull, o.vrep());
  rep.result()["directions"] = Emit(b.directions);
  rep.Check("two_routes", "generator hull equals the conaffine intersection",
            b.hull == b.dual, "equal");
  rep.Check("minorant", "g** lies below g", Contains(b.hull.epi(), g.epi()),
            b.hull.epi() == g.epi() ? "equal" : "contained");
  return rep.Finish();
}

// ---- residuate / minkowski ----------------------------------------------

int RunResiduate(const Options& o) {
  io::UpperSet a = LoadUpperSet(o.a, "--a");
  io::UpperSet b = LoadUpperSet(o.b, "--b");
  if (!(a.space == b.space)) {
    throw Error(ErrorCode::kCone, "/space: --a and --b use different cones");
  }
  Report rep("residuate");
  Polyhedron res = Residual(a.set, b.set);
  rep.result()["residual"] = Emit(io::UpperSet{a.space, res}, o.vrep());
  rep.Check("upper_set", "A -* B is an upper set",
            MinkowskiSum(res, a.space.cone()) == res);
  rep.Check("adjunction", "B + (A -* B) lies in A",
            res.is_empty() || b.set.is_empty() ||
                Contains(a.set, MinkowskiSum(b.set, res)));
  return rep.Finish();
}

int RunMinkowski(const Options& o) {
  io::UpperSet a = LoadUpperSet(o.a, "--a");
  io::UpperSet b = LoadUpperSet(o.b, "--b");
  if (!(a.space == b.space)) {
    throw Error(ErrorCode::kCone, "/space: --a and --b use different cones");
  }
  Report rep("minkowski");
  Polyhedron sum = MinkowskiSum(a.set, b.set);
  rep.result()["sum"] = Emit(io::UpperSet{a.space, sum}, o.vrep());
  bool ok = true;
  for (const Vector& zs : a.space.dual_rays()) {
    if (ScalarizeSet(sum, zs) !=
        InfAdd(ScalarizeSet(a.set, zs), ScalarizeSet(b.set, zs))) {
      ok = false;
    }
  }
  rep.Check("scalarization", "phi(A + B) = phi(A) + phi(B) along C^- rays", ok,
            "equal");
  return rep.Finish();
}

// ---- chain / sandwich / fr / fundamental --------------------------------

// "auto": facet directions of g and f, x* in {-1, 0, 1}^n, r in {-1, 0, 1}.
std::vector<DualTriple> ArgTriples(const std::string& text, const SetFn& g,
                                   const SetFn& f) {
  std::vector<DualTriple> out;
  if (text == "auto") {
    std::set<Vector, decltype(&LexLess)> dirs(&LexLess);
    for (const Vector& d : FacetDirections(g)) dirs.insert(d);
    for (const Vector& d : FacetDirections(f)) dirs.insert(d);
    for (const Vector& zs : dirs) {
      for (const Vector& xs : Box(g.n(), 1)) {
        for (int r = -1; r <= 1; ++r) out.push_back({xs, zs, XReal(r)});
      }
    }
    return out;
  }
  Json j = io::ReadFile(text);
  std::string ptr;
  if (j.is_object() && j.contains("triples")) {
    j = Json(j["triples"]);
    ptr = "/triples";
  }
  if (!j.is_array()) io::Fail(ErrorCode::kSchema, ptr, "expected an array");
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(io::ParseTriple(j[i], g.n(), g.space().m(),
                                  ptr + "/" + std::to_string(i)));
  }
  return out;
}

int RunChain(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  SetFn f = LoadSetFn(o.f, "--f");
  Matrix t = ArgLinMap(o.t, f.n(), g.n(), "T");
  Matrix s = o.s.empty() ? Transpose(t, g.n())
                         : ArgLinMap(o.s, g.n(), f.n(), "S");
  Report rep("chain");
  ChainRuleReport cr = SetChainRule(g, f, t, s, ArgTriples(o.triples, g, f));
  Json entries = Json::array();
  int strict = 0;
  for (const ChainRuleEntry& e : cr.entries) {
    Json j;
    j["xstar"] = Emit(e.triple.xstar);
    j["zstar"] = Emit(e.triple.zstar);
    j["r"] = Emit(e.triple.r);
    j["conv_lhs"] = Emit(e.conv_lhs, o.vrep());
    j["conv_rhs"] = Emit(e.conv_rhs, o.vrep());
    j["lhs"] = Emit(e.lhs, o.vrep());
    j["mid"] = Emit(e.mid, o.vrep());
    j["rhs"] = Emit(e.rhs, o.vrep());
    j["lhs_vs_rhs"] = Relation(e.lhs, e.rhs);
    j["qualified"] = e.qualified;
    j["witness"] = EmitOpt(e.witness);
    j["ok"] = e.ok;
    j["failures"] = e.failures;
    if (!(e.lhs == e.rhs)) ++strict;
    entries.push_back(std::move(j));
  }
  rep.result()["entries"] = std::move(entries);
  rep.result()["strict_gaps"] = strict;
  rep.Check("chain_rule",
            "conjugate of inf-convolution equal, sum rule containments, "
            "equality under qualification",
            cr.ok);
  return rep.Finish();
}

int RunSandwich(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  SetFn f = LoadSetFn(o.f, "--f");
  Matrix t = ArgLinMap(o.t, f.n(), g.n(), "T");
  Vector zs = ArgVector(o.zstar, g.space().m(), "zstar");
  Report rep("sandwich");
  rep.args()["zstar"] = Emit(zs);
  if (auto bad = SandwichPremiseViolation(g, f, t, zs)) {
    throw Error(ErrorCode::kPremise,
                "g(x) leaves H(z*) -* f(Tx) at x = " + Emit(bad->x).dump() +
                    ", z = " + Emit(bad->z).dump());
  }
  SandwichResult s = Sandwich(g, f, t, zs);
  rep.result()["ystar"] = Emit(s.ystar);
  rep.result()["z0"] = Emit(s.z0);
  rep.result()["middle"] = Emit(s.middle, o.vrep());
  rep.result()["touching_point"] = EmitOpt(s.touching_point);
  rep.Check("lower_inclusion", "g(x) lies in the middle conaffine value",
            s.lower_inclusion);
  rep.Check("upper_inclusion", "middle value lies in H(z*) -* f(Tx)",
            s.upper_inclusion);
  rep.Check("z0_in_conjugates", "z0 in g*(T^T y*, z*) and in (-f)*-side value",
            s.z0_in_conjugates);
  if (s.conjugate_equalities) {
    rep.Check("touching", "conjugate equalities at the touching point",
              *s.conjugate_equalities, "equal");
  }
  return rep.Finish();
}

int RunFr(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  SetFn f = LoadSetFn(o.f, "--f");
  Matrix t = ArgLinMap(o.t, f.n(), g.n(), "T");
  std::optional<Matrix> dirs = ArgDirections(o.directions, g.space().m());
  Report rep("fr");
  DualityReport dr = FenchelRockafellar(g, f, t, dirs, Box(f.n(), 1));
  rep.result()["primal"] = Emit(dr.p, o.vrep());
  Json ds = Json::array();
  bool weak = true, strong = true, witness = true, samples = true;
  for (const DirectionResult& d : dr.directions) {
    Json j;
    j["zstar"] = Emit(d.zstar);
    j["D"] = Emit(d.d, o.vrep());
    j["weak_ok"] = d.weak_ok;
    j["qualified"] = d.qualified;
    j["strong_ok"] = EmitOpt(d.strong_ok);
    j["witness"] = EmitOpt(d.witness);
    j["witness_ok"] = EmitOpt(d.witness_ok);
    j["samples_ok"] = d.samples_ok;
    weak = weak && d.weak_ok;
    strong = strong && d.strong_ok != false;
    witness = witness && d.witness_ok != false;
    samples = samples && d.samples_ok;
    ds.push_back(std::move(j));
  }
  rep.result()["directions"] = std::move(ds);
  rep.result()["intersection"] = Emit(dr.intersection, o.vrep());
  rep.Check("weak", "D(z*) contains P for every direction", weak, "contained");
  rep.Check("strong", "D(z*) = cl(P + H(z*)) where qualified", strong, "equal");
  rep.Check("witness", "D(z*) equals the residual at the dual witness", witness,
            "equal");
  rep.Check("samples", "D(z*) lies in the residual at sampled y*", samples,
            "contained");
  if (dr.intersection_asserted) {
    rep.Check("intersection", "P equals the intersection of all D(z*)",
              dr.intersection_equals_p, "equal");
  } else {
    rep.Note("intersection", "P against the intersection of all D(z*)",
             Relation(dr.intersection, dr.p));
  }
  return rep.Finish();
}

int RunFundamental(const Options& o) {
  SetFn h = LoadSetFn(o.h, "--h");
  if (o.p < 0 || o.p > h.n()) {
    throw Error(ErrorCode::kUsage, "--p must lie in [0, n] for h on Q^n");
  }
  const int n = h.n() - o.p;
  std::optional<Matrix> dirs = ArgDirections(o.directions, h.space().m());
  std::optional<Vector> xbar;
  if (!o.xbar.empty()) xbar = ArgVector(o.xbar, n, "xbar");
  Report rep("fundamental");
  FundamentalReport fr = FundamentalDuality(h, n, o.p, dirs, xbar);
  rep.result()["feasible"] = fr.feasible;
  rep.result()["value_set"] = Emit(fr.value_set, o.vrep());
  Json ds = Json::array();
  bool weak = true, strong = true, witness = true, attain = true;
  for (const FundamentalDirection& d : fr.directions) {
    Json j;
    j["zstar"] = Emit(d.zstar);
    j["zstar_proper"] = d.zstar_proper;
    j["qualified"] = d.qualified;
    j["lhs"] = Emit(d.lhs, o.vrep());
    j["rhs"] = Emit(d.rhs, o.vrep());
    j["equal"] = d.equal;
    j["witness"] = EmitOpt(d.witness);
    j["witness_ok"] = EmitOpt(d.witness_ok);
    j["attained_by_slice"] = EmitOpt(d.attained_by_slice);
    j["attained_by_subgradient"] = EmitOpt(d.attained_by_subgradient);
    weak = weak && Contains(d.rhs.ToPolyhedron(), d.lhs);
    strong = strong && (d.equal || !d.qualified);
    witness = witness && d.witness_ok != false;
    attain = attain && d.attained_by_slice == d.attained_by_subgradient;
    ds.push_back(std::move(j));
  }
  rep.result()["directions"] = std::move(ds);
  rep.result()["intersection"] = Emit(fr.intersection, o.vrep());
  rep.result()["xbar_minimal"] = EmitOpt(fr.xbar_minimal_by_slice);
  rep.Check("weak", "lhs lies in rhs for every direction", weak, "contained");
  rep.Check("strong", "lhs = rhs where qualified", strong, "equal");
  rep.Check("witness", "the dual witness attains the intersection", witness,
            "equal");
  rep.Check("attainment", "slice and subgradient tests agree", attain, "equal");
  if (fr.part_b_equal) {
    rep.Check("value_set", "value set equals the intersection over directions",
              *fr.part_b_equal, "equal");
  }
  if (fr.xbar_minimal_by_slice && fr.xbar_minimal_by_subgradient) {
    rep.Check("xbar", "minimality of xbar agrees across both tests",
              *fr.xbar_minimal_by_slice == *fr.xbar_minimal_by_subgradient,
              "equal");
  }
  return rep.Finish();
}

// ---- oracle -------------------------------------------------------------

int RunOracleNonclosed() {
  Report rep("oracle nonclosed");
  oracle::NonclosedDemo d = oracle::NonclosedScalarizationDemo();
  Json samples = Json::array();
  bool zero = true;
  for (const auto& [x, v] : d.samples) {
    samples.push_back(Json{{"x", Emit(x)}, {"phi", Emit(v)}});
    zero = zero && v == XReal(0);
  }
  rep.result()["samples"] = std::move(samples);
  rep.result()["phi_at_zero"] = Emit(d.at_zero);
  rep.result()["closure_at_zero"] = Emit(d.closure_at_zero);
  rep.Check("positive", "phi(x) = 0 for sampled x > 0", zero, "equal");
  rep.Check("at_zero", "phi(0) = +inf", d.at_zero.is_pos_inf(), "equal");
  rep.Check("closure", "cl phi(0) = 0", d.closure_at_zero == XReal(0), "equal");
  return rep.Finish();
}

int RunOracleScalarize(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  Vector zs = ArgVector(o.zstar, g.space().m(), "zstar");
  Report rep("oracle scalarize");
  ScalarFn phi = Scalarize(g, zs);
  bool bound = true, match = true;
  int points = 0;
  for (const Vector& x : Box(g.n(), o.box)) {
    Polyhedron slice = EvalSlice(g, x);
    XReal grid = oracle::GridScalarize(
        slice.is_empty() ? Matrix{} : slice.vertices(), zs);
    XReal exact = phi.Eval(x);
    if (!(exact <= grid)) bound = false;
    if (RecessionIsCone(slice, g.space()) && exact != grid) match = false;
    ++points;
  }
  rep.result()["points"] = points;
  rep.Check("bound", "grid value is an upper bound of phi", bound, "bounded");
  rep.Check("match", "equality where the slice recedes exactly along C", match,
            "equal");
  return rep.Finish();
}

int RunOracleConjugate(const Options& o) {
  SetFn g = LoadSetFn(o.g, "--g");
  Vector xs = ArgVector(o.xstar, g.n(), "xstar");
  Vector zs = ArgVector(o.zstar, g.space().m(), "zstar");
  XReal r = ArgXReal(o.r, "r");
  Report rep("oracle conjugate");
  HalfSpaceValue v = Conjugate(g, xs, zs, r);
  XReal grid = oracle::GridSetConjugateLevel(SampleFn(g, o.box), xs, zs, r);
  rep.result()["exact_level"] = Emit(v.alpha);
  rep.result()["grid_level"] = Emit(grid);
  rep.Check("bound", "grid level is a lower bound of the exact level",
            grid <= v.alpha, grid == v.alpha ? "equal" : "bounded");
  return rep.Finish();
}

int RunOracleResidual(const Options& o) {
  io::UpperSet a = LoadUpperSet(o.a, "--a");
  io::UpperSet b = LoadUpperSet(o.b, "--b");
  Report rep("oracle residual");
  Polyhedron res = Residual(a.set, b.set);
  std::vector<Vector> box = Box(a.space.m(), o.box);
  std::vector<Vector> grid = oracle::GridResidual(
      a.set.a(), a.set.b(),
      b.set.is_empty() ? Matrix{} : b.set.vertices(), box);
  std::vector<Vector> exact;
  for (const Vector& z : box) {
    if (ContainsPoint(res, z)) exact.push_back(z);
  }
  bool contains = true;
  for (const Vector& z : exact) {
    bool found = false;
    for (const Vector& w : grid) found = found || w == z;
    contains = contains && found;
  }
  rep.result()["grid_points"] = static_cast<int>(grid.size());
  rep.result()["exact_points"] = static_cast<int>(exact.size());
  rep.Check("bound", "grid residual contains the exact lattice points",
            contains, "contained");
  if (RecessionIsCone(b.set, b.space)) {
    rep.Check("match", "grid and exact lattice points coincide",
              grid == exact, "equal");
  }
  return rep.Finish();
}

int RunOracleMinkowski(const Options& o) {
  io::UpperSet a = LoadUpperSet(o.a, "--a");
  io::UpperSet b = LoadUpperSet(o.b, "--b");
  Report rep("oracle minkowski");
  Polyhedron sum = MinkowskiSum(a.set, b.set);
  std::vector<Vector> box = Box(a.space.m(), o.box);
  std::vector<Vector> grid = oracle::GridMinkowski(
      a.set.is_empty() ? Matrix{} : a.set.vertices(),
      b.set.is_empty() ? Matrix{} : b.set.vertices(), ConeNormals(a.space),
      box);
  bool bound = true;
  std::vector<Vector> exact;
  for (const Vector& z : box) {
    if (ContainsPoint(sum, z)) exact.push_back(z);
  }
  for (const Vector& z : grid) bound = bound && ContainsPoint(sum, z);
  rep.result()["grid_points"] = static_cast<int>(grid.size());
  rep.result()["exact_points"] = static_cast<int>(exact.size());
  rep.Check("bound", "grid sum lies in the exact sum", bound, "contained");
  if (RecessionIsCone(a.set, a.space) && RecessionIsCone(b.set, b.space)) {
    rep.Check("match", "grid and exact lattice points coincide",
              grid == exact, "equal");
  }
  return rep.Finish();
}

}  // namespace

int RunSelftest();  // selftest.cc

}  // namespace svconvex

int main(int argc, char** argv) {
  using svconvex::Options;
  CLI::App app{"exact set-valued convex analysis on polyhedral instances"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> run;

  auto add_emit = [&](CLI::App* c) {
    c->add_option("--emit", o.emit, "also emit V-representations")
        ->check(CLI::IsMember({"vrep"}));
  };
  auto sub = [&](const char* name, const char* help,
                 std::function<int()> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    c->callback([&run, fn] { run = fn; });
    add_emit(c);
    return c;
  };

  CLI::App* c = sub("scalarize", "scalarization of g along z*",
                    [&] { return svconvex::RunScalarize(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--zstar", o.zstar)->required();

  c = sub("setify", "half-space valued lift of a scalar function",
          [&] { return svconvex::RunSetify(o); });
  c->add_option("--phi", o.phi)->required();
  c->add_option("--space", o.space)->required();
  c->add_option("--zstar", o.zstar)->required();

  c = sub("conjugate", "set-valued conjugate g*(x*, z*, r)",
          [&] { return svconvex::RunConjugate(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--xstar", o.xstar)->required();
  c->add_option("--zstar", o.zstar)->required();
  c->add_option("--r", o.r);
  c->add_option("--box", o.box, "lattice radius for the grid bound");

  c = sub("biconj", "biconjugate by two routes",
          [&] { return svconvex::RunBiconj(o); });
  c->add_option("--g", o.g)->required();

  c = sub("residuate", "A -* B", [&] { return svconvex::RunResiduate(o); });
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();

  c = sub("minkowski", "A + B", [&] { return svconvex::RunMinkowski(o); });
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();

  c = sub("chain", "conjugate chain and sum rules",
          [&] { return svconvex::RunChain(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--f", o.f)->required();
  c->add_option("--T", o.t, "\"id\" or a matrix file");
  c->add_option("--S", o.s, "matrix file, default T^T");
  c->add_option("--triples", o.triples, "\"auto\" or a file");

  c = sub("sandwich", "separating conaffine function",
          [&] { return svconvex::RunSandwich(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--f", o.f)->required();
  c->add_option("--T", o.t);
  c->add_option("--zstar", o.zstar)->required();

  c = sub("fr", "Fenchel-Rockafellar duality",
          [&] { return svconvex::RunFr(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--f", o.f)->required();
  c->add_option("--T", o.t);
  c->add_option("--directions", o.directions, "\"auto\" or a file");

  c = sub("fundamental", "duality for a perturbation function h(x, y)",
          [&] { return svconvex::RunFundamental(o); });
  c->set_help_flag("--help", "print this help message and exit");
  c->add_option("--h", o.h)->required();
  c->add_option("--p", o.p, "dimension of the perturbation y")->required();
  c->add_option("--directions", o.directions);
  c->add_option("--xbar", o.xbar);

  CLI::App* orc = app.add_subcommand("oracle", "brute-force grid evaluators");
  orc->require_subcommand(1);
  auto osub = [&](const char* name, const char* help,
                  std::function<int()> fn) {
    CLI::App* s = orc->add_subcommand(name, help);
    s->callback([&run, fn] { run = fn; });
    s->add_option("--box", o.box, "lattice radius");
    return s;
  };
  osub("nonclosed", "non-closed scalarization demo",
       [] { return svconvex::RunOracleNonclosed(); });
  c = osub("scalarize", "grid scalarization against the kernel",
           [&] { return svconvex::RunOracleScalarize(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--zstar", o.zstar)->required();
  c = osub("conjugate", "grid conjugate level against the kernel",
           [&] { return svconvex::RunOracleConjugate(o); });
  c->add_option("--g", o.g)->required();
  c->add_option("--xstar", o.xstar)->required();
  c->add_option("--zstar", o.zstar)->required();
  c->add_option("--r", o.r);
  c = osub("residual", "grid residual against the kernel",
           [&] { return svconvex::RunOracleResidual(o); });
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  c = osub("minkowski", "grid Minkowski sum against the kernel",
           [&] { return svconvex::RunOracleMinkowski(o); });
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();

  app.add_subcommand("selftest", "invariant suite on built-in fixtures")
      ->callback([&run] { run = [] { return svconvex::RunSelftest(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    return run();
  } catch (const svconvex::Error& e) {
    std::cerr << "svconvex: " << e.what() << "\n";
    return e.code() == svconvex::ErrorCode::kTheorem ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "svconvex: " << e.what() << "\n";
    return 1;
  }
}
