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

#include "svconvex/cli_io.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "svconvex/error.h"

namespace svconvex::io {
namespace {

std::string At(const std::string& ptr, const std::string& key) {
  return ptr + "/" + key;
}

std::string At(const std::string& ptr, size_t index) {
  return ptr + "/" + std::to_string(index);
}

const Json& Field(const Json& j, const std::string& ptr, const char* key,
                  ErrorCode code = ErrorCode::kSchema) {
  if (!j.is_object()) Fail(ErrorCode::kSchema, ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(code, At(ptr, key), "missing field");
  return *it;
}

int ParseInt(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) Fail(ErrorCode::kSchema, ptr, "expected an integer");
  return j.get<int>();
}

// Message without the leading "E_XXX: ".
std::string Bare(const Error& e) {
  const std::string w = e.what();
  const size_t k = w.find(": ");
  return k == std::string::npos ? w : w.substr(k + 2);
}

void CheckDim(int dim, const std::string& ptr) {
  if (dim > MaxDim()) {
    Fail(ErrorCode::kDimension, ptr,
         "ambient dimension " + std::to_string(dim) + " exceeds the cap " +
             std::to_string(MaxDim()));
  }
}

}  // namespace

int MaxDim() {
  const char* env = std::getenv("SVCONVEX_MAX_DIM");
  if (env == nullptr || *env == '\0') return 6;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw Error(ErrorCode::kUsage, "SVCONVEX_MAX_DIM must be a positive integer");
  }
  return static_cast<int>(v);
}

void Fail(ErrorCode code, const std::string& pointer, const std::string& what) {
  throw Error(code, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

Rational ParseRational(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) {
    Fail(ErrorCode::kRational, ptr, "expected a rational string \"p/q\"");
  }
  try {
    return svconvex::ParseRational(j.get<std::string>());
  } catch (const Error& e) {
    Fail(ErrorCode::kRational, ptr, Bare(e));
  }
}

XReal ParseXReal(const Json& j, const std::string& ptr) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return XReal::PosInf();
    if (s == "-inf") return XReal::NegInf();
  }
  return XReal(ParseRational(j, ptr));
}

Vector ParseVector(const Json& j, const std::string& ptr, int dim) {
  if (!j.is_array()) Fail(ErrorCode::kSchema, ptr, "expected an array");
  if (dim >= 0 && static_cast<int>(j.size()) != dim) {
    Fail(ErrorCode::kDimension, ptr,
         "expected length " + std::to_string(dim) + ", got " +
             std::to_string(j.size()));
  }
  Vector v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(ParseRational(j[i], At(ptr, i)));
  return v;
}

Matrix ParseMatrix(const Json& j, const std::string& ptr, int cols) {
  if (!j.is_array()) Fail(ErrorCode::kSchema, ptr, "expected an array of rows");
  Matrix m;
  for (size_t i = 0; i < j.size(); ++i) m.push_back(ParseVector(j[i], At(ptr, i), cols));
  return m;
}

Polyhedron ParsePolyhedron(const Json& j, const std::string& ptr, int dim) {
  if (!j.is_object()) Fail(ErrorCode::kSchema, ptr, "expected a polyhedron object");
  if (j.contains("dim") && ParseInt(j["dim"], At(ptr, "dim")) != dim) {
    Fail(ErrorCode::kDimension, At(ptr, "dim"),
         "expected dimension " + std::to_string(dim));
  }
  CheckDim(dim, ptr);
  if (j.contains("A")) {
    Matrix a = ParseMatrix(j["A"], At(ptr, "A"), dim);
    Vector b = ParseVector(Field(j, ptr, "b"), At(ptr, "b"),
                           static_cast<int>(a.size()));
    return Polyhedron::FromH(dim, a, b);
  }
  if (j.contains("vertices")) {
    Matrix v = ParseMatrix(j["vertices"], At(ptr, "vertices"), dim);
    Matrix r = j.contains("rays") ? ParseMatrix(j["rays"], At(ptr, "rays"), dim)
                                  : Matrix{};
    Matrix l = j.contains("lines")
                   ? ParseMatrix(j["lines"], At(ptr, "lines"), dim)
                   : Matrix{};
    return Polyhedron::FromV(dim, v, r, l);
  }
  Fail(ErrorCode::kSchema, ptr, "polyhedron needs \"A\"/\"b\" or \"vertices\"");
}

OrderedSpace ParseSpace(const Json& j, const std::string& ptr) {
  const int m = ParseInt(Field(j, ptr, "m"), At(ptr, "m"));
  if (m < 1) Fail(ErrorCode::kDimension, At(ptr, "m"), "m must be positive");
  CheckDim(m, At(ptr, "m"));
  const Json& rays = Field(j, ptr, "cone_rays", ErrorCode::kCone);
  Matrix r = ParseMatrix(rays, At(ptr, "cone_rays"), m);
  try {
    return OrderedSpace(m, r);
  } catch (const Error& e) {
    Fail(e.code(), At(ptr, "cone_rays"), Bare(e));
  }
}

SetFn ParseSetFn(const Json& j, const std::string& ptr) {
  if (!j.is_object()) Fail(ErrorCode::kSchema, ptr, "expected an object");
  if (j.contains("version") &&
      ParseInt(j["version"], At(ptr, "version")) != kFormatVersion) {
    Fail(ErrorCode::kSchema, At(ptr, "version"), "unsupported version");
  }
  OrderedSpace space =
      ParseSpace(Field(j, ptr, "space", ErrorCode::kCone), At(ptr, "space"));
  const int n = ParseInt(Field(j, ptr, "n"), At(ptr, "n"));
  if (n < 0) Fail(ErrorCode::kDimension, At(ptr, "n"), "n must be >= 0");
  Polyhedron epi =
      ParsePolyhedron(Field(j, ptr, "epi"), At(ptr, "epi"), n + space.m());
  try {
    return SetFn(n, std::move(space), std::move(epi));
  } catch (const Error& e) {
    Fail(e.code(), At(ptr, "epi"), Bare(e));
  }
}

ScalarFn ParseScalarFn(const Json& j, const std::string& ptr) {
  const int n = ParseInt(Field(j, ptr, "n"), At(ptr, "n"));
  if (n < 0) Fail(ErrorCode::kDimension, At(ptr, "n"), "n must be >= 0");
  Polyhedron epi = ParsePolyhedron(Field(j, ptr, "epi"), At(ptr, "epi"), n + 1);
  try {
    return ScalarFn(n, std::move(epi));
  } catch (const Error& e) {
    Fail(e.code(), At(ptr, "epi"), Bare(e));
  }
}

UpperSet ParseUpperSet(const Json& j, const std::string& ptr) {
  OrderedSpace space =
      ParseSpace(Field(j, ptr, "space", ErrorCode::kCone), At(ptr, "space"));
  Polyhedron set = ParsePolyhedron(Field(j, ptr, "set"), At(ptr, "set"), space.m());
  try {
    RequireUpperSet(space, set);
  } catch (const Error& e) {
    Fail(e.code(), At(ptr, "set"), Bare(e));
  }
  return {std::move(space), std::move(set)};
}

Matrix ParseLinMap(const Json& j, int rows, int cols, const std::string& ptr) {
  if (j.is_string() && j.get<std::string>() == "id") {
    if (rows != cols) Fail(ErrorCode::kDimension, ptr, "identity needs a square map");
    return Identity(rows);
  }
  if (j.is_object() && j.contains("T")) return ParseLinMap(j["T"], rows, cols, At(ptr, "T"));
  Matrix m = ParseMatrix(j, ptr, cols);
  if (static_cast<int>(m.size()) != rows) {
    Fail(ErrorCode::kDimension, ptr,
         "expected " + std::to_string(rows) + " rows, got " +
             std::to_string(m.size()));
  }
  return m;
}

DualTriple ParseTriple(const Json& j, int n, int m, const std::string& ptr) {
  DualTriple t;
  t.xstar = ParseVector(Field(j, ptr, "xstar"), At(ptr, "xstar"), n);
  t.zstar = ParseVector(Field(j, ptr, "zstar"), At(ptr, "zstar"), m);
  t.r = j.contains("r") ? ParseXReal(j["r"], At(ptr, "r")) : XReal(0);
  return t;
}

Json Emit(const Rational& q) { return ToString(q); }

Json Emit(const XReal& a) { return ToString(a); }

Json Emit(const Vector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(Emit(q));
  return out;
}

Json Emit(const Matrix& m) {
  Json out = Json::array();
  for (const Vector& row : m) out.push_back(Emit(row));
  return out;
}

Json Emit(const Polyhedron& p, bool vrep) {
  Json out;
  out["dim"] = p.dim();
  out["A"] = Emit(p.a());
  out["b"] = Emit(p.b());
  if (vrep) {
    out["vertices"] = Emit(p.vertices());
    out["rays"] = Emit(p.rays());
    out["lines"] = Emit(p.lines());
  }
  return out;
}

Json Emit(const OrderedSpace& s) {
  Json out;
  out["m"] = s.m();
  out["cone_rays"] = Emit(s.cone().AllRays());
  return out;
}

Json Emit(const SetFn& g, bool vrep) {
  Json out;
  out["version"] = kFormatVersion;
  out["space"] = Emit(g.space());
  out["n"] = g.n();
  out["epi"] = Emit(g.epi(), vrep);
  return out;
}

Json Emit(const ScalarFn& f, bool vrep) {
  Json out;
  out["n"] = f.n();
  out["epi"] = Emit(f.epi(), vrep);
  return out;
}

Json Emit(const HalfSpaceValue& h, bool vrep) {
  Json out;
  out["zstar"] = Emit(h.zstar);
  out["alpha"] = Emit(h.alpha);
  out["kind"] = h.is_empty() ? "empty" : h.is_universe() ? "universe" : "halfspace";
  out["set"] = Emit(h.ToPolyhedron(), vrep);
  return out;
}

Json Emit(const UpperSet& a, bool vrep) {
  Json out;
  out["space"] = Emit(a.space);
  out["set"] = Emit(a.set, vrep);
  return out;
}

Json ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUsage, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSchema, "/: " + path + " is not valid JSON: " + e.what());
  }
}

}  // namespace svconvex::io
