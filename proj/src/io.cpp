#include "mnl/io.hpp"

#include <fstream>
#include <sstream>

#include "mnl/errors.hpp"

namespace mnl {
namespace {

constexpr std::string_view kBuiltin = "builtin:";

template <class F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

void require_keys(const Json& j, std::initializer_list<std::string_view> required, std::string_view what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) throw InputError(std::string(what) + " is missing \"" + std::string(key) + "\"");
  }
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw InputError("generator matrix must have " + std::to_string(n) + " rows");
  }
  QMatrix m(n, n);
  for (int a = 0; a < n; ++a) {
    const Json& row = j[a];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw InputError("generator matrix row must have " + std::to_string(n) + " entries");
    }
    for (int b = 0; b < n; ++b) m(a, b) = rational_from_json(row[b]);
  }
  return m;
}

std::string_view builtin_name(std::string_view spec) {
  return spec.substr(kBuiltin.size());
}

bool is_builtin(std::string_view spec) { return spec.starts_with(kBuiltin); }

}  // namespace

Json rational_to_json(const Rational& q) {
  if (q.is_integer()) return q.num();
  return Json::array({q.num(), q.den()});
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    const auto den = j[1].get<std::int64_t>();
    if (den == 0) throw InputError("rational with zero denominator");
    return Rational(j[0].get<std::int64_t>(), den);
  }
  throw InputError("expected an integer or [num, den], got " + j.dump());
}

Json tensor_to_json(const StructureTensor& c) {
  Json entries = Json::array();
  for (const auto& e : c.upper_entries()) {
    entries.push_back(Json::array({e.i + 1, e.j + 1, e.k + 1, e.value.num(), e.value.den()}));
  }
  return Json{{"dim", c.dim()}, {"entries", std::move(entries)}};
}

StructureTensor tensor_from_json(const Json& j) {
  return guarded("structure tensor", [&] {
    require_keys(j, {"dim", "entries"}, "structure tensor");
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw InputError("structure tensor dim must be positive");
    std::vector<StructureTensor::Entry> entries;
    for (const Json& e : j.at("entries")) {
      if (!e.is_array() || (e.size() != 4 && e.size() != 5)) {
        throw InputError("tensor entry must be [i, j, k, num] or [i, j, k, num, den], got " + e.dump());
      }
      const int i = e[0].get<int>(), a = e[1].get<int>(), b = e[2].get<int>();
      for (int v : {i, a, b}) {
        if (v < 1 || v > dim) throw InputError("tensor index out of range in " + e.dump());
      }
      const std::int64_t num = e[3].get<std::int64_t>();
      const std::int64_t den = e.size() == 5 ? e[4].get<std::int64_t>() : 1;
      if (den == 0) throw InputError("zero denominator in " + e.dump());
      entries.push_back({i - 1, a - 1, b - 1, Rational(num, den)});
    }
    return StructureTensor::from_entries(dim, entries);
  });
}

Json cayley_to_json(const CayleyTable& t) {
  Json rows = Json::array();
  for (int g = 0; g < t.order(); ++g) {
    Json row = Json::array();
    for (int h = 0; h < t.order(); ++h) row.push_back(t.mul(g, h));
    rows.push_back(std::move(row));
  }
  return Json{{"order", t.order()}, {"table", std::move(rows)}, {"names", t.names()}};
}

CayleyTable cayley_from_json(const Json& j) {
  return guarded("cayley table", [&] {
    require_keys(j, {"order", "table"}, "cayley table");
    const int order = j.at("order").get<int>();
    const Json& rows = j.at("table");
    if (order < 1 || !rows.is_array() || rows.size() != static_cast<std::size_t>(order)) {
      throw InputError("cayley table must have \"order\" rows");
    }
    std::vector<int> flat;
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(order)) {
        throw InputError("cayley table rows must have \"order\" entries");
      }
      for (const Json& v : row) flat.push_back(v.get<int>());
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return CayleyTable(order, std::move(flat), std::move(names));
  });
}

Json generators_to_json(const GeneratorSet& g) {
  Json S = Json::array(), T = Json::array();
  for (const auto& m : g.S) S.push_back(matrix_to_json(m));
  for (const auto& m : g.T) T.push_back(matrix_to_json(m));
  return Json{{"r", g.r}, {"dim", g.dim}, {"S", std::move(S)}, {"T", std::move(T)}};
}

GeneratorSet generators_from_json(const Json& j) {
  return guarded("generator set", [&] {
    require_keys(j, {"r", "dim", "S", "T"}, "generator set");
    GeneratorSet g;
    g.r = j.at("r").get<int>();
    g.dim = j.at("dim").get<int>();
    if (g.r < 1 || g.dim < 1) throw InputError("generator set needs r >= 1 and dim >= 1");
    for (const char* key : {"S", "T"}) {
      const Json& list = j.at(key);
      if (!list.is_array() || list.size() != static_cast<std::size_t>(g.r)) {
        throw InputError(std::string("generator list ") + key + " must have r matrices");
      }
      auto& out = key[0] == 'S' ? g.S : g.T;
      for (const Json& m : list) out.push_back(matrix_from_json(m, g.dim));
    }
    g.validate();
    return g;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return guarded(path, [&] { return Json::parse(buf.str()); });
}

StructureTensor resolve_tensor(std::string_view spec) {
  if (is_builtin(spec)) return catalog_algebra(builtin_name(spec));
  return tensor_from_json(read_json_file(std::string(spec)));
}

CayleyTable resolve_loop(std::string_view spec) {
  if (is_builtin(spec)) return catalog_loop(builtin_name(spec));
  return cayley_from_json(read_json_file(std::string(spec)));
}

GeneratorSet resolve_generators(std::string_view spec) {
  if (is_builtin(spec)) {
    const auto name = builtin_name(spec);
    if (name == "octonion") return octonion_lr_generators();
    if (name == "quaternion") return quaternion_lr_generators();
    throw InputError("unknown builtin generators '" + std::string(name) + "' (octonion, quaternion)");
  }
  return generators_from_json(read_json_file(std::string(spec)));
}

StructureTensor default_tensor_for(std::string_view generators_spec) {
  if (generators_spec == "builtin:octonion") return catalog_algebra("m7");
  // [i, j] = 2k for the quaternion units
  if (generators_spec == "builtin:quaternion") return catalog_algebra("su2").scaled(2);
  throw InputError("no default structure tensor for '" + std::string(generators_spec) + "'; pass --tensor");
}

Json report_to_json(const CheckReport& r) {
  Json j{{"property", r.property}, {"pass", r.passed}};
  if (!r.passed) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json glc_to_json(const GLCReport& r) {
  Json families = Json::array();
  for (const auto& f : r.families) families.push_back(report_to_json(f));
  return Json{{"pass", r.passed()}, {"families", std::move(families)}};
}

Json etc_to_json(const ETCReport& r) {
  Json conventions = Json::object();
  for (const auto& [key, value] : r.conventions) conventions[key] = value;
  Json equations = Json::array();
  for (const auto& e : r.equations) {
    Json entry{{"eq", e.property}, {"pass", e.passed}};
    if (r.is_informational(e.property)) entry["informational"] = true;
    if (!e.passed) entry["witness"] = e.witness;
    if (!e.detail.empty()) entry["detail"] = e.detail;
    equations.push_back(std::move(entry));
  }
  return Json{{"conventions", std::move(conventions)}, {"pass", r.passed()}, {"equations", std::move(equations)}};
}

}  // namespace mnl
