#include "asymlab/json_io.hpp"

#include <fstream>
#include <set>

namespace asymlab {
namespace {

void check_keys(const Json& j, const std::string& what, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw SchemaError(what + ": expected an object");
  for (const auto& item : j.items()) {
    if (!required.count(item.key()) && !optional.count(item.key()))
      throw SchemaError(what + ": unknown field '" + item.key() + "'");
  }
  for (const auto& key : required)
    if (!j.contains(key)) throw SchemaError(what + ": missing field '" + key + "'");
}

double parse_number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw SchemaError(what + ": expected a number");
  return j.get<double>();
}

}  // namespace

Vec parse_vec(const Json& j) {
  if (!j.is_array()) throw SchemaError("vector: expected an array of numbers");
  Vec v;
  for (const auto& e : j) v.push_back(parse_number(e, "vector entry"));
  return v;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json ext_real_json(const ExtReal& v) {
  if (v.is_infinite()) return Json("+inf");
  return Json(v.value());
}

Json norm_json(const PolyAsymNorm& p) {
  Json j;
  j["dim"] = p.dim();
  Json gens = Json::array();
  for (const auto& g : p.generators()) gens.push_back(vec_json(g));
  j["generators"] = gens;
  return j;
}

PolyAsymNorm parse_norm(const Json& j) {
  check_keys(j, "norm", {"dim", "generators"});
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw SchemaError("norm: 'dim' must be a positive integer");
  int dim = j["dim"].get<int>();
  if (!j["generators"].is_array() || j["generators"].empty())
    throw SchemaError("norm: 'generators' must be a nonempty array");
  Matrix gens;
  for (const auto& row : j["generators"]) {
    Vec g = parse_vec(row);
    if (static_cast<int>(g.size()) != dim)
      throw SchemaError("norm: generator length differs from 'dim'");
    gens.push_back(std::move(g));
  }
  try {
    return PolyAsymNorm(dim, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("norm: ") + e.what());
  }
}

TabularQuasiMetric parse_tabular(const Json& j) {
  check_keys(j, "tabular space", {"points", "matrix"});
  if (!j["points"].is_array() || j["points"].empty())
    throw SchemaError("tabular space: 'points' must be a nonempty array of labels");
  std::vector<std::string> labels;
  for (const auto& e : j["points"]) {
    if (!e.is_string()) throw SchemaError("tabular space: labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  if (!j["matrix"].is_array()) throw SchemaError("tabular space: 'matrix' must be an array");
  Matrix d;
  for (const auto& row : j["matrix"]) d.push_back(parse_vec(row));
  try {
    return TabularQuasiMetric(std::move(labels), std::move(d));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("tabular space: ") + e.what());
  }
}

namespace {

void parse_point_list(const Json& arr, const std::string& what, bool space_is_norm,
                      std::vector<Vec>& vecs, std::vector<std::string>& labels) {
  if (!arr.is_array()) throw SchemaError(what + ": expected an array of points");
  for (const auto& e : arr) {
    if (space_is_norm) {
      vecs.push_back(parse_vec(e));
    } else {
      if (!e.is_string()) throw SchemaError(what + ": tabular points must be labels");
      labels.push_back(e.get<std::string>());
    }
  }
}

}  // namespace

const PolyAsymNorm& InstanceBundle::norm(const std::string& id) const {
  auto it = norms.find(id);
  if (it == norms.end()) throw RefError("unresolved norm reference '" + id + "'");
  return it->second;
}

const TabularQuasiMetric& InstanceBundle::tabular(const std::string& id) const {
  auto it = tabulars.find(id);
  if (it == tabulars.end()) throw RefError("unresolved tabular-space reference '" + id + "'");
  return it->second;
}

const LinOperator& InstanceBundle::op(const std::string& id) const {
  auto it = operators.find(id);
  if (it == operators.end()) throw RefError("unresolved operator reference '" + id + "'");
  return it->second;
}

const Vec& InstanceBundle::functional(const std::string& id) const {
  auto it = functionals.find(id);
  if (it == functionals.end()) throw RefError("unresolved functional reference '" + id + "'");
  return it->second;
}

const SequenceSpec& InstanceBundle::sequence(const std::string& id) const {
  auto it = sequences.find(id);
  if (it == sequences.end()) throw RefError("unresolved sequence reference '" + id + "'");
  return it->second;
}

const PointSetSpec& InstanceBundle::point_set(const std::string& id) const {
  auto it = point_sets.find(id);
  if (it == point_sets.end()) throw RefError("unresolved point-set reference '" + id + "'");
  return it->second;
}

InstanceBundle load_bundle(const Json& doc) {
  check_keys(doc, "bundle", {},
             {"norms", "tabulars", "operators", "functionals", "sequences", "point_sets"});
  InstanceBundle b;

  if (doc.contains("norms"))
    for (const auto& item : doc["norms"].items())
      b.norms.emplace(item.key(), parse_norm(item.value()));

  if (doc.contains("tabulars"))
    for (const auto& item : doc["tabulars"].items()) {
      if (b.norms.count(item.key()))
        throw SchemaError("bundle: id '" + item.key() + "' used for both a norm and a table");
      b.tabulars.emplace(item.key(), parse_tabular(item.value()));
    }

  if (doc.contains("operators"))
    for (const auto& item : doc["operators"].items()) {
      const Json& j = item.value();
      check_keys(j, "operator '" + item.key() + "'", {"matrix", "domain", "codomain"});
      if (!j["domain"].is_string() || !j["codomain"].is_string())
        throw SchemaError("operator: 'domain' and 'codomain' must be norm ids");
      const PolyAsymNorm& dom = b.norm(j["domain"].get<std::string>());
      const PolyAsymNorm& cod = b.norm(j["codomain"].get<std::string>());
      Matrix m;
      for (const auto& row : j["matrix"]) m.push_back(parse_vec(row));
      try {
        b.operators.emplace(item.key(), LinOperator(std::move(m), dom, cod));
      } catch (const std::invalid_argument& e) {
        throw SchemaError("operator '" + item.key() + "': " + e.what());
      }
    }

  if (doc.contains("functionals"))
    for (const auto& item : doc["functionals"].items()) {
      check_keys(item.value(), "functional '" + item.key() + "'", {"covector"});
      b.functionals.emplace(item.key(), parse_vec(item.value()["covector"]));
    }

  auto space_is_norm = [&](const std::string& id, const std::string& what) {
    if (b.norms.count(id)) return true;
    if (b.tabulars.count(id)) return false;
    throw RefError(what + ": unresolved space reference '" + id + "'");
  };

  if (doc.contains("sequences"))
    for (const auto& item : doc["sequences"].items()) {
      const Json& j = item.value();
      const std::string what = "sequence '" + item.key() + "'";
      check_keys(j, what, {"space", "points"}, {"witness_pool"});
      if (!j["space"].is_string()) throw SchemaError(what + ": 'space' must be an id");
      SequenceSpec spec;
      spec.space = j["space"].get<std::string>();
      bool is_norm = space_is_norm(spec.space, what);
      parse_point_list(j["points"], what, is_norm, spec.vec_points, spec.label_points);
      if (j.contains("witness_pool")) {
        spec.pool_supplied = true;
        parse_point_list(j["witness_pool"], what, is_norm, spec.vec_pool, spec.label_pool);
      }
      b.sequences.emplace(item.key(), std::move(spec));
    }

  if (doc.contains("point_sets"))
    for (const auto& item : doc["point_sets"].items()) {
      const Json& j = item.value();
      const std::string what = "point set '" + item.key() + "'";
      check_keys(j, what, {"space", "points"});
      if (!j["space"].is_string()) throw SchemaError(what + ": 'space' must be an id");
      PointSetSpec spec;
      spec.space = j["space"].get<std::string>();
      bool is_norm = space_is_norm(spec.space, what);
      parse_point_list(j["points"], what, is_norm, spec.vec_points, spec.label_points);
      b.point_sets.emplace(item.key(), std::move(spec));
    }

  return b;
}

InstanceBundle load_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("JSON parse error: ") + e.what());
  }
  return load_bundle(doc);
}

}  // namespace asymlab
