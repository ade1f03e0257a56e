#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "asymlab/duality.hpp"
#include "asymlab/operators.hpp"
#include "asymlab/quasimetric.hpp"

namespace asymlab {

using Json = nlohmann::ordered_json;

/// Malformed document: parse failure, wrong shape, unknown fields, or a
/// value that cannot form the object it claims to be.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally fine but a cross-reference does not resolve.
struct RefError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PolyAsymNorm parse_norm(const Json& j);
TabularQuasiMetric parse_tabular(const Json& j);
Vec parse_vec(const Json& j);

Json vec_json(const Vec& v);
Json ext_real_json(const ExtReal& v);  // number, or "+inf"
Json norm_json(const PolyAsymNorm& p);

struct SequenceSpec {
  std::string space;
  std::vector<Vec> vec_points;
  std::vector<std::string> label_points;
  std::vector<Vec> vec_pool;
  std::vector<std::string> label_pool;
  bool pool_supplied = false;
};

struct PointSetSpec {
  std::string space;
  std::vector<Vec> vec_points;
  std::vector<std::string> label_points;
};

/// One self-contained experiment document: named norms, tabular spaces,
/// operators, functionals, sequences and point sets, cross-referenced by
/// string ids (unique across norms and tabular spaces).
struct InstanceBundle {
  std::map<std::string, PolyAsymNorm> norms;
  std::map<std::string, TabularQuasiMetric> tabulars;
  std::map<std::string, LinOperator> operators;
  std::map<std::string, Vec> functionals;
  std::map<std::string, SequenceSpec> sequences;
  std::map<std::string, PointSetSpec> point_sets;

  bool has_norm(const std::string& id) const { return norms.count(id) > 0; }
  bool has_tabular(const std::string& id) const { return tabulars.count(id) > 0; }

  const PolyAsymNorm& norm(const std::string& id) const;
  const TabularQuasiMetric& tabular(const std::string& id) const;
  const LinOperator& op(const std::string& id) const;
  const Vec& functional(const std::string& id) const;
  const SequenceSpec& sequence(const std::string& id) const;
  const PointSetSpec& point_set(const std::string& id) const;
};

InstanceBundle load_bundle(const Json& doc);
InstanceBundle load_bundle_file(const std::string& path);

}  // namespace asymlab
