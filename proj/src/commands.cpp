#include "asymlab/commands.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "asymlab/audit.hpp"
#include "asymlab/covering.hpp"
#include "asymlab/duality.hpp"
#include "asymlab/property_suite.hpp"
#include "asymlab/sequences.hpp"

namespace asymlab {

const std::vector<std::string> kCommands = {
    "validate-norm", "eval",           "op-norm",      "check-bounded",
    "check-compact", "build-net",      "cover-vs-net", "classify-sequence",
    "polar",         "dual-op",        "schauder-check", "property-suite",
};

namespace {

constexpr const char* kVersion = "asymlab 0.1.0";

Json envelope(const std::string& command, const CliOptions& opts) {
  Json j;
  j["tool"] = kVersion;
  j["command"] = command;
  j["seed"] = opts.seed;
  j["tolerance"] = opts.tol;
  j["inputs"] = Json::object();
  return j;
}

NormSelector parse_selector(const std::string& s, const char* flag) {
  if (s == "base") return NormSelector::Base;
  if (s == "conjugate") return NormSelector::Conjugate;
  if (s == "symmetric") return NormSelector::Symmetric;
  throw UsageError(std::string(flag) + ": expected base|conjugate|symmetric, got '" + s + "'");
}

InstanceBundle need_bundle(const CliOptions& opts) {
  if (opts.input_path.empty()) throw UsageError("--input <bundle.json> is required");
  return load_bundle_file(opts.input_path);
}

const std::string& need_id(const std::string& id, const char* flag) {
  if (id.empty()) throw UsageError(std::string(flag) + " is required");
  return id;
}

double need_epsilon(const CliOptions& opts) {
  if (opts.epsilons.empty()) throw UsageError("--epsilon is required");
  return opts.epsilons.front();
}

Json net_cert_json(const EpsNetCertificate<Vec>& cert) {
  Json j;
  j["epsilon"] = cert.epsilon;
  j["size"] = cert.centers.size();
  Json centers = Json::array();
  for (const auto& c : cert.centers) centers.push_back(vec_json(c));
  j["centers"] = centers;
  j["assignment"] = cert.assignment;
  j["max_deficit"] = cert.max_deficit;
  return j;
}

Json net_cert_json_labels(const EpsNetCertificate<int>& cert, const TabularQuasiMetric& space) {
  Json j;
  j["epsilon"] = cert.epsilon;
  j["size"] = cert.centers.size();
  Json centers = Json::array();
  for (int c : cert.centers) centers.push_back(space.label(c));
  j["centers"] = centers;
  j["assignment"] = cert.assignment;
  j["max_deficit"] = cert.max_deficit;
  return j;
}

std::vector<int> labels_to_indices(const std::vector<std::string>& labels,
                                   const TabularQuasiMetric& space, const std::string& what) {
  std::vector<int> out;
  for (const auto& l : labels) {
    auto idx = space.index_of(l);
    if (!idx) throw RefError(what + ": unknown point label '" + l + "'");
    out.push_back(*idx);
  }
  return out;
}

std::string json_number(double v) { return Json(v).dump(); }

// ------------------------------------------------------------- commands --

Json cmd_validate_norm(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const PolyAsymNorm& p = b.norm(need_id(opts.norm_id, "--norm"));
  NormValidation v = p.validate(opts.tol);
  Json rep = envelope("validate-norm", opts);
  rep["inputs"]["norm"] = opts.norm_id;
  Json res;
  res["valid"] = v.valid;
  res["rank"] = v.rank;
  res["dim"] = p.dim();
  if (v.witness) res["witness"] = vec_json(*v.witness);
  res["detail"] = v.detail;
  rep["result"] = res;
  return rep;
}

Json cmd_eval(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const PolyAsymNorm& p = b.norm(need_id(opts.norm_id, "--norm"));
  if (opts.point_literal.empty()) throw UsageError("--point '[...]' is required");
  Json pj = Json::parse(opts.point_literal, nullptr, false);
  if (pj.is_discarded()) throw UsageError("--point: not a JSON array");
  Vec x = parse_vec(pj);
  if (static_cast<int>(x.size()) != p.dim())
    throw UsageError("--point: dimension mismatch with the norm");
  Json rep = envelope("eval", opts);
  rep["inputs"]["norm"] = opts.norm_id;
  rep["inputs"]["point"] = vec_json(x);
  rep["result"]["value"] = p.eval(x);
  return rep;
}

Json cmd_op_norm(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const LinOperator& a = b.op(need_id(opts.op_id, "--op"));
  NormSelector mu = parse_selector(opts.mu, "--mu");
  NormSelector nu = parse_selector(opts.nu, "--nu");
  OpNormDetail d = op_norm_detail(a, mu, nu);
  Json rep = envelope("op-norm", opts);
  rep["inputs"]["op"] = opts.op_id;
  rep["inputs"]["mu"] = opts.mu;
  rep["inputs"]["nu"] = opts.nu;
  Json res;
  res["value"] = ext_real_json(d.value);
  if (d.maximizer) res["maximizer"] = vec_json(*d.maximizer);
  if (d.domain_ray) res["unbounded_ray"] = vec_json(*d.domain_ray);
  if (d.generator_index >= 0) res["generator_index"] = d.generator_index;
  rep["result"] = res;
  return rep;
}

Json cmd_check_bounded(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const LinOperator& a = b.op(need_id(opts.op_id, "--op"));
  BoundednessReport r =
      is_bounded(a, parse_selector(opts.mu, "--mu"), parse_selector(opts.nu, "--nu"));
  Json rep = envelope("check-bounded", opts);
  rep["inputs"]["op"] = opts.op_id;
  rep["inputs"]["mu"] = opts.mu;
  rep["inputs"]["nu"] = opts.nu;
  rep["result"]["bounded"] = r.bounded;
  rep["result"]["beta"] = ext_real_json(r.beta);
  return rep;
}

Json cmd_check_compact(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const LinOperator& a = b.op(need_id(opts.op_id, "--op"));
  NormSelector mu = parse_selector(opts.mu, "--mu");
  NormSelector nu = parse_selector(opts.nu, "--nu");
  CompactnessVerdict v = is_compact(a, mu, nu);
  Json rep = envelope("check-compact", opts);
  rep["inputs"]["op"] = opts.op_id;
  rep["inputs"]["mu"] = opts.mu;
  rep["inputs"]["nu"] = opts.nu;
  Json res;
  res["compact"] = v.compact;
  if (v.recession_witness) {
    res["witness_ray"] = vec_json(*v.recession_witness);
    res["witness_growth"] = v.witness_growth;
  }
  if (v.compact && !opts.epsilons.empty()) {
    SamplePlan plan;
    plan.seed = opts.seed;
    OperatorBallNet net = operator_ball_net(a, mu, nu, opts.epsilons.front(), plan);
    res["image_net"] = net_cert_json(net.net);
    res["image_net"]["sample_count"] = net.domain_sample.size();
  }
  rep["result"] = res;
  return rep;
}

Json cmd_build_net(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const PointSetSpec& spec = b.point_set(need_id(opts.set_id, "--set"));
  double eps = need_epsilon(opts);
  CentersFrom mode;
  if (opts.centers_from == "self")
    mode = CentersFrom::Points;
  else if (opts.centers_from == "pool")
    mode = CentersFrom::Pool;
  else
    throw UsageError("--centers-from: expected self|pool");

  Json rep = envelope("build-net", opts);
  rep["inputs"]["set"] = opts.set_id;
  rep["inputs"]["epsilon"] = eps;
  rep["inputs"]["centers_from"] = opts.centers_from;

  if (b.has_norm(spec.space)) {
    InducedQuasiMetric rho{b.norm(spec.space)};
    const std::vector<Vec>* pool = nullptr;
    std::vector<Vec> pool_data;
    if (mode == CentersFrom::Pool) {
      const PointSetSpec& ps = b.point_set(need_id(opts.pool_id, "--pool"));
      if (ps.space != spec.space) throw UsageError("--pool: pool lives in another space");
      pool_data = ps.vec_points;
      pool = &pool_data;
    }
    auto cert = greedy_net(rho, spec.vec_points, eps, mode, pool);
    rep["result"]["net"] = net_cert_json(cert);
    rep["result"]["verified"] = verify_net(rho, cert, opts.tol);
    if (opts.exact)
      rep["result"]["exact_size"] = min_net_size(rho, spec.vec_points, eps, pool);
  } else {
    const TabularQuasiMetric& t = b.tabular(spec.space);
    std::vector<int> pts = labels_to_indices(spec.label_points, t, "build-net");
    const std::vector<int>* pool = nullptr;
    std::vector<int> pool_data;
    if (mode == CentersFrom::Pool) {
      const PointSetSpec& ps = b.point_set(need_id(opts.pool_id, "--pool"));
      if (ps.space != spec.space) throw UsageError("--pool: pool lives in another space");
      pool_data = labels_to_indices(ps.label_points, t, "build-net pool");
      pool = &pool_data;
    }
    auto cert = greedy_net(t, pts, eps, mode, pool);
    rep["result"]["net"] = net_cert_json_labels(cert, t);
    rep["result"]["verified"] = verify_net(t, cert, opts.tol);
    if (opts.exact) rep["result"]["exact_size"] = min_net_size(t, pts, eps, pool);
  }
  return rep;
}

template <QuasiMetricSpace S>
Json sweep_rows(const S& space, const std::vector<typename S::Point>& pts,
                std::vector<double> epsilons) {
  if (epsilons.empty()) {
    std::set<double> values;
    for (const auto& a : pts)
      for (const auto& b : pts) {
        double d = std::max(space.distance(a, b), space.distance(b, a));
        if (d > 0.0) values.insert(d);
      }
    int stride = std::max<int>(1, static_cast<int>(values.size()) / 12);
    int i = 0;
    for (double v : values) {
      if (i % stride == 0) epsilons.push_back(v);
      ++i;
    }
    if (epsilons.empty()) epsilons.push_back(1.0);
  }
  std::sort(epsilons.begin(), epsilons.end());
  Json rows = Json::array();
  for (double eps : epsilons) {
    Json row;
    row["epsilon"] = eps;
    row["net_size_greedy"] = greedy_net(space, pts, eps, CentersFrom::Points).centers.size();
    row["net_size_exact"] = min_net_size(space, pts, eps);
    row["cover_size_exact"] = min_cover_size(space, pts, eps);
    rows.push_back(row);
  }
  return rows;
}

CommandOutcome cmd_cover_vs_net(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const PointSetSpec& spec = b.point_set(need_id(opts.set_id, "--set"));
  Json rows;
  if (b.has_norm(spec.space)) {
    if (spec.vec_points.size() > 16)
      throw UsageError("cover-vs-net: exact solvers capped at 16 points");
    InducedQuasiMetric rho{b.norm(spec.space)};
    rows = sweep_rows(rho, spec.vec_points, opts.epsilons);
  } else {
    const TabularQuasiMetric& t = b.tabular(spec.space);
    std::vector<int> pts = labels_to_indices(spec.label_points, t, "cover-vs-net");
    if (pts.size() > 16) throw UsageError("cover-vs-net: exact solvers capped at 16 points");
    rows = sweep_rows(t, pts, opts.epsilons);
  }

  CommandOutcome out;
  if (opts.format == "csv") {
    out.is_csv = true;
    std::string csv = "epsilon,net_size_greedy,net_size_exact,cover_size_exact\n";
    for (const auto& row : rows) {
      csv += json_number(row["epsilon"].get<double>());
      csv += "," + std::to_string(row["net_size_greedy"].get<long long>());
      csv += "," + std::to_string(row["net_size_exact"].get<long long>());
      csv += "," + std::to_string(row["cover_size_exact"].get<long long>());
      csv += "\n";
    }
    out.csv = csv;
    return out;
  }
  Json rep = envelope("cover-vs-net", opts);
  rep["inputs"]["set"] = opts.set_id;
  rep["result"]["rows"] = rows;
  out.report = rep;
  return out;
}

template <QuasiMetricSpace S>
Json notion_rows(const S& space, const SequencePrefix<typename S::Point>& prefix, double eps,
                 const std::function<Json(const typename S::Point&)>& point_json) {
  auto report = classify(space, prefix, eps);
  Json notions = Json::array();
  for (int i = 0; i < 7; ++i) {
    auto notion = static_cast<CauchyNotion>(i);
    const auto& r = report[notion];
    Json row;
    row["notion"] = notion_name(notion);
    row["verdict"] = r.verdict == Verdict::Holds
                         ? "holds"
                         : (r.verdict == Verdict::Fails ? "fails" : "undecidable");
    if (r.start_index) row["start_index"] = *r.start_index;
    if (r.witness_point) row["witness"] = point_json(*r.witness_point);
    if (r.violating_pair) {
      row["violating_pair"] = Json::array({r.violating_pair->first, r.violating_pair->second});
      row["violating_distance"] = r.violating_distance;
    }
    notions.push_back(row);
  }
  auto chain = check_chain(report);
  Json res;
  res["horizon"] = report.horizon;
  res["epsilon"] = eps;
  res["witness_pool_empty"] = report.pool_empty;
  res["notions"] = notions;
  res["chain_ok"] = chain.ok;
  if (!chain.ok) res["violated_link"] = chain.violated_link;
  return res;
}

Json cmd_classify_sequence(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const SequenceSpec& spec = b.sequence(need_id(opts.sequence_id, "--sequence"));
  double eps = need_epsilon(opts);
  Json rep = envelope("classify-sequence", opts);
  rep["inputs"]["sequence"] = opts.sequence_id;
  rep["inputs"]["epsilon"] = eps;
  if (b.has_norm(spec.space)) {
    InducedQuasiMetric rho{b.norm(spec.space)};
    SequencePrefix<Vec> prefix =
        spec.pool_supplied ? SequencePrefix<Vec>::with_pool(spec.vec_points, spec.vec_pool)
                           : SequencePrefix<Vec>::with_default_pool(spec.vec_points);
    rep["result"] = notion_rows(rho, prefix, eps,
                                std::function<Json(const Vec&)>(
                                    [](const Vec& v) { return vec_json(v); }));
  } else {
    const TabularQuasiMetric& t = b.tabular(spec.space);
    std::vector<int> pts = labels_to_indices(spec.label_points, t, "classify-sequence");
    std::vector<int> pool = labels_to_indices(spec.label_pool, t, "classify-sequence pool");
    SequencePrefix<int> prefix = spec.pool_supplied
                                     ? SequencePrefix<int>::with_pool(pts, pool)
                                     : SequencePrefix<int>::with_default_pool(pts);
    rep["result"] = notion_rows(t, prefix, eps,
                                std::function<Json(const int&)>(
                                    [&t](const int& i) { return Json(t.label(i)); }));
  }
  return rep;
}

Json cmd_polar(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const PolyAsymNorm& p = b.norm(need_id(opts.norm_id, "--norm"));
  PolarBall ball = polar(p);
  Json rep = envelope("polar", opts);
  rep["inputs"]["norm"] = opts.norm_id;
  Json verts = Json::array();
  for (const auto& v : ball.vertices) verts.push_back(vec_json(v));
  rep["result"]["vertices"] = verts;
  rep["result"]["vertex_check_passed"] = ball.vertex_check_passed;
  return rep;
}

Json cmd_dual_op(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const LinOperator& a = b.op(need_id(opts.op_id, "--op"));
  const Vec& psi = b.functional(need_id(opts.functional_id, "--functional"));
  if (static_cast<int>(psi.size()) != a.rows())
    throw UsageError("dual-op: functional must act on the operator codomain");
  Json rep = envelope("dual-op", opts);
  rep["inputs"]["op"] = opts.op_id;
  rep["inputs"]["functional"] = opts.functional_id;
  rep["result"]["covector"] = vec_json(dual_operator(a, psi));
  rep["result"]["norm"] = ext_real_json(func_norm(dual_operator(a, psi), a.domain_norm()));
  return rep;
}

Json cmd_schauder_check(const CliOptions& opts) {
  InstanceBundle b = need_bundle(opts);
  const LinOperator& a = b.op(need_id(opts.op_id, "--op"));
  double eps = need_epsilon(opts);
  SchauderCertificate cert;
  try {
    cert = schauder_certificate(a, eps, opts.grid_density, 4);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json rep = envelope("schauder-check", opts);
  rep["inputs"]["op"] = opts.op_id;
  Json res;
  res["epsilon"] = cert.epsilon;
  res["radius"] = cert.radius;
  Json net = Json::array();
  for (const auto& f : cert.net) net.push_back(vec_json(f));
  res["net"] = net;
  res["net_size"] = cert.net.size();
  res["max_deficit"] = cert.max_deficit;
  res["samples"] = cert.sample_count;
  res["verified"] = cert.max_deficit <= cert.radius + opts.tol;
  rep["result"] = res;
  return rep;
}

Json cmd_property_suite(const CliOptions& opts) {
  SuiteReport suite = run_property_suite(opts.seed, opts.tol, opts.jobs);
  Json rep = envelope("property-suite", opts);
  rep["result"] = suite_report_json(suite);
  return rep;
}

}  // namespace

CommandOutcome run_command(const std::string& command, const CliOptions& opts) {
  CommandOutcome out;
  if (command == "validate-norm") out.report = cmd_validate_norm(opts);
  else if (command == "eval") out.report = cmd_eval(opts);
  else if (command == "op-norm") out.report = cmd_op_norm(opts);
  else if (command == "check-bounded") out.report = cmd_check_bounded(opts);
  else if (command == "check-compact") out.report = cmd_check_compact(opts);
  else if (command == "build-net") out.report = cmd_build_net(opts);
  else if (command == "cover-vs-net") return cmd_cover_vs_net(opts);
  else if (command == "classify-sequence") out.report = cmd_classify_sequence(opts);
  else if (command == "polar") out.report = cmd_polar(opts);
  else if (command == "dual-op") out.report = cmd_dual_op(opts);
  else if (command == "schauder-check") out.report = cmd_schauder_check(opts);
  else if (command == "property-suite") out.report = cmd_property_suite(opts);
  else throw UsageError("unknown command '" + command + "'");
  return out;
}

}  // namespace asymlab
