#include "asymlab/duality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "asymlab/covering.hpp"
#include "asymlab/lp.hpp"

namespace asymlab {

ExtReal func_norm(const Vec& covector, const PolyAsymNorm& p) {
  return ball_support(p, covector).value;
}

PolarBall polar(const PolyAsymNorm& p) {
  PolarBall ball{p, {}, false};
  ball.vertices.push_back(zeros(p.dim()));
  for (const auto& g : p.generators()) ball.vertices.push_back(g);
  ball.vertex_check_passed = true;
  for (const auto& v : ball.vertices) {
    ExtReal sup = ball_support(p, v).value;
    if (sup.is_infinite() || sup.value() > 1.0 + 1e-7) {
      ball.vertex_check_passed = false;
      break;
    }
  }
  return ball;
}

bool polar_contains(const PolarBall& ball, const Vec& covector, double tol) {
  const int dim = ball.base.dim();
  if (static_cast<int>(covector.size()) != dim)
    throw std::invalid_argument("polar_contains: dimension mismatch");
  const Matrix& gens = ball.base.generators();
  const int m = static_cast<int>(gens.size());
  // lambda >= 0, sum lambda <= 1, sum lambda_i g_i = covector (within tol).
  Matrix rows;
  Vec rhs;
  for (int k = 0; k < dim; ++k) {
    Vec row(m, 0.0);
    for (int i = 0; i < m; ++i) row[i] = gens[i][k];
    double slack = tol * std::max(1.0, std::abs(covector[k]));
    rows.push_back(row);
    rhs.push_back(covector[k] + slack);
    rows.push_back(scaled(row, -1.0));
    rhs.push_back(-covector[k] + slack);
  }
  rows.push_back(Vec(m, 1.0));
  rhs.push_back(1.0);
  return lp::feasible_nonneg(rows, rhs);
}

Vec dual_operator(const LinOperator& a, const Vec& psi) {
  if (static_cast<int>(psi.size()) != a.rows())
    throw std::invalid_argument("dual_operator: covector must act on the codomain");
  return a.transpose_apply(psi);
}

ExtReal dual_qdist(const Vec& phi1, const Vec& phi2, const PolyAsymNorm& p) {
  return ball_support(p, sub(phi2, phi1)).value;
}

bool wflat_contains(const WFlatNeighborhood& nbhd, const Vec& phi) {
  for (const auto& x : nbhd.test_points)
    if (dot(phi, x) - dot(nbhd.anchor, x) > nbhd.epsilon) return false;
  return true;
}

bool wflat_pair_within(const std::vector<Vec>& test_points, double eps, const Vec& phi1,
                       const Vec& phi2) {
  for (const auto& x : test_points)
    if (dot(phi2, x) - dot(phi1, x) > eps) return false;
  return true;
}

ExtReal dual_continuity_radius(const LinOperator& a, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("dual_continuity_radius: eps must be positive");
  ExtReal norm = op_norm(a, NormSelector::Base, NormSelector::Base);
  if (norm.is_infinite())
    throw std::invalid_argument("dual_continuity_radius: operator is unbounded");
  if (norm.value() == 0.0) return ExtReal::infinity();  // zero operator: any radius works
  return ExtReal(eps / norm.value());
}

namespace {

void compositions(int total, int parts, Vec& cur,
                  const std::function<void(const Vec&)>& fn) {
  if (parts == 1) {
    cur.push_back(static_cast<double>(total));
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int take = 0; take <= total; ++take) {
    cur.push_back(static_cast<double>(take));
    compositions(total - take, parts - 1, cur, fn);
    cur.pop_back();
  }
}

void vertex_subsets(int count, int pick, int start, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == pick) {
    fn(cur);
    return;
  }
  for (int i = start; i < count; ++i) {
    cur.push_back(i);
    vertex_subsets(count, pick, i + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Vec> polar_grid_sample(const PolyAsymNorm& p, int density, int subset_cap) {
  if (density < 1) throw std::invalid_argument("polar_grid_sample: density must be positive");
  PolarBall ball = polar(p);
  const auto& verts = ball.vertices;
  const int nv = static_cast<int>(verts.size());
  const int pick = std::min(subset_cap, nv);

  std::map<Vec, bool> seen;
  std::vector<Vec> out;
  auto emit = [&](const std::vector<int>& subset, const Vec& weights) {
    Vec f = zeros(p.dim());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (weights[i] == 0.0) continue;
      f = add(f, scaled(verts[subset[i]], weights[i] / density));
    }
    if (!seen.count(f)) {
      seen[f] = true;
      out.push_back(f);
    }
  };

  std::vector<int> subset;
  vertex_subsets(nv, pick, 0, subset, [&](const std::vector<int>& s) {
    Vec weights;
    compositions(density, pick, weights, [&](const Vec& w) { emit(s, w); });
  });
  return out;
}

SchauderCertificate schauder_certificate(const LinOperator& a, double eps, int density,
                                         int subset_cap) {
  if (eps <= 0.0) throw std::invalid_argument("schauder_certificate: eps must be positive");
  CompactnessVerdict cv = is_compact(a, NormSelector::Base, NormSelector::Base);
  if (!cv.compact)
    throw std::invalid_argument(
        "schauder_certificate: requires a (p,q)-compact operator; the image of the unit "
        "ball is not precompact along a recession direction");

  std::vector<Vec> psis = polar_grid_sample(a.codomain_norm(), density, subset_cap);
  std::map<Vec, bool> seen;
  std::vector<Vec> pulled;
  for (const auto& psi : psis) {
    Vec phi = a.transpose_apply(psi);
    if (!seen.count(phi)) {
      seen[phi] = true;
      pulled.push_back(std::move(phi));
    }
  }

  DualFunctionalSpace dual(a.domain_norm());
  EpsNetCertificate<Vec> net = greedy_net(dual, pulled, 3.0 * eps, CentersFrom::Points);

  SchauderCertificate cert;
  cert.epsilon = eps;
  cert.radius = 3.0 * eps;
  cert.net = net.centers;
  cert.assignment = net.assignment;
  cert.sample_count = static_cast<int>(pulled.size());
  cert.max_deficit = net.max_deficit;
  return cert;
}

}  // namespace asymlab
