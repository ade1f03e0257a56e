#include "asymlab/audit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asymlab/covering.hpp"
#include "asymlab/duality.hpp"

namespace asymlab {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t instance) {
  return std::mt19937_64(splitmix(splitmix(seed) ^ splitmix(instance * 0x100000001b3ULL + 7)));
}

Vec random_vec(std::mt19937_64& rng, int dim, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vec v(dim);
  for (double& x : v) x = u(rng);
  return v;
}

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, double scale,
                     bool integer_entries) {
  Matrix m(rows, Vec(cols, 0.0));
  if (integer_entries) {
    std::uniform_int_distribution<int> u(-static_cast<int>(scale), static_cast<int>(scale));
    for (auto& row : m)
      for (double& x : row) x = static_cast<double>(u(rng));
  } else {
    std::uniform_real_distribution<double> u(-scale, scale);
    for (auto& row : m)
      for (double& x : row) x = u(rng);
  }
  return m;
}

PolyAsymNorm random_valid_norm(std::mt19937_64& rng, const NormGenOptions& opts) {
  std::uniform_int_distribution<int> count(opts.min_gens, opts.max_gens);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix gens = random_matrix(rng, count(rng), opts.dim, opts.entry_scale,
                                opts.integer_entries);
    try {
      PolyAsymNorm p(opts.dim, gens);
      if (p.validate().valid) return p;
      // Top up the span with the missing coordinate directions.
      Matrix padded = p.generators();
      for (int k = 0; k < opts.dim; ++k) {
        Vec e = zeros(opts.dim);
        e[k] = 1.0;
        padded.push_back(e);
        Vec me = zeros(opts.dim);
        me[k] = -1.0;
        padded.push_back(me);
        PolyAsymNorm q(opts.dim, padded);
        if (q.validate().valid) return q;
      }
    } catch (const std::invalid_argument&) {
      continue;  // all-zero draw; try again
    }
  }
  throw std::logic_error("random_valid_norm: exhausted attempts");
}

TabularQuasiMetric random_tabular(std::mt19937_64& rng, int n_points, bool symmetric) {
  NormGenOptions opts;
  opts.dim = 2;
  opts.min_gens = 2;
  opts.max_gens = 4;
  PolyAsymNorm p = random_valid_norm(rng, opts);
  if (symmetric) p = p.symmetrized();
  std::vector<Vec> pts;
  for (int i = 0; i < n_points; ++i) pts.push_back(random_vec(rng, 2, 3.0));
  std::vector<std::string> labels;
  Matrix d(n_points, Vec(n_points, 0.0));
  for (int i = 0; i < n_points; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (int j = 0; j < n_points; ++j)
      if (i != j) d[i][j] = p.eval(sub(pts[j], pts[i]));
  }
  return TabularQuasiMetric(std::move(labels), std::move(d));
}

namespace {

// Clipped samples of {x : p(x) <= 1, |x|_inf <= box}: interior grid plus
// the exact boundary (vertices and subdivided edges). Dims 1 and 2.
std::vector<Vec> clipped_ball_samples(const PolyAsymNorm& p, double box, double grid_pitch,
                                      double edge_pitch) {
  const int dim = p.dim();
  const Matrix& gens = p.generators();
  std::vector<Vec> out;
  auto inside = [&](const Vec& x) {
    for (const auto& g : gens)
      if (dot(g, x) > 1.0 + 1e-9) return false;
    for (double c : x)
      if (std::abs(c) > box + 1e-9) return false;
    return true;
  };

  if (dim == 1) {
    double lo = -box, hi = box;
    for (const auto& g : gens) {
      double a = g[0];
      if (a > 0.0) hi = std::min(hi, 1.0 / a);
      if (a < 0.0) lo = std::max(lo, 1.0 / a);
    }
    if (lo > hi) throw std::logic_error("clipped_ball_samples: empty interval");
    out.push_back({lo});
    for (double x = lo + grid_pitch; x < hi - 1e-12; x += grid_pitch) out.push_back({x});
    out.push_back({hi});
    return out;
  }
  if (dim != 2)
    throw std::invalid_argument("clipped_ball_samples: oracle supports dims 1 and 2");

  // Halfplane list: generators at rhs 1 plus the four box facets.
  Matrix rows = gens;
  Vec rhs(gens.size(), 1.0);
  for (int k = 0; k < 2; ++k)
    for (double s : {1.0, -1.0}) {
      Vec r = zeros(2);
      r[k] = s;
      rows.push_back(r);
      rhs.push_back(box);
    }

  // Polygon vertices: feasible pairwise intersections, walked by angle
  // around the interior point 0.
  std::vector<Vec> verts;
  const int m = static_cast<int>(rows.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (std::abs(det) < 1e-12) continue;
      Vec x = {(rhs[i] * rows[j][1] - rhs[j] * rows[i][1]) / det,
               (rows[i][0] * rhs[j] - rows[j][0] * rhs[i]) / det};
      bool ok = true;
      for (int k = 0; k < m && ok; ++k)
        if (dot(rows[k], x) > rhs[k] + 1e-7) ok = false;
      if (!ok) continue;
      bool dup = false;
      for (const auto& v : verts)
        if (std::abs(v[0] - x[0]) + std::abs(v[1] - x[1]) < 1e-9) {
          dup = true;
          break;
        }
      if (!dup) verts.push_back(x);
    }
  std::sort(verts.begin(), verts.end(), [](const Vec& a, const Vec& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });

  for (const auto& v : verts) out.push_back(v);
  const int nv = static_cast<int>(verts.size());
  for (int i = 0; i < nv; ++i) {
    const Vec& a = verts[i];
    const Vec& b = verts[(i + 1) % nv];
    double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    int pieces = static_cast<int>(len / edge_pitch);
    for (int t = 1; t < pieces; ++t) {
      double s = static_cast<double>(t) / pieces;
      out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
    }
  }
  for (double x = -box; x <= box + 1e-12; x += grid_pitch)
    for (double y = -box; y <= box + 1e-12; y += grid_pitch) {
      Vec v = {x, y};
      if (inside(v)) out.push_back(v);
    }
  return out;
}

}  // namespace

bool box_saturation_compact_oracle(const LinOperator& a, NormSelector mu, NormSelector nu,
                                   const BoxOracleParams& params) {
  PolyAsymNorm mun = select_norm(a.domain_norm(), mu);
  PolyAsymNorm nun = select_norm(a.codomain_norm(), nu);
  const int dim = mun.dim();
  if (dim > 2)
    throw std::invalid_argument("box_saturation_compact_oracle: dims 1 and 2 only");

  const double inner_grid = dim == 1 ? 0.03 : 0.125;
  const double outer_grid = dim == 1 ? 0.25 : 1.5;
  std::vector<Vec> inner = clipped_ball_samples(mun, params.inner_box, inner_grid, inner_grid);
  std::vector<Vec> outer = clipped_ball_samples(mun, params.outer_box, outer_grid, 1.0);

  std::vector<Vec> inner_images(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) inner_images[i] = a.apply(inner[i]);
  InducedQuasiMetric image_space{nun};
  EpsNetCertificate<Vec> net =
      greedy_net(image_space, inner_images, params.coverage / 2.0, CentersFrom::Points);

  for (const auto& z : outer) {
    Vec az = a.apply(z);
    bool covered = false;
    for (const auto& c : net.centers) {
      if (nun.eval(sub(az, c)) <= params.coverage) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

int dual_continuity_failures(const LinOperator& a, double eps, int n_pairs,
                             std::mt19937_64& rng, double tol) {
  ExtReal delta = dual_continuity_radius(a, eps);
  const PolyAsymNorm& q = a.codomain_norm();
  const PolyAsymNorm& p = a.domain_norm();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  int produced = 0;
  int guard = 0;
  while (produced < n_pairs && guard < 100 * n_pairs) {
    ++guard;
    Vec psi1 = random_vec(rng, q.dim(), 2.0);
    Vec step = random_vec(rng, q.dim(), 1.0);
    ExtReal sup = ball_support(q, step).value;
    if (sup.is_infinite()) continue;  // step leaves the dual cone
    Vec psi2;
    if (sup.value() > tol) {
      double factor = delta.is_infinite() ? 1.0 / sup.value()
                                          : delta.value() * unit(rng) / sup.value();
      psi2 = add(psi1, scaled(step, factor));
    } else {
      psi2 = add(psi1, step);
    }
    ++produced;
    ExtReal image_gap = dual_qdist(a.transpose_apply(psi1), a.transpose_apply(psi2), p);
    if (image_gap.is_infinite() || image_gap.value() > eps + tol * std::max(1.0, eps))
      ++failures;
  }
  if (produced < n_pairs)
    throw std::logic_error("dual_continuity_failures: could not sample enough pairs");
  return failures;
}

}  // namespace asymlab
