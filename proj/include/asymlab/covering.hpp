#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "asymlab/quasimetric.hpp"

namespace asymlab {

enum class CentersFrom { Points, Pool };

/// Finite net certificate: every covered point y has an assigned center z
/// with rho(z, y) <= epsilon (center-to-point orientation).
template <class P>
struct EpsNetCertificate {
  std::vector<P> centers;
  std::vector<int> center_indices;  // positions of the centers in the pool
  double epsilon = 0.0;
  std::vector<P> covered;
  std::vector<int> assignment;  // covered[i] -> centers[assignment[i]]
  double max_deficit = 0.0;     // max over covered of min over centers
};

template <QuasiMetricSpace S>
bool verify_net(const S& space, const EpsNetCertificate<typename S::Point>& cert, double tol) {
  if (cert.assignment.size() != cert.covered.size()) return false;
  for (std::size_t i = 0; i < cert.covered.size(); ++i) {
    int c = cert.assignment[i];
    if (c < 0 || c >= static_cast<int>(cert.centers.size())) return false;
    if (!leq_tol(space.distance(cert.centers[c], cert.covered[i]), cert.epsilon, tol))
      return false;
  }
  return true;
}

/// Farthest-point greedy net. The loop repeatedly picks the uncovered point
/// whose distance from the chosen centers is largest (ties to the lowest
/// index) and covers it; the first center comes from the analogous
/// hardest-to-cover rule against the center pool. With CentersFrom::Pool the
/// covering center is the pool element nearest to the picked point.
template <QuasiMetricSpace S>
EpsNetCertificate<typename S::Point> greedy_net(
    const S& space, const std::vector<typename S::Point>& ys, double eps, CentersFrom mode,
    const std::vector<typename S::Point>* external_pool = nullptr) {
  using P = typename S::Point;
  if (eps < 0.0) throw std::invalid_argument("greedy_net: negative radius");
  if (mode == CentersFrom::Pool && (external_pool == nullptr || external_pool->empty()))
    throw std::invalid_argument("greedy_net: center pool required");
  const std::vector<P>& pool = mode == CentersFrom::Pool ? *external_pool : ys;
  const double inf = std::numeric_limits<double>::infinity();

  EpsNetCertificate<P> cert;
  cert.epsilon = eps;
  cert.covered = ys;
  if (ys.empty()) return cert;

  const int ny = static_cast<int>(ys.size());
  std::vector<bool> covered(ny, false);
  std::vector<double> dist_to_centers(ny, inf);
  int n_covered = 0;

  while (n_covered < ny) {
    int pick = -1;
    double pick_val = -inf;
    if (cert.centers.empty()) {
      for (int i = 0; i < ny; ++i) {
        double ecc = inf;
        for (std::size_t z = 0; z < pool.size(); ++z) {
          if (mode == CentersFrom::Points && static_cast<int>(z) == i) continue;
          ecc = std::min(ecc, space.distance(pool[z], ys[i]));
        }
        if (ecc > pick_val) {
          pick_val = ecc;
          pick = i;
        }
      }
    } else {
      for (int i = 0; i < ny; ++i) {
        if (covered[i]) continue;
        if (dist_to_centers[i] > pick_val) {
          pick_val = dist_to_centers[i];
          pick = i;
        }
      }
    }

    int center_idx;
    if (mode == CentersFrom::Points) {
      center_idx = pick;
    } else {
      center_idx = 0;
      double best = inf;
      for (std::size_t z = 0; z < pool.size(); ++z) {
        double d = space.distance(pool[z], ys[pick]);
        if (d < best) {
          best = d;
          center_idx = static_cast<int>(z);
        }
      }
      if (best > eps)
        throw std::runtime_error("greedy_net: pool cannot cover a point at this radius");
    }

    cert.centers.push_back(pool[center_idx]);
    cert.center_indices.push_back(center_idx);
    const P& c = cert.centers.back();
    for (int i = 0; i < ny; ++i) {
      double d = space.distance(c, ys[i]);
      dist_to_centers[i] = std::min(dist_to_centers[i], d);
      if (!covered[i] && d <= eps) {
        covered[i] = true;
        ++n_covered;
      }
    }
  }

  cert.assignment.assign(ny, 0);
  for (int i = 0; i < ny; ++i) {
    double best = inf;
    for (std::size_t c = 0; c < cert.centers.size(); ++c) {
      double d = space.distance(cert.centers[c], ys[i]);
      if (d < best) {
        best = d;
        cert.assignment[i] = static_cast<int>(c);
      }
    }
    cert.max_deficit = std::max(cert.max_deficit, best);
  }
  return cert;
}

namespace detail {

int exact_set_cover(const std::vector<std::uint32_t>& sets, std::uint32_t universe);

}  // namespace detail

/// Exact minimum number of centers whose balls cover ys (|ys| <= 20).
template <QuasiMetricSpace S>
int min_net_size(const S& space, const std::vector<typename S::Point>& ys, double eps,
                 const std::vector<typename S::Point>* external_pool = nullptr) {
  const int n = static_cast<int>(ys.size());
  if (n > 20) throw std::invalid_argument("min_net_size: exact solver capped at 20 points");
  if (n == 0) return 0;
  const std::vector<typename S::Point>& pool = external_pool ? *external_pool : ys;
  std::vector<std::uint32_t> balls;
  for (const auto& z : pool) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (space.distance(z, ys[i]) <= eps) mask |= (1u << i);
    balls.push_back(mask);
  }
  std::uint32_t universe = n == 32 ? ~0u : ((1u << n) - 1);
  std::uint32_t reach = 0;
  for (auto b : balls) reach |= b;
  if ((reach & universe) != universe)
    throw std::runtime_error("min_net_size: pool cannot cover the set at this radius");
  return detail::exact_set_cover(balls, universe);
}

template <class P>
struct CoverCertificate {
  std::vector<std::vector<int>> blocks;  // indices into the covered set
  double epsilon = 0.0;
};

/// Exact minimum number of blocks of diameter <= eps covering ys
/// (|ys| <= 16). The diameter runs over ordered pairs, so it is blind to
/// the orientation of the quasi-metric.
template <QuasiMetricSpace S>
int min_cover_size(const S& space, const std::vector<typename S::Point>& ys, double eps,
                   CoverCertificate<typename S::Point>* cert_out = nullptr) {
  const int n = static_cast<int>(ys.size());
  if (n > 16) throw std::invalid_argument("min_cover_size: exact solver capped at 16 points");
  if (n == 0) return 0;

  Matrix sym(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sym[i][j] = std::max(space.distance(ys[i], ys[j]), space.distance(ys[j], ys[i]));

  const std::uint32_t full = (n == 32 ? ~0u : ((1u << n) - 1));
  std::vector<char> ok(full + 1, 0);
  ok[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int i = __builtin_ctz(mask);
    std::uint32_t rest = mask & (mask - 1);
    if (!ok[rest]) continue;
    bool good = true;
    for (std::uint32_t r = rest; r; r &= (r - 1)) {
      int j = __builtin_ctz(r);
      if (sym[i][j] > eps) {
        good = false;
        break;
      }
    }
    ok[mask] = good;
  }

  std::vector<int> dp(full + 1, n + 1);
  std::vector<std::uint32_t> choice(full + 1, 0);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & ~(mask - 1);
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || !ok[sub]) continue;
      if (dp[mask ^ sub] + 1 < dp[mask]) {
        dp[mask] = dp[mask ^ sub] + 1;
        choice[mask] = sub;
      }
    }
  }

  if (cert_out) {
    cert_out->blocks.clear();
    cert_out->epsilon = eps;
    std::uint32_t mask = full;
    while (mask) {
      std::uint32_t sub = choice[mask];
      std::vector<int> block;
      for (std::uint32_t r = sub; r; r &= (r - 1)) block.push_back(__builtin_ctz(r));
      cert_out->blocks.push_back(block);
      mask ^= sub;
    }
  }
  return dp[full];
}

/// Deterministic greedy cover by diameter-<= eps blocks (any set size).
template <QuasiMetricSpace S>
CoverCertificate<typename S::Point> greedy_cover(const S& space,
                                                 const std::vector<typename S::Point>& ys,
                                                 double eps) {
  const int n = static_cast<int>(ys.size());
  CoverCertificate<typename S::Point> cover;
  cover.epsilon = eps;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<int> block{i};
    used[i] = true;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      bool fits = true;
      for (int k : block) {
        if (space.distance(ys[k], ys[j]) > eps || space.distance(ys[j], ys[k]) > eps) {
          fits = false;
          break;
        }
      }
      if (fits) {
        block.push_back(j);
        used[j] = true;
      }
    }
    cover.blocks.push_back(std::move(block));
  }
  return cover;
}

/// One representative per block turns a diameter cover into a net of the
/// same size and radius.
template <QuasiMetricSpace S>
EpsNetCertificate<typename S::Point> cover_to_net(const S& space,
                                                  const std::vector<typename S::Point>& ys,
                                                  const CoverCertificate<typename S::Point>& cover) {
  EpsNetCertificate<typename S::Point> net;
  net.epsilon = cover.epsilon;
  net.covered = ys;
  net.assignment.assign(ys.size(), -1);
  for (const auto& block : cover.blocks) {
    int rep = block.front();
    net.centers.push_back(ys[rep]);
    net.center_indices.push_back(rep);
    for (int idx : block)
      if (net.assignment[idx] < 0) net.assignment[idx] = static_cast<int>(net.centers.size()) - 1;
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (net.assignment[i] < 0) net.assignment[i] = 0;
    net.max_deficit =
        std::max(net.max_deficit, space.distance(net.centers[net.assignment[i]], ys[i]));
  }
  return net;
}

template <QuasiMetricSpace S>
std::pair<bool, EpsNetCertificate<typename S::Point>> is_precompact_sample(
    const S& space, const std::vector<typename S::Point>& ys, double eps) {
  auto cert = greedy_net(space, ys, eps, CentersFrom::Points);
  return {verify_net(space, cert, 1e-9), cert};
}

template <QuasiMetricSpace S>
std::pair<bool, CoverCertificate<typename S::Point>> is_totally_bounded_sample(
    const S& space, const std::vector<typename S::Point>& ys, double eps) {
  auto cover = greedy_cover(space, ys, eps);
  bool ok = true;
  for (const auto& block : cover.blocks)
    for (int i : block)
      for (int j : block)
        if (space.distance(ys[i], ys[j]) > eps) ok = false;
  return {ok, cover};
}

}  // namespace asymlab
