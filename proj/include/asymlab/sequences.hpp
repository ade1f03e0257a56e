#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asymlab/quasimetric.hpp"

namespace asymlab {

enum class CauchyNotion : int {
  LeftRho = 0,
  RightRho = 1,
  Rho = 2,
  LeftK = 3,
  RightK = 4,
  WeaklyLeftK = 5,
  WeaklyRightK = 6,
};

inline const char* notion_name(CauchyNotion n) {
  switch (n) {
    case CauchyNotion::LeftRho: return "left-rho";
    case CauchyNotion::RightRho: return "right-rho";
    case CauchyNotion::Rho: return "rho";
    case CauchyNotion::LeftK: return "left-K";
    case CauchyNotion::RightK: return "right-K";
    case CauchyNotion::WeaklyLeftK: return "weakly-left-K";
    case CauchyNotion::WeaklyRightK: return "weakly-right-K";
  }
  return "?";
}

enum class Verdict { Holds, Fails, Undecidable };

template <class P>
struct NotionResult {
  Verdict verdict = Verdict::Fails;
  std::optional<int> start_index;                    // witnessing n0, 1-based
  std::optional<P> witness_point;                    // the x of the rho notions
  std::optional<std::pair<int, int>> violating_pair; // (k, n), 1-based
  double violating_distance = 0.0;
};

/// Finite prefix of a sequence plus the witness pool against which the
/// existential point of the rho-Cauchy notions is resolved.
template <class P>
struct SequencePrefix {
  std::vector<P> points;
  std::vector<P> witness_pool;
  bool pool_supplied = false;  // false: pool defaulted to the points

  static SequencePrefix with_default_pool(std::vector<P> pts) {
    SequencePrefix s;
    s.witness_pool = pts;
    s.points = std::move(pts);
    return s;
  }
  static SequencePrefix with_pool(std::vector<P> pts, std::vector<P> pool) {
    SequencePrefix s;
    s.points = std::move(pts);
    s.witness_pool = std::move(pool);
    s.pool_supplied = true;
    return s;
  }
};

/// Verdicts are truncations at the horizon: "holds at tolerance eps up to
/// index N". Every notion quantifies its start index over 1..N-1 so the
/// final tail is never the empty statement.
template <class P>
struct CauchyReport {
  double epsilon = 0.0;
  int horizon = 0;
  bool pool_empty = false;
  std::array<NotionResult<P>, 7> notions;

  const NotionResult<P>& operator[](CauchyNotion n) const {
    return notions[static_cast<int>(n)];
  }
  NotionResult<P>& operator[](CauchyNotion n) { return notions[static_cast<int>(n)]; }
};

namespace detail {
// The definitions use strict <; the guard keeps floating ties out.
constexpr double kStrictGuard = 1e-12;
inline bool strictly_below(double d, double eps) { return d < eps - kStrictGuard; }
}  // namespace detail

template <QuasiMetricSpace S>
CauchyReport<typename S::Point> classify(const S& space,
                                         const SequencePrefix<typename S::Point>& seq,
                                         double eps) {
  using P = typename S::Point;
  if (eps <= 0.0) throw std::invalid_argument("classify: epsilon must be positive");
  const int n = static_cast<int>(seq.points.size());
  if (n < 2) throw std::invalid_argument("classify: need at least two points");

  CauchyReport<P> report;
  report.epsilon = eps;
  report.horizon = n;
  report.pool_empty = seq.witness_pool.empty();

  Matrix d(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = space.distance(seq.points[i], seq.points[j]);
  auto ok = [eps](double dist) { return detail::strictly_below(dist, eps); };

  // Pairwise notions share the scan: given n0, find the first violating
  // ordered pair; a notion holds when some n0 in 1..N-1 has none.
  auto scan_pairs = [&](CauchyNotion which, auto violation) {
    NotionResult<P>& res = report[which];
    for (int n0 = 0; n0 + 1 < n; ++n0) {
      std::optional<std::pair<int, int>> bad;
      double bad_dist = 0.0;
      for (int k = n0; k < n && !bad; ++k)
        for (int m = n0; m < n; ++m) {
          auto v = violation(k, m);
          if (v) {
            bad = std::make_pair(k + 1, m + 1);
            bad_dist = *v;
            break;
          }
        }
      if (!bad) {
        res.verdict = Verdict::Holds;
        res.start_index = n0 + 1;
        return;
      }
      if (n0 == 0) {
        res.violating_pair = bad;
        res.violating_distance = bad_dist;
      }
    }
    res.verdict = Verdict::Fails;
  };

  scan_pairs(CauchyNotion::LeftK, [&](int k, int m) -> std::optional<double> {
    if (m < k) return std::nullopt;  // rho(x_k, x_m) for k <= m
    if (!ok(d[k][m])) return d[k][m];
    return std::nullopt;
  });
  scan_pairs(CauchyNotion::RightK, [&](int k, int m) -> std::optional<double> {
    if (m < k) return std::nullopt;  // rho(x_m, x_k) for k <= m
    if (!ok(d[m][k])) return d[m][k];
    return std::nullopt;
  });
  scan_pairs(CauchyNotion::Rho, [&](int k, int m) -> std::optional<double> {
    if (!ok(d[k][m])) return d[k][m];
    return std::nullopt;
  });

  auto weakly = [&](CauchyNotion which, bool left) {
    NotionResult<P>& res = report[which];
    for (int n0 = 0; n0 + 1 < n; ++n0) {
      std::optional<std::pair<int, int>> bad;
      double bad_dist = 0.0;
      for (int m = n0; m < n; ++m) {
        double dist = left ? d[n0][m] : d[m][n0];
        if (!ok(dist)) {
          bad = std::make_pair(n0 + 1, m + 1);
          bad_dist = dist;
          break;
        }
      }
      if (!bad) {
        res.verdict = Verdict::Holds;
        res.start_index = n0 + 1;
        return;
      }
      if (n0 == 0) {
        res.violating_pair = bad;
        res.violating_distance = bad_dist;
      }
    }
    res.verdict = Verdict::Fails;
  };
  weakly(CauchyNotion::WeaklyLeftK, true);
  weakly(CauchyNotion::WeaklyRightK, false);

  auto rho_notion = [&](CauchyNotion which, bool left) {
    NotionResult<P>& res = report[which];
    if (seq.witness_pool.empty()) {
      res.verdict = Verdict::Undecidable;
      return;
    }
    for (std::size_t w = 0; w < seq.witness_pool.size(); ++w) {
      const P& x = seq.witness_pool[w];
      for (int n0 = 0; n0 + 1 < n; ++n0) {
        bool good = true;
        for (int m = n0; m < n; ++m) {
          double dist = left ? space.distance(x, seq.points[m])
                             : space.distance(seq.points[m], x);
          if (!ok(dist)) {
            good = false;
            if (w == 0 && n0 == 0 && !res.violating_pair) {
              res.violating_pair = std::make_pair(1, m + 1);
              res.violating_distance = dist;
            }
            break;
          }
        }
        if (good) {
          res.verdict = Verdict::Holds;
          res.start_index = n0 + 1;
          res.witness_point = x;
          return;
        }
      }
    }
    res.verdict = Verdict::Fails;
  };
  rho_notion(CauchyNotion::LeftRho, true);
  rho_notion(CauchyNotion::RightRho, false);

  return report;
}

struct ChainCheck {
  bool ok = true;
  std::string violated_link;
};

/// left(right) K => weakly left(right) K => left(right) rho, at one eps and
/// horizon. These are theorems whenever the witness pool contains the
/// prefix points, so a violation indicates a classifier bug. Undecidable
/// rho verdicts leave their link unchecked.
template <class P>
ChainCheck check_chain(const CauchyReport<P>& report) {
  ChainCheck out;
  auto implies = [&](CauchyNotion a, CauchyNotion b, const char* label) {
    if (!out.ok) return;
    if (report[a].verdict == Verdict::Holds && report[b].verdict == Verdict::Fails) {
      out.ok = false;
      out.violated_link = label;
    }
  };
  implies(CauchyNotion::LeftK, CauchyNotion::WeaklyLeftK, "left-K => weakly-left-K");
  implies(CauchyNotion::WeaklyLeftK, CauchyNotion::LeftRho, "weakly-left-K => left-rho");
  implies(CauchyNotion::RightK, CauchyNotion::WeaklyRightK, "right-K => weakly-right-K");
  implies(CauchyNotion::WeaklyRightK, CauchyNotion::RightRho, "weakly-right-K => right-rho");
  return out;
}

/// tau_rho convergence probe: rho(x, x_m) <= eps on the final `tail`
/// indices. Note the limit-to-term orientation.
template <QuasiMetricSpace S>
bool converges_to(const S& space, const std::vector<typename S::Point>& points,
                  const typename S::Point& x, double eps, int tail) {
  const int n = static_cast<int>(points.size());
  if (tail < 1 || tail > n) throw std::invalid_argument("converges_to: bad tail length");
  for (int m = n - tail; m < n; ++m)
    if (space.distance(x, points[m]) > eps) return false;
  return true;
}

}  // namespace asymlab
