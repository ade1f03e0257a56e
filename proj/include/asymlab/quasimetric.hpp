#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "asymlab/norms.hpp"

namespace asymlab {

template <class S>
concept QuasiMetricSpace = requires(const S& s, const typename S::Point& a,
                                    const typename S::Point& b) {
  { s.distance(a, b) } -> std::convertible_to<double>;
};

/// rho(x, y) = p(y - x) for a polyhedral asymmetric norm p.
class InducedQuasiMetric {
 public:
  using Point = Vec;

  explicit InducedQuasiMetric(PolyAsymNorm p) : norm_(std::move(p)) {}

  double distance(const Vec& x, const Vec& y) const { return norm_.eval(sub(y, x)); }

  InducedQuasiMetric conjugate() const { return InducedQuasiMetric(norm_.conjugate()); }
  InducedQuasiMetric symmetrized() const { return InducedQuasiMetric(norm_.symmetrized()); }

  const PolyAsymNorm& norm() const { return norm_; }

 private:
  PolyAsymNorm norm_;
};

/// Finite point set with an explicit distance table. Construction verifies
/// zero diagonal, nonnegativity and the triangle inequality (exhaustively
/// up to 512 points, by seeded triple sampling beyond). Distinct points at
/// mutual distance zero are admitted but downgrade the instance to a
/// quasi-pseudometric, which is flagged rather than rejected.
class TabularQuasiMetric {
 public:
  using Point = int;

  TabularQuasiMetric(std::vector<std::string> labels, Matrix distances,
                     std::uint64_t sample_seed = 0x51ab5eedULL);

  double distance(int a, int b) const { return d_[a][b]; }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(const std::string& label) const;

  /// QM1: rho(x,y) = rho(y,x) = 0 implies x = y.
  bool satisfies_qm1() const { return qm1_; }
  /// The offending pair when QM1 fails.
  std::optional<std::pair<int, int>> qm1_violation() const { return qm1_violation_; }

  TabularQuasiMetric conjugate() const;
  TabularQuasiMetric symmetrized() const;

  const Matrix& table() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  TabularQuasiMetric() = default;
  std::vector<std::string> labels_;
  Matrix d_;
  bool qm1_ = true;
  std::optional<std::pair<int, int>> qm1_violation_;
};

/// Entourage of the induced quasi-uniformity at a given radius.
template <QuasiMetricSpace S>
struct Entourage {
  const S& space;
  double epsilon;
  bool strict = false;

  bool contains(const typename S::Point& x, const typename S::Point& y) const {
    double d = space.distance(x, y);
    return strict ? d < epsilon : d <= epsilon;
  }
};

template <QuasiMetricSpace S>
std::vector<typename S::Point> ball(const S& space, const typename S::Point& x, double r,
                                    bool strict,
                                    const std::vector<typename S::Point>& candidates) {
  std::vector<typename S::Point> out;
  for (const auto& y : candidates) {
    double d = space.distance(x, y);
    if (strict ? d < r : d <= r) out.push_back(y);
  }
  return out;
}

/// U(x) = {y : (x, y) in U}, as a filter over a finite candidate universe.
template <QuasiMetricSpace S>
std::vector<typename S::Point> entourage_apply(const Entourage<S>& u,
                                               const typename S::Point& x,
                                               const std::vector<typename S::Point>& universe) {
  return ball(u.space, x, u.epsilon, u.strict, universe);
}

/// U[Z]: union of sections over z in Z (duplicates removed, universe order).
template <QuasiMetricSpace S>
std::vector<typename S::Point> entourage_image(const Entourage<S>& u,
                                               const std::vector<typename S::Point>& zs,
                                               const std::vector<typename S::Point>& universe) {
  std::vector<typename S::Point> out;
  std::vector<bool> taken(universe.size(), false);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (taken[i]) continue;
    for (const auto& z : zs) {
      if (u.contains(z, universe[i])) {
        taken[i] = true;
        out.push_back(universe[i]);
        break;
      }
    }
  }
  return out;
}

template <class P>
struct HalfCompositionCheck {
  bool ok = true;
  std::optional<std::tuple<P, P, P>> witness;  // (x, y, z) with the middle point
};

/// Verifies B_{eps/2} o B_{eps/2} inside B_eps over all triples of the
/// universe; a failure would contradict the triangle inequality.
template <QuasiMetricSpace S>
HalfCompositionCheck<typename S::Point> check_qu2(const S& space, double eps,
                                                  const std::vector<typename S::Point>& universe) {
  HalfCompositionCheck<typename S::Point> res;
  const double half = eps / 2.0;
  for (const auto& x : universe)
    for (const auto& y : universe) {
      if (space.distance(x, y) > half) continue;
      for (const auto& z : universe) {
        if (space.distance(y, z) > half) continue;
        if (space.distance(x, z) > eps) {
          res.ok = false;
          res.witness = std::make_tuple(x, y, z);
          return res;
        }
      }
    }
  return res;
}

}  // namespace asymlab
