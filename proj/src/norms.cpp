#include "asymlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "asymlab/lp.hpp"

namespace asymlab {
namespace {

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool is_zero_row(const Vec& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

void subsets_rec(int start, int need, int m, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (need == 0) {
    fn(cur);
    return;
  }
  for (int i = start; i + need <= m; ++i) {
    cur.push_back(i);
    subsets_rec(i + 1, need - 1, m, cur, fn);
    cur.pop_back();
  }
}

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  subsets_rec(0, k, m, cur, fn);
}

}  // namespace

PolyAsymNorm::PolyAsymNorm(int dim, Matrix generators) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("PolyAsymNorm: dim must be positive");
  if (generators.empty()) throw std::invalid_argument("PolyAsymNorm: empty generator list");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim)
      throw std::invalid_argument("PolyAsymNorm: generator dimension mismatch");
    if (!all_finite(g)) throw std::invalid_argument("PolyAsymNorm: non-finite generator entry");
  }
  // The zero functional is implicit; explicit zero rows and exact
  // duplicates add nothing and are dropped.
  for (auto& g : generators) {
    if (is_zero_row(g)) continue;
    bool dup = false;
    for (const auto& kept : generators_)
      if (kept == g) {
        dup = true;
        break;
      }
    if (!dup) generators_.push_back(std::move(g));
  }
  if (generators_.empty())
    throw std::invalid_argument("PolyAsymNorm: all generators are the zero functional");
}

double PolyAsymNorm::eval(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("PolyAsymNorm::eval: dimension mismatch");
  double best = 0.0;
  for (const auto& g : generators_) best = std::max(best, dot(g, x));
  return best;
}

NormValidation PolyAsymNorm::validate(double tol) const {
  NormValidation report;
  RankResult rr = row_rank(generators_, dim_, tol);
  report.rank = rr.rank;
  if (rr.rank == dim_) {
    report.valid = true;
    report.detail =
        "definiteness holds (generators span); homogeneity and subadditivity "
        "are structural for a max of linear forms";
  } else {
    report.valid = false;
    report.witness = rr.null_vector;
    report.detail = "generators span a proper subspace; witness x has p(x) = p(-x) = 0";
  }
  return report;
}

PolyAsymNorm PolyAsymNorm::conjugate() const {
  Matrix neg(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) neg[i] = scaled(generators_[i], -1.0);
  return PolyAsymNorm(dim_, std::move(neg));
}

PolyAsymNorm PolyAsymNorm::symmetrized() const {
  Matrix both = generators_;
  for (const auto& g : generators_) both.push_back(scaled(g, -1.0));
  return PolyAsymNorm(dim_, std::move(both));
}

bool PolyAsymNorm::same_as(const PolyAsymNorm& other) const {
  return dim_ == other.dim_ && generators_ == other.generators_;
}

SupportResult ball_support(const PolyAsymNorm& p, const Vec& objective) {
  if (static_cast<int>(objective.size()) != p.dim())
    throw std::invalid_argument("ball_support: objective dimension mismatch");
  const Matrix& g = p.generators();
  Vec ones(g.size(), 1.0);
  lp::Result r = lp::maximize_free(g, ones, objective);
  SupportResult out;
  if (r.status == lp::Status::Optimal) {
    out.value = ExtReal(std::max(0.0, r.value));
    out.maximizer = r.point;
    return out;
  }
  if (r.status == lp::Status::Unbounded) {
    Vec d = r.ray;
    double scale = max_abs(d);
    if (scale <= 0.0) throw std::logic_error("ball_support: degenerate ray");
    d = scaled(d, 1.0 / scale);
    for (const auto& row : g)
      if (dot(row, d) > 1e-7) throw std::logic_error("ball_support: ray leaves the ball");
    if (dot(objective, d) <= 0.0) throw std::logic_error("ball_support: ray does not improve");
    out.value = ExtReal::infinity();
    out.ray = std::move(d);
    return out;
  }
  throw std::logic_error("ball_support: ball reported infeasible (contains 0)");
}

BallVRep enumerate_unit_ball(const PolyAsymNorm& p, double tol) {
  const int n = p.dim();
  const Matrix& g = p.generators();
  const int m = static_cast<int>(g.size());
  if (n > 6) throw std::invalid_argument("enumerate_unit_ball: dimension too large");
  if (row_rank(g, n, tol).rank < n)
    throw std::invalid_argument("enumerate_unit_ball: ball is not pointed (invalid norm)");

  BallVRep rep;
  auto push_unique = [tol](std::vector<Vec>& list, const Vec& v) {
    for (const auto& u : list) {
      bool same = true;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!nearly_equal(u[i], v[i], tol)) {
          same = false;
          break;
        }
      if (same) return;
    }
    list.push_back(v);
  };
  auto feasible = [&](const Vec& x, double slack) {
    for (const auto& row : g)
      if (dot(row, x) > slack) return false;
    return true;
  };

  for_each_subset(m, n, [&](const std::vector<int>& idx) {
    Matrix sq(n);
    for (int i = 0; i < n; ++i) sq[i] = g[idx[i]];
    auto x = solve_square(sq, Vec(n, 1.0));
    if (!x) return;
    if (feasible(*x, 1.0 + tol * std::max(1.0, max_abs(*x)))) push_unique(rep.vertices, *x);
  });

  if (n == 1) {
    for (double d : {1.0, -1.0})
      if (feasible({d}, tol)) push_unique(rep.rays, {d});
  } else {
    for_each_subset(m, n - 1, [&](const std::vector<int>& idx) {
      Matrix rows(n - 1);
      for (int i = 0; i < n - 1; ++i) rows[i] = g[idx[i]];
      RankResult rr = row_rank(rows, n, tol);
      if (rr.rank != n - 1 || !rr.null_vector) return;
      Vec d = *rr.null_vector;
      double scale = max_abs(d);
      if (scale <= tol) return;
      d = scaled(d, 1.0 / scale);
      for (const Vec& cand : {d, scaled(d, -1.0)})
        if (feasible(cand, tol)) push_unique(rep.rays, cand);
    });
  }
  return rep;
}

ExtReal support_from_vrep(const BallVRep& ball, const Vec& objective, double tol) {
  for (const auto& r : ball.rays)
    if (dot(objective, r) > tol * std::max(1.0, max_abs(objective))) return ExtReal::infinity();
  double best = 0.0;
  bool first = true;
  for (const auto& v : ball.vertices) {
    double val = dot(objective, v);
    if (first || val > best) best = val;
    first = false;
  }
  if (first) throw std::logic_error("support_from_vrep: no vertices");
  return ExtReal(std::max(0.0, best));
}

}  // namespace asymlab
