#include "asymlab/lp.hpp"

#include <cmath>
#include <stdexcept>

namespace asymlab::lp {
namespace {

constexpr double kPivTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-8;

struct Tableau {
  int m = 0;        // constraint rows
  int n = 0;        // structural variables
  int n_art = 0;    // artificial variables
  int cols = 0;     // total variable columns (rhs is stored separately)
  Matrix t;         // m x cols
  Vec rhs;          // m
  Vec obj;          // phase-2 row: z_j - c_j
  Vec w;            // phase-1 row (sum of artificial rows)
  double w_rhs = 0.0;
  std::vector<int> basis;

  bool artificial(int col) const { return col >= n + m; }

  void pivot(int r, int s) {
    double piv = t[r][s];
    for (int j = 0; j < cols; ++j) t[r][j] /= piv;
    rhs[r] /= piv;
    if (rhs[r] < 0.0 && rhs[r] > -1e-12) rhs[r] = 0.0;
    t[r][s] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == r || t[i][s] == 0.0) continue;
      double f = t[i][s];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[r][j];
      t[i][s] = 0.0;
      rhs[i] -= f * rhs[r];
      if (rhs[i] < 0.0 && rhs[i] > -1e-12) rhs[i] = 0.0;
    }
    auto fold = [&](Vec& row, double& row_rhs) {
      double f = row[s];
      if (f == 0.0) return;
      for (int j = 0; j < cols; ++j) row[j] -= f * t[r][j];
      row[s] = 0.0;
      row_rhs -= f * rhs[r];
    };
    double obj_rhs = 0.0;  // unused offset
    fold(obj, obj_rhs);
    if (!w.empty()) fold(w, w_rhs);
    basis[r] = s;
  }

  // Bland ratio test; -1 when the column admits unlimited increase.
  int leaving_row(int s) const {
    int best = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t[i][s] <= kPivTol) continue;
      double ratio = rhs[i] / t[i][s];
      if (best < 0 || ratio < best_ratio - 1e-12 ||
          (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }
};

Vec extract_point(const Tableau& tb) {
  Vec x(tb.n, 0.0);
  for (int i = 0; i < tb.m; ++i)
    if (tb.basis[i] < tb.n) x[tb.basis[i]] = tb.rhs[i];
  return x;
}

}  // namespace

Result maximize_nonneg(const Matrix& a, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("lp: ragged constraint matrix");
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: rhs size mismatch");

  Tableau tb;
  tb.m = m;
  tb.n = n;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0.0) ++tb.n_art;
  tb.cols = n + m + tb.n_art;
  tb.t.assign(m, Vec(tb.cols, 0.0));
  tb.rhs.assign(m, 0.0);
  tb.basis.assign(m, -1);

  int art = n + m;
  for (int i = 0; i < m; ++i) {
    double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) tb.t[i][j] = sign * a[i][j];
    tb.t[i][n + i] = sign;
    tb.rhs[i] = sign * b[i];
    if (b[i] < 0.0) {
      tb.t[i][art] = 1.0;
      tb.basis[i] = art++;
    } else {
      tb.basis[i] = n + i;
    }
  }

  tb.obj.assign(tb.cols, 0.0);
  for (int j = 0; j < n; ++j) tb.obj[j] = -c[j];

  // Phase 1: drive the artificial variables to zero.
  if (tb.n_art > 0) {
    tb.w.assign(tb.cols, 0.0);
    tb.w_rhs = 0.0;
    for (int i = 0; i < m; ++i) {
      if (tb.basis[i] < n + m) continue;
      for (int j = 0; j < tb.cols; ++j) tb.w[j] += tb.t[i][j];
      tb.w_rhs += tb.rhs[i];
    }
    while (true) {
      int s = -1;
      for (int j = 0; j < n + m; ++j) {
        if (tb.w[j] > kCostTol) {
          s = j;
          break;
        }
      }
      if (s < 0) break;
      int r = tb.leaving_row(s);
      if (r < 0) throw std::logic_error("lp: phase-1 column unbounded");
      tb.pivot(r, s);
    }
    if (tb.w_rhs > kFeasTol) {
      Result res;
      res.status = Status::Infeasible;
      return res;
    }
    // Degenerate basic artificials: swap out where possible.
    for (int i = 0; i < m; ++i) {
      if (tb.basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j) {
        if (std::abs(tb.t[i][j]) > kPivTol) {
          tb.pivot(i, j);
          break;
        }
      }
    }
    tb.w.clear();
  }

  // Phase 2.
  while (true) {
    int s = -1;
    for (int j = 0; j < n + m; ++j) {
      if (tb.obj[j] < -kCostTol) {
        s = j;
        break;
      }
    }
    if (s < 0) {
      Result res;
      res.status = Status::Optimal;
      res.point = extract_point(tb);
      res.value = dot(c, res.point);
      return res;
    }
    int r = tb.leaving_row(s);
    if (r < 0) {
      Result res;
      res.status = Status::Unbounded;
      res.point = extract_point(tb);
      Vec full(tb.cols, 0.0);
      full[s] = 1.0;
      for (int i = 0; i < m; ++i) full[tb.basis[i]] = -tb.t[i][s];
      res.ray.assign(full.begin(), full.begin() + n);
      return res;
    }
    tb.pivot(r, s);
  }
}

Result maximize_free(const Matrix& a, const Vec& b, const Vec& c) {
  const int n = c.empty() && !a.empty() ? static_cast<int>(a[0].size())
                                        : static_cast<int>(c.size());
  Matrix split(a.size(), Vec(2 * n, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < n; ++j) {
      split[i][j] = a[i][j];
      split[i][n + j] = -a[i][j];
    }
  Vec cs(2 * n, 0.0);
  for (int j = 0; j < n; ++j) {
    cs[j] = c[j];
    cs[n + j] = -c[j];
  }
  Result raw = maximize_nonneg(split, b, cs);
  Result res;
  res.status = raw.status;
  res.value = raw.value;
  auto fold = [n](const Vec& v) {
    Vec out(n, 0.0);
    for (int j = 0; j < n; ++j) out[j] = v[j] - v[n + j];
    return out;
  };
  if (!raw.point.empty()) res.point = fold(raw.point);
  if (!raw.ray.empty()) res.ray = fold(raw.ray);
  return res;
}

bool feasible_nonneg(const Matrix& a, const Vec& b) {
  Vec c(a.empty() ? 0 : a[0].size(), 0.0);
  return maximize_nonneg(a, b, c).status == Status::Optimal;
}

}  // namespace asymlab::lp
