#include "asymlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asymlab {

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& a, double alpha) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = alpha * a[i];
  return r;
}

Vec zeros(int dim) { return Vec(static_cast<std::size_t>(dim), 0.0); }

double max_abs(const Vec& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
  Vec r(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Vec(a.size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Vec transpose_vec(const Matrix& a, const Vec& y) {
  if (a.size() != y.size()) throw std::invalid_argument("transpose_vec: dimension mismatch");
  if (a.empty()) return {};
  Vec r(a[0].size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += a[i][j] * y[i];
  return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_add: shape mismatch");
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_sub: shape mismatch");
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
  return r;
}

Matrix mat_scaled(const Matrix& a, double alpha) {
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = scaled(a[i], alpha);
  return r;
}

bool nearly_equal(double a, double b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

bool leq_tol(double a, double b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a <= b + tol * scale;
}

RankResult row_rank(const Matrix& rows, int dim, double tol) {
  // Reduced row echelon form with partial pivoting.
  Matrix r = rows;
  const int m = static_cast<int>(r.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < dim && row < m; ++col) {
    int best = -1;
    double best_abs = tol;
    for (int i = row; i < m; ++i) {
      if (std::abs(r[i][col]) > best_abs) {
        best_abs = std::abs(r[i][col]);
        best = i;
      }
    }
    if (best < 0) continue;
    std::swap(r[row], r[best]);
    double piv = r[row][col];
    for (int j = 0; j < dim; ++j) r[row][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      double f = r[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j < dim; ++j) r[i][j] -= f * r[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  RankResult out;
  out.rank = static_cast<int>(pivot_col.size());
  if (out.rank < dim) {
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = 0;
    while (free_col < dim && is_pivot[free_col]) ++free_col;
    Vec w(dim, 0.0);
    w[free_col] = 1.0;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) w[pivot_col[k]] = -r[k][free_col];
    out.null_vector = std::move(w);
  }
  return out;
}

std::optional<Vec> solve_square(Matrix a, Vec b, double tol) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
    if (std::abs(a[best][col]) <= tol) return std::nullopt;
    std::swap(a[col], a[best]);
    std::swap(b[col], b[best]);
    for (int i = col + 1; i < n; ++i) {
      double f = a[i][col] / a[col][col];
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  Vec x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace asymlab
