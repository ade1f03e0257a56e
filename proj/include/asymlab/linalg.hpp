#pragma once

#include <optional>
#include <vector>

namespace asymlab {

using Vec = std::vector<double>;
using Matrix = std::vector<Vec>;

double dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double alpha);
Vec zeros(int dim);
double max_abs(const Vec& a);

Vec mat_vec(const Matrix& a, const Vec& x);
Matrix transpose(const Matrix& a);
Vec transpose_vec(const Matrix& a, const Vec& y);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scaled(const Matrix& a, double alpha);

/// |a - b| <= tol * max(1, |a|, |b|)
bool nearly_equal(double a, double b, double tol);
/// a <= b + tol * max(1, |a|, |b|)
bool leq_tol(double a, double b, double tol);

struct RankResult {
  int rank = 0;
  // Nonzero kernel vector when rank < dim (unit entry in the first free
  // column, pivot entries back-substituted).
  std::optional<Vec> null_vector;
};

/// Rank of the row set, with a kernel witness when the rows do not span.
RankResult row_rank(const Matrix& rows, int dim, double tol = 1e-9);

/// Solves a dense square system; nullopt when singular at tolerance.
std::optional<Vec> solve_square(Matrix a, Vec b, double tol = 1e-12);

}  // namespace asymlab
