#pragma once

#include "asymlab/linalg.hpp"

namespace asymlab::lp {

enum class Status { Optimal, Unbounded, Infeasible };

struct Result {
  Status status = Status::Infeasible;
  double value = 0.0;
  Vec point;  // maximizer (Optimal) or the feasible point reached (Unbounded)
  Vec ray;    // improving recession direction, only when Unbounded
};

/// max c.x  subject to  A x <= b,  x >= 0.
/// Dense two-phase tableau simplex, Bland's rule throughout, so it
/// terminates on degenerate instances. Unbounded results carry a ray d
/// with A d <= 0, d >= 0 and c.d > 0.
Result maximize_nonneg(const Matrix& a, const Vec& b, const Vec& c);

/// max c.x  subject to  A x <= b,  x free (split internally).
Result maximize_free(const Matrix& a, const Vec& b, const Vec& c);

/// Feasibility of {x >= 0 : A x <= b}.
bool feasible_nonneg(const Matrix& a, const Vec& b);

}  // namespace asymlab::lp
