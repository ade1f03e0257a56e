#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymlab/ext_real.hpp"
#include "asymlab/linalg.hpp"

namespace asymlab {

struct NormValidation {
  bool valid = false;
  int rank = 0;
  // Nonzero x with p(x) = p(-x) = 0 when the generators fail to span.
  std::optional<Vec> witness;
  std::string detail;
};

/// Polyhedral asymmetric norm p(x) = max(0, max_i <a_i, x>).
///
/// The zero generator is implicit, which makes the functional nonnegative,
/// positively homogeneous and subadditive by construction; definiteness
/// (p(x) = p(-x) = 0 only at 0) holds exactly when the generators span.
class PolyAsymNorm {
 public:
  PolyAsymNorm(int dim, Matrix generators);

  int dim() const { return dim_; }
  const Matrix& generators() const { return generators_; }

  double operator()(const Vec& x) const { return eval(x); }
  double eval(const Vec& x) const;

  NormValidation validate(double tol = 1e-9) const;

  /// x -> p(-x); every generator negated.
  PolyAsymNorm conjugate() const;
  /// max(p, conjugate of p); a genuine norm whenever p is valid.
  PolyAsymNorm symmetrized() const;

  bool same_as(const PolyAsymNorm& other) const;

 private:
  int dim_;
  Matrix generators_;
};

struct SupportResult {
  ExtReal value;
  std::optional<Vec> maximizer;  // attaining point when finite
  std::optional<Vec> ray;        // recession certificate when infinite:
                                 // <a_i, d> <= 0 for all i and <c, d> > 0
};

/// sup of <objective, x> over the unit ball {x : <a_i, x> <= 1 for all i}.
/// The supremum is attained when finite; +inf is a legal outcome and comes
/// with the unbounded-direction certificate.
SupportResult ball_support(const PolyAsymNorm& p, const Vec& objective);

/// Explicit vertex/ray form of the unit ball, for dims where subset
/// enumeration is cheap. Valid norms have a pointed ball (lineality {0}).
struct BallVRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;  // extreme rays, max-abs normalized
};

BallVRep enumerate_unit_ball(const PolyAsymNorm& p, double tol = 1e-9);

/// Support value from a precomputed vertex form; equals ball_support.
ExtReal support_from_vrep(const BallVRep& ball, const Vec& objective, double tol = 1e-9);

}  // namespace asymlab
