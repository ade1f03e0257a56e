#pragma once

#include <optional>
#include <vector>

#include "asymlab/ext_real.hpp"
#include "asymlab/norms.hpp"
#include "asymlab/operators.hpp"

namespace asymlab {

/// ||phi| = sup{<phi, x> : p(x) <= 1}; finite exactly on the dual cone.
ExtReal func_norm(const Vec& covector, const PolyAsymNorm& p);

/// Polar of the unit ball in vertex form: conv({0} u generators). The LP
/// inequality form and the vertex form certify each other.
struct PolarBall {
  PolyAsymNorm base;
  std::vector<Vec> vertices;  // zero first, then the generators
  bool vertex_check_passed = false;
};

PolarBall polar(const PolyAsymNorm& p);

/// Membership of a covector in the vertex hull, decided by the
/// convex-combination feasibility program (independent of the support-
/// function route).
bool polar_contains(const PolarBall& ball, const Vec& covector, double tol = 1e-9);

/// A-flat: psi -> psi o A, i.e. the transpose action on covectors.
Vec dual_operator(const LinOperator& a, const Vec& psi);

/// sup{(phi2 - phi1)(x) : x in B_p}; the dual-cone quasi-distance.
ExtReal dual_qdist(const Vec& phi1, const Vec& phi2, const PolyAsymNorm& p);

struct WFlatNeighborhood {
  Vec anchor;
  std::vector<Vec> test_points;
  double epsilon = 0.0;
};

/// phi(x_i) - anchor(x_i) <= eps for every test point.
bool wflat_contains(const WFlatNeighborhood& nbhd, const Vec& phi);

/// Pairwise entourage form: phi2(x_i) - phi1(x_i) <= eps for all i.
bool wflat_pair_within(const std::vector<Vec>& test_points, double eps, const Vec& phi1,
                       const Vec& phi2);

/// delta = eps / ||A| : dual-distance delta on the codomain side forces
/// dual-distance eps after pulling back through A-flat. The zero operator
/// admits every radius, reported as +inf. Unbounded A is rejected.
ExtReal dual_continuity_radius(const LinOperator& a, double eps);

/// Deterministic barycentric grid over the polar's vertex hull: denominator
/// `density` over vertex subsets of size <= subset_cap (all vertices when
/// few). Exact duplicates are removed.
std::vector<Vec> polar_grid_sample(const PolyAsymNorm& p, int density = 12, int subset_cap = 4);

/// Quasi-metric view of a dual cone slice: distance(f1, f2) is the dual
/// quasi-distance over B_p, evaluated through the precomputed vertex form
/// of the primal ball (equal to the LP route, +inf allowed).
class DualFunctionalSpace {
 public:
  using Point = Vec;
  explicit DualFunctionalSpace(const PolyAsymNorm& p, double tol = 1e-9)
      : ball_(enumerate_unit_ball(p)), tol_(tol) {}

  double distance(const Vec& f1, const Vec& f2) const {
    return support_from_vrep(ball_, sub(f2, f1), tol_).as_double();
  }

 private:
  BallVRep ball_;
  double tol_;
};

struct SchauderCertificate {
  double epsilon = 0.0;  // requested scale
  double radius = 0.0;   // certified covering radius, 3 * epsilon
  std::vector<Vec> net;  // pulled-back functionals forming the net
  std::vector<int> assignment;
  int sample_count = 0;
  double max_deficit = 0.0;
};

/// Constructive precompactness of the pulled-back polar: samples the
/// codomain polar on the barycentric grid, pulls the samples through
/// A-flat, and builds a greedy net under the dual quasi-distance whose
/// covering radius is certified against 3 * eps. Requires a compact
/// operator; rejects otherwise.
SchauderCertificate schauder_certificate(const LinOperator& a, double eps, int density = 12,
                                         int subset_cap = 4);

}  // namespace asymlab
