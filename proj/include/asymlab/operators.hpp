#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymlab/covering.hpp"
#include "asymlab/ext_real.hpp"
#include "asymlab/norms.hpp"
#include "asymlab/sampling.hpp"

namespace asymlab {

/// Which norm of the pair (base, conjugate, symmetrized) a bound refers to.
enum class NormSelector { Base, Conjugate, Symmetric };

const char* selector_name(NormSelector s);
PolyAsymNorm select_norm(const PolyAsymNorm& base, NormSelector s);

/// Dense linear operator between polyhedral asymmetric normed spaces.
class LinOperator {
 public:
  LinOperator(Matrix matrix, PolyAsymNorm domain, PolyAsymNorm codomain);

  int rows() const { return static_cast<int>(matrix_.size()); }
  int cols() const { return domain_.dim(); }
  const Matrix& matrix() const { return matrix_; }
  const PolyAsymNorm& domain_norm() const { return domain_; }
  const PolyAsymNorm& codomain_norm() const { return codomain_; }

  Vec apply(const Vec& x) const { return mat_vec(matrix_, x); }
  Vec transpose_apply(const Vec& psi) const { return transpose_vec(matrix_, psi); }

  LinOperator plus(const LinOperator& other) const;
  LinOperator minus(const LinOperator& other) const;
  LinOperator scaled_by(double alpha) const;

  bool same_spaces(const LinOperator& other) const;

 private:
  Matrix matrix_;
  PolyAsymNorm domain_;
  PolyAsymNorm codomain_;
};

struct OpNormDetail {
  ExtReal value;
  std::optional<Vec> maximizer;   // point of B_mu attaining the sup (finite case)
  std::optional<Vec> domain_ray;  // unbounded direction (infinite case)
  int generator_index = -1;       // codomain generator that realizes the sup
};

/// sup{nu(Ax) : x in B_mu}; the smallest semi-Lipschitz constant when
/// finite, +inf otherwise. Computed generator by generator through the
/// support function of B_mu.
OpNormDetail op_norm_detail(const LinOperator& a, NormSelector mu, NormSelector nu);
ExtReal op_norm(const LinOperator& a, NormSelector mu, NormSelector nu);

struct BoundednessReport {
  bool bounded = false;
  ExtReal beta;  // +inf exactly when unbounded
};

BoundednessReport is_bounded(const LinOperator& a, NormSelector mu, NormSelector nu);

/// The symmetric operator norm sup{q_s(Ax) : p_s(x) <= 1}; always finite.
double sym_op_norm(const LinOperator& a);

struct CompactnessVerdict {
  bool compact = false;
  std::optional<Vec> recession_witness;  // ray d of B_mu with nu(Ad) > 0
  double witness_growth = 0.0;           // nu(A d) on the witness
};

/// A is (mu,nu)-compact iff nu(Ad) = 0 along every recession direction of
/// B_mu; decided by one homogeneous program per codomain generator, each
/// unbounded outcome yielding the witness ray.
CompactnessVerdict is_compact(const LinOperator& a, NormSelector mu, NormSelector nu);

/// Net certificate for the image of the (sampled, box-clipped) unit ball.
struct OperatorBallNet {
  EpsNetCertificate<Vec> net;   // covered = images of the domain sample
  std::vector<Vec> domain_sample;
  PolyAsymNorm mu_norm;
  PolyAsymNorm nu_norm;
  double epsilon = 0.0;
};

OperatorBallNet operator_ball_net(const LinOperator& a, NormSelector mu, NormSelector nu,
                                  double eps, const SamplePlan& plan = {});

/// Pairwise sums of two same-ball eps-nets: a verified 2eps-net for the sum
/// operator's ball image.
OperatorBallNet combine_nets(const OperatorBallNet& first, const OperatorBallNet& second);

struct LimitNetOutcome {
  bool ok = false;
  int chosen_index = -1;        // the approximant whose net was lifted
  double hypothesis_gap = 0.0;  // sup over B_mu of nu((A - A_n)x) at the choice
  std::optional<Vec> violating_point;   // best counterexample when rejected
  std::optional<OperatorBallNet> net;   // 3eps certificate when ok
};

/// Lifts an eps-net of a close approximant's ball image to a 3eps-net for
/// the limit operator, telescoping through the approximant. Rejects when no
/// listed operator is uniformly eps-close on the ball.
LimitNetOutcome limit_of_compacts_net(const LinOperator& a,
                                      const std::vector<LinOperator>& approximants, double eps,
                                      const SamplePlan& plan = {});

/// Quasi-distance sup{nu(Bx - Ax) : x in B_mu}; the membership scale of the
/// entourages on operator space. Asymmetric and +inf-valued in general.
ExtReal operator_qdist(const LinOperator& a, const LinOperator& b, NormSelector mu,
                       NormSelector nu);

}  // namespace asymlab
