#include "asymlab/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "asymlab/lp.hpp"

namespace asymlab {

const char* selector_name(NormSelector s) {
  switch (s) {
    case NormSelector::Base: return "base";
    case NormSelector::Conjugate: return "conjugate";
    case NormSelector::Symmetric: return "symmetric";
  }
  return "?";
}

PolyAsymNorm select_norm(const PolyAsymNorm& base, NormSelector s) {
  switch (s) {
    case NormSelector::Base: return base;
    case NormSelector::Conjugate: return base.conjugate();
    case NormSelector::Symmetric: return base.symmetrized();
  }
  throw std::logic_error("select_norm: bad selector");
}

LinOperator::LinOperator(Matrix matrix, PolyAsymNorm domain, PolyAsymNorm codomain)
    : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (static_cast<int>(matrix_.size()) != codomain_.dim())
    throw std::invalid_argument("LinOperator: row count must match codomain dimension");
  for (const auto& row : matrix_)
    if (static_cast<int>(row.size()) != domain_.dim())
      throw std::invalid_argument("LinOperator: column count must match domain dimension");
  if (!domain_.validate().valid || !codomain_.validate().valid)
    throw std::invalid_argument("LinOperator: norms must be valid");
}

LinOperator LinOperator::plus(const LinOperator& other) const {
  if (!same_spaces(other)) throw std::invalid_argument("LinOperator::plus: space mismatch");
  return LinOperator(mat_add(matrix_, other.matrix_), domain_, codomain_);
}

LinOperator LinOperator::minus(const LinOperator& other) const {
  if (!same_spaces(other)) throw std::invalid_argument("LinOperator::minus: space mismatch");
  return LinOperator(mat_sub(matrix_, other.matrix_), domain_, codomain_);
}

LinOperator LinOperator::scaled_by(double alpha) const {
  return LinOperator(mat_scaled(matrix_, alpha), domain_, codomain_);
}

bool LinOperator::same_spaces(const LinOperator& other) const {
  return domain_.same_as(other.domain_) && codomain_.same_as(other.codomain_);
}

OpNormDetail op_norm_detail(const LinOperator& a, NormSelector mu, NormSelector nu) {
  PolyAsymNorm mun = select_norm(a.domain_norm(), mu);
  PolyAsymNorm nun = select_norm(a.codomain_norm(), nu);
  OpNormDetail out;
  out.value = ExtReal(0.0);
  out.maximizer = zeros(a.cols());
  const Matrix& gens = nun.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Vec c = a.transpose_apply(gens[j]);
    SupportResult sup = ball_support(mun, c);
    if (sup.value.is_infinite()) {
      out.value = ExtReal::infinity();
      out.maximizer.reset();
      out.domain_ray = sup.ray;
      out.generator_index = static_cast<int>(j);
      return out;
    }
    if (out.value < sup.value) {
      out.value = sup.value;
      out.maximizer = sup.maximizer;
      out.generator_index = static_cast<int>(j);
    }
  }
  return out;
}

ExtReal op_norm(const LinOperator& a, NormSelector mu, NormSelector nu) {
  return op_norm_detail(a, mu, nu).value;
}

BoundednessReport is_bounded(const LinOperator& a, NormSelector mu, NormSelector nu) {
  BoundednessReport rep;
  rep.beta = op_norm(a, mu, nu);
  rep.bounded = rep.beta.is_finite();
  return rep;
}

double sym_op_norm(const LinOperator& a) {
  ExtReal v = op_norm(a, NormSelector::Symmetric, NormSelector::Symmetric);
  if (v.is_infinite())
    throw std::logic_error("sym_op_norm: symmetrized ball reported unbounded");
  return v.value();
}

CompactnessVerdict is_compact(const LinOperator& a, NormSelector mu, NormSelector nu) {
  PolyAsymNorm mun = select_norm(a.domain_norm(), mu);
  PolyAsymNorm nun = select_norm(a.codomain_norm(), nu);
  CompactnessVerdict verdict;

  // nu(Ad) vanishes on the recession cone {d : <a_i, d> <= 0} exactly when
  // each homogeneous program max <A^T b_j, d> over the cone stays at zero;
  // capping the objective at one turns "positive" into an attained vertex.
  const Matrix& gens = mun.generators();
  for (const Vec& b : nun.generators()) {
    Vec c = a.transpose_apply(b);
    Matrix rows = gens;
    Vec rhs(gens.size(), 0.0);
    rows.push_back(c);
    rhs.push_back(1.0);
    lp::Result r = lp::maximize_free(rows, rhs, c);
    if (r.status != lp::Status::Optimal)
      throw std::logic_error("is_compact: capped homogeneous program not optimal");
    if (r.value > 0.5) {
      Vec d = r.point;
      double scale = max_abs(d);
      if (scale <= 0.0) throw std::logic_error("is_compact: degenerate witness");
      d = scaled(d, 1.0 / scale);
      for (const auto& g : gens)
        if (dot(g, d) > 1e-7)
          throw std::logic_error("is_compact: witness leaves the recession cone");
      verdict.compact = false;
      verdict.witness_growth = nun.eval(a.apply(d));
      if (verdict.witness_growth <= 0.0)
        throw std::logic_error("is_compact: witness has zero growth");
      verdict.recession_witness = std::move(d);
      return verdict;
    }
  }
  verdict.compact = true;
  return verdict;
}

OperatorBallNet operator_ball_net(const LinOperator& a, NormSelector mu, NormSelector nu,
                                  double eps, const SamplePlan& plan) {
  PolyAsymNorm mun = select_norm(a.domain_norm(), mu);
  PolyAsymNorm nun = select_norm(a.codomain_norm(), nu);
  std::vector<Vec> sample = sample_ball(mun, plan);
  std::vector<Vec> images(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) images[i] = a.apply(sample[i]);
  InducedQuasiMetric codomain(nun);
  OperatorBallNet out{greedy_net(codomain, images, eps, CentersFrom::Points),
                      std::move(sample), std::move(mun), std::move(nun), eps};
  return out;
}

OperatorBallNet combine_nets(const OperatorBallNet& first, const OperatorBallNet& second) {
  if (first.epsilon != second.epsilon)
    throw std::invalid_argument("combine_nets: radii differ");
  if (!first.mu_norm.same_as(second.mu_norm) || !first.nu_norm.same_as(second.nu_norm))
    throw std::invalid_argument("combine_nets: ball or codomain norm differs");
  if (first.domain_sample != second.domain_sample)
    throw std::invalid_argument("combine_nets: nets must share the domain sample");

  const auto& n1 = first.net;
  const auto& n2 = second.net;
  const int m2 = static_cast<int>(n2.centers.size());

  EpsNetCertificate<Vec> combined;
  combined.epsilon = 2.0 * first.epsilon;
  for (const auto& ci : n1.centers)
    for (const auto& cj : n2.centers) combined.centers.push_back(add(ci, cj));
  combined.covered.resize(n1.covered.size());
  combined.assignment.resize(n1.covered.size());
  for (std::size_t s = 0; s < n1.covered.size(); ++s) {
    combined.covered[s] = add(n1.covered[s], n2.covered[s]);
    combined.assignment[s] = n1.assignment[s] * m2 + n2.assignment[s];
    double d = first.nu_norm.eval(
        sub(combined.covered[s], combined.centers[combined.assignment[s]]));
    combined.max_deficit = std::max(combined.max_deficit, d);
  }
  return OperatorBallNet{std::move(combined), first.domain_sample, first.mu_norm,
                         first.nu_norm, 2.0 * first.epsilon};
}

LimitNetOutcome limit_of_compacts_net(const LinOperator& a,
                                      const std::vector<LinOperator>& approximants, double eps,
                                      const SamplePlan& plan) {
  if (eps <= 0.0) throw std::invalid_argument("limit_of_compacts_net: epsilon must be positive");
  if (approximants.empty())
    throw std::invalid_argument("limit_of_compacts_net: empty approximant list");

  LimitNetOutcome out;
  ExtReal best_gap = ExtReal::infinity();
  std::optional<Vec> best_point;
  int chosen = -1;
  for (std::size_t n = 0; n < approximants.size(); ++n) {
    if (!a.same_spaces(approximants[n]))
      throw std::invalid_argument("limit_of_compacts_net: approximant space mismatch");
    OpNormDetail gap = op_norm_detail(a.minus(approximants[n]), NormSelector::Base,
                                      NormSelector::Base);
    if (gap.value.is_finite() && gap.value.value() <= eps + 1e-12) {
      chosen = static_cast<int>(n);
      out.hypothesis_gap = gap.value.value();
      break;
    }
    if (gap.value < best_gap) {
      best_gap = gap.value;
      if (gap.maximizer) {
        best_point = gap.maximizer;
      } else if (gap.domain_ray) {
        // Walk the recession direction far enough to beat eps.
        const Vec& d = *gap.domain_ray;
        double growth = a.codomain_norm().eval(a.minus(approximants[n]).apply(d));
        double t = growth > 0.0 ? (2.0 * eps + 1.0) / growth : 1.0;
        best_point = scaled(d, t);
      }
    }
  }
  if (chosen < 0) {
    out.ok = false;
    out.hypothesis_gap = best_gap.as_double();
    out.violating_point = best_point;
    return out;
  }

  out.ok = true;
  out.chosen_index = chosen;
  const LinOperator& near = approximants[chosen];
  const PolyAsymNorm& p = a.domain_norm();
  const PolyAsymNorm& q = a.codomain_norm();
  std::vector<Vec> sample = sample_ball(p, plan);
  std::vector<Vec> near_images(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) near_images[i] = near.apply(sample[i]);
  InducedQuasiMetric codomain{q};
  EpsNetCertificate<Vec> base = greedy_net(codomain, near_images, eps, CentersFrom::Points);

  EpsNetCertificate<Vec> lifted;
  lifted.epsilon = 3.0 * eps;
  for (int idx : base.center_indices) {
    lifted.centers.push_back(a.apply(sample[idx]));
    lifted.center_indices.push_back(idx);
  }
  lifted.covered.resize(sample.size());
  lifted.assignment = base.assignment;
  for (std::size_t s = 0; s < sample.size(); ++s) {
    lifted.covered[s] = a.apply(sample[s]);
    double d = q.eval(sub(lifted.covered[s], lifted.centers[base.assignment[s]]));
    lifted.max_deficit = std::max(lifted.max_deficit, d);
  }
  out.net = OperatorBallNet{std::move(lifted), std::move(sample), p, q, 3.0 * eps};
  return out;
}

ExtReal operator_qdist(const LinOperator& a, const LinOperator& b, NormSelector mu,
                       NormSelector nu) {
  if (!a.same_spaces(b)) throw std::invalid_argument("operator_qdist: space mismatch");
  return op_norm(b.minus(a), mu, nu);
}

}  // namespace asymlab
