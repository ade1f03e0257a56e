#include "asymlab/property_suite.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "asymlab/audit.hpp"
#include "asymlab/covering.hpp"
#include "asymlab/duality.hpp"
#include "asymlab/json_io.hpp"
#include "asymlab/sequences.hpp"

namespace asymlab {
namespace {

struct Check {
  PropertyResult result;
  void count(bool ok, const std::string& note) {
    ++result.trials;
    if (!ok) {
      ++result.failures;
      if (result.note.empty()) result.note = note;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

NormGenOptions dims_1_to_4(std::mt19937_64& rng) {
  NormGenOptions opts;
  std::uniform_int_distribution<int> dim(1, 4);
  opts.dim = dim(rng);
  opts.min_gens = 1;
  opts.max_gens = opts.dim + 3;
  return opts;
}

LinOperator random_compact_operator(std::mt19937_64& rng, int dim_domain, int dim_codomain) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: {
      NormGenOptions od, oc;
      od.dim = dim_domain;
      oc.dim = dim_codomain;
      PolyAsymNorm p = random_valid_norm(rng, od).symmetrized();
      PolyAsymNorm q = random_valid_norm(rng, oc);
      return LinOperator(random_matrix(rng, dim_codomain, dim_domain, 2.0, false), p, q);
    }
    case 1: {
      // Upper-orthant spaces with a nonnegative matrix: the negative
      // orthant maps into the codomain's null cone.
      Matrix gd, gc;
      for (int k = 0; k < dim_domain; ++k) {
        Vec e = zeros(dim_domain);
        e[k] = 1.0;
        gd.push_back(e);
      }
      for (int k = 0; k < dim_codomain; ++k) {
        Vec e = zeros(dim_codomain);
        e[k] = 1.0;
        gc.push_back(e);
      }
      Matrix m = random_matrix(rng, dim_codomain, dim_domain, 2.0, false);
      for (auto& row : m)
        for (double& x : row) x = std::abs(x);
      return LinOperator(std::move(m), PolyAsymNorm(dim_domain, gd),
                         PolyAsymNorm(dim_codomain, gc));
    }
    default: {
      NormGenOptions od, oc;
      od.dim = dim_domain;
      oc.dim = dim_codomain;
      PolyAsymNorm p = random_valid_norm(rng, od).symmetrized();
      PolyAsymNorm q = random_valid_norm(rng, oc);
      Matrix zero(dim_codomain, Vec(dim_domain, 0.0));
      return LinOperator(std::move(zero), p, q);
    }
  }
}

using PropertyFn = std::function<void(std::uint64_t, double, Check&)>;

// ---------------------------------------------------------------- norms --

void prop_norm_axioms(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 60; ++inst) {
    auto rng = instance_rng(seed, 1000 + inst);
    PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
    PolyAsymNorm pc = p.conjugate();
    PolyAsymNorm ps = p.symmetrized();
    std::uniform_real_distribution<double> alpha(0.0, 3.0);
    for (int t = 0; t < 40; ++t) {
      Vec x = random_vec(rng, p.dim(), 5.0);
      Vec y = random_vec(rng, p.dim(), 5.0);
      double a = alpha(rng);
      chk.count(nearly_equal(p.eval(scaled(x, a)), a * p.eval(x), tol), "homogeneity");
      chk.count(leq_tol(p.eval(add(x, y)), p.eval(x) + p.eval(y), tol), "subadditivity");
      chk.count(leq_tol(std::abs(p.eval(x) - p.eval(y)), ps.eval(sub(x, y)), tol),
                "lipschitz bound via symmetrization");
      chk.count(nearly_equal(pc.eval(x), p.eval(scaled(x, -1.0)), tol), "conjugate");
      chk.count(nearly_equal(pc.conjugate().eval(x), p.eval(x), tol), "conjugate involution");
      chk.count(nearly_equal(ps.eval(x), std::max(p.eval(x), pc.eval(x)), tol),
                "symmetrization is the pointwise max");
    }
  }
}

void prop_ball_translation(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 20; ++inst) {
    auto rng = instance_rng(seed, 2000 + inst);
    NormGenOptions opts = dims_1_to_4(rng);
    PolyAsymNorm p = random_valid_norm(rng, opts);
    SamplePlan plan;
    plan.target_count = 40;
    plan.seed = inst;
    std::uniform_real_distribution<double> radius(0.1, 4.0);
    Vec x = random_vec(rng, p.dim(), 3.0);
    double r = radius(rng);
    for (const Vec& z : sample_ball(p, plan)) {
      Vec shifted = add(x, scaled(z, r));
      chk.count(leq_tol(p.eval(sub(shifted, x)), r, tol), "translated ball membership");
    }
  }
}

void prop_validate_definiteness(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 40; ++inst) {
    auto rng = instance_rng(seed, 3000 + inst);
    std::uniform_int_distribution<int> dim_d(2, 4);
    int dim = dim_d(rng);
    // Deficient by construction: generators inside a proper subspace.
    int sub_dim = dim - 1;
    Matrix basis = random_matrix(rng, sub_dim, dim, 2.0, false);
    Matrix gens;
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int g = 0; g < sub_dim + 2; ++g) {
      Vec v = zeros(dim);
      for (int b = 0; b < sub_dim; ++b) v = add(v, scaled(basis[b], coef(rng)));
      gens.push_back(v);
    }
    try {
      PolyAsymNorm p(dim, gens);
      NormValidation report = p.validate();
      chk.count(!report.valid, "deficient generators must be rejected");
      if (!report.valid && report.witness) {
        chk.count(p.eval(*report.witness) <= tol && p.eval(scaled(*report.witness, -1.0)) <= tol,
                  "witness must be null for p and its conjugate");
      }
    } catch (const std::invalid_argument&) {
      // all-zero draw; legal construction rejection
    }
    PolyAsymNorm good = random_valid_norm(rng, dims_1_to_4(rng));
    chk.count(good.validate().valid, "generated norm must validate");
  }
}

void prop_support_routes(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 4000 + inst);
    NormGenOptions opts;
    std::uniform_int_distribution<int> dim(1, 3);
    opts.dim = dim(rng);
    opts.min_gens = opts.dim;
    opts.max_gens = opts.dim + 3;
    PolyAsymNorm p = random_valid_norm(rng, opts);
    BallVRep rep = enumerate_unit_ball(p);
    for (int t = 0; t < 10; ++t) {
      Vec c = random_vec(rng, p.dim(), 2.0);
      ExtReal via_lp = ball_support(p, c).value;
      ExtReal via_rep = support_from_vrep(rep, c, 1e-7);
      if (via_lp.is_infinite() != via_rep.is_infinite()) {
        chk.count(false, "support routes disagree on finiteness");
        continue;
      }
      if (via_lp.is_finite())
        chk.count(nearly_equal(via_lp.value(), via_rep.value(), 1e-6),
                  "support routes disagree: " + fmt(via_lp.value()) + " vs " +
                      fmt(via_rep.value()));
      else
        chk.count(true, "");
    }
  }
}

// ---------------------------------------------------------- quasimetric --

void prop_translation_invariance(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 5000 + inst);
    PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
    InducedQuasiMetric rho{p};
    for (int t = 0; t < 20; ++t) {
      Vec x = random_vec(rng, p.dim(), 4.0);
      Vec y = random_vec(rng, p.dim(), 4.0);
      Vec v = random_vec(rng, p.dim(), 4.0);
      chk.count(nearly_equal(rho.distance(add(x, v), add(y, v)), rho.distance(x, y), tol),
                "translation invariance");
      chk.count(nearly_equal(rho.conjugate().distance(x, y), rho.distance(y, x), tol),
                "conjugate swaps arguments");
    }
  }
}

void prop_tabular_symmetrization(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 20; ++inst) {
    auto rng = instance_rng(seed, 6000 + inst);
    TabularQuasiMetric t = random_tabular(rng, 8, false);
    TabularQuasiMetric ts = t.symmetrized();
    const int n = t.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        chk.count(nearly_equal(ts.distance(i, j), ts.distance(j, i), tol), "rho_s symmetry");
        chk.count(nearly_equal(ts.distance(i, j),
                               std::max(t.distance(i, j), t.distance(j, i)), tol),
                  "rho_s is the pairwise max");
        for (int k = 0; k < n; ++k)
          chk.count(leq_tol(ts.distance(i, k), ts.distance(i, j) + ts.distance(j, k), tol),
                    "rho_s triangle");
      }
  }
}

void prop_ball_nesting(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 20; ++inst) {
    auto rng = instance_rng(seed, 7000 + inst);
    PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
    InducedQuasiMetric rho{p};
    std::vector<Vec> universe;
    for (int t = 0; t < 30; ++t) universe.push_back(random_vec(rng, p.dim(), 4.0));
    Vec x = random_vec(rng, p.dim(), 2.0);
    std::uniform_real_distribution<double> radius(0.2, 3.0);
    double r = radius(rng);
    auto strict = ball(rho, x, r, true, universe);
    auto closed = ball(rho, x, r, false, universe);
    auto wider = ball(rho, x, r + 0.01, true, universe);
    auto subset = [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
      for (const auto& e : a) {
        bool found = false;
        for (const auto& f : b)
          if (e == f) {
            found = true;
            break;
          }
        if (!found) return false;
      }
      return true;
    };
    chk.count(subset(strict, closed), "strict ball inside closed ball");
    chk.count(subset(closed, wider), "closed ball inside widened strict ball");
  }
}

void prop_half_composition(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 20; ++inst) {
    auto rng = instance_rng(seed, 8000 + inst);
    std::uniform_real_distribution<double> eps_d(0.2, 2.0);
    if (inst % 2 == 0) {
      PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
      InducedQuasiMetric rho{p};
      std::vector<Vec> universe;
      for (int t = 0; t < 25; ++t) universe.push_back(random_vec(rng, p.dim(), 3.0));
      chk.count(check_qu2(rho, eps_d(rng), universe).ok, "half composition (induced)");
    } else {
      TabularQuasiMetric t = random_tabular(rng, 10, false);
      std::vector<int> universe(t.size());
      for (int i = 0; i < t.size(); ++i) universe[i] = i;
      chk.count(check_qu2(t, eps_d(rng), universe).ok, "half composition (tabular)");
    }
  }
}

// ------------------------------------------------------------ sequences --

std::vector<Vec> random_walk(std::mt19937_64& rng, int dim, int n, double step) {
  std::vector<Vec> pts;
  Vec x = random_vec(rng, dim, 1.0);
  for (int i = 0; i < n; ++i) {
    pts.push_back(x);
    x = add(x, random_vec(rng, dim, step));
  }
  return pts;
}

void prop_cauchy_chain(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 200; ++inst) {
    auto rng = instance_rng(seed, 9000 + inst);
    std::uniform_real_distribution<double> eps_d(0.1, 2.0);
    double eps = eps_d(rng);
    if (inst % 2 == 0) {
      PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
      InducedQuasiMetric rho{p};
      std::uniform_int_distribution<int> len(4, 24);
      std::uniform_real_distribution<double> step(0.05, 1.0);
      auto prefix =
          SequencePrefix<Vec>::with_default_pool(random_walk(rng, p.dim(), len(rng), step(rng)));
      auto chain = check_chain(classify(rho, prefix, eps));
      chk.count(chain.ok, "chain violated (induced): " + chain.violated_link);
    } else {
      TabularQuasiMetric t = random_tabular(rng, 10, false);
      std::uniform_int_distribution<int> len(4, 20);
      std::uniform_int_distribution<int> pick(0, t.size() - 1);
      std::vector<int> pts(len(rng));
      for (int& x : pts) x = pick(rng);
      auto prefix = SequencePrefix<int>::with_default_pool(pts);
      auto chain = check_chain(classify(t, prefix, eps));
      chk.count(chain.ok, "chain violated (tabular): " + chain.violated_link);
    }
  }
}

void prop_convergent_prefixes(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 40; ++inst) {
    auto rng = instance_rng(seed, 10000 + inst);
    PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
    InducedQuasiMetric rho{p};
    PolyAsymNorm ps = p.symmetrized();
    Vec limit = random_vec(rng, p.dim(), 2.0);
    std::uniform_real_distribution<double> eps_d(0.3, 1.5);
    double eps = eps_d(rng);
    // Contracting noise around the limit: symmetric distance below eps.
    std::vector<Vec> pts;
    int n = 14;
    for (int i = 0; i < n; ++i) {
      Vec noise = random_vec(rng, p.dim(), 1.0);
      double cap = ps.eval(noise);
      double scale = cap > 0 ? 0.9 * eps / cap / (i + 1) : 0.0;
      pts.push_back(add(limit, scaled(noise, scale)));
    }
    bool conv_fwd = converges_to(rho, pts, limit, eps, n);
    bool conv_bwd = converges_to(rho.conjugate(), pts, limit, eps, n);
    chk.count(conv_fwd && conv_bwd, "constructed prefix must converge both ways");
    if (conv_fwd && conv_bwd) {
      // Symmetric two-sided convergence at eps forces pairwise closeness
      // at 2 eps over the whole prefix.
      bool pairwise = true;
      for (const auto& a : pts)
        for (const auto& b : pts)
          if (!leq_tol(rho.distance(a, b), 2.0 * eps, tol)) pairwise = false;
      chk.count(pairwise, "two-sided convergent prefix not pairwise 2eps-close");
      // And with the limit admitted to the pool, the left-rho notion holds
      // at any radius clear of the strict-comparison guard.
      auto prefix = SequencePrefix<Vec>::with_pool(pts, {limit});
      auto report = classify(rho, prefix, 1.5 * eps);
      chk.count(report[CauchyNotion::LeftRho].verdict == Verdict::Holds,
                "limit in pool must witness left-rho");
    }
  }
}

void prop_symmetric_left_right(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 11000 + inst);
    TabularQuasiMetric t = random_tabular(rng, 9, true);
    std::uniform_int_distribution<int> len(4, 16);
    std::uniform_int_distribution<int> pick(0, t.size() - 1);
    std::uniform_real_distribution<double> eps_d(0.1, 2.0);
    std::vector<int> pts(len(rng));
    for (int& x : pts) x = pick(rng);
    auto report = classify(t, SequencePrefix<int>::with_default_pool(pts), eps_d(rng));
    chk.count(report[CauchyNotion::LeftK].verdict == report[CauchyNotion::RightK].verdict,
              "left-K vs right-K in a symmetric table");
    chk.count(report[CauchyNotion::WeaklyLeftK].verdict ==
                  report[CauchyNotion::WeaklyRightK].verdict,
              "weak notions in a symmetric table");
    chk.count(report[CauchyNotion::LeftRho].verdict == report[CauchyNotion::RightRho].verdict,
              "rho notions in a symmetric table");
  }
}

// -------------------------------------------------------------- covering --

void prop_net_cover_bounds(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 40; ++inst) {
    auto rng = instance_rng(seed, 12000 + inst);
    TabularQuasiMetric t = random_tabular(rng, 9, false);
    std::vector<int> ys(t.size());
    for (int i = 0; i < t.size(); ++i) ys[i] = i;
    std::uniform_real_distribution<double> eps_d(0.2, 4.0);
    double eps = eps_d(rng);
    int net = min_net_size(t, ys, eps);
    int cover = min_cover_size(t, ys, eps);
    chk.count(net <= cover, "net number exceeds cover number");
    auto greedy = greedy_net(t, ys, eps, CentersFrom::Points);
    chk.count(static_cast<int>(greedy.centers.size()) >= net, "greedy below the exact optimum");
    chk.count(static_cast<int>(greedy.centers.size()) <= t.size(), "greedy larger than the set");
    chk.count(verify_net(t, greedy, tol), "greedy certificate must verify");
    chk.count(min_net_size(t, ys, eps * 2.0) <= net, "net numbers must shrink as eps grows");
  }
}

void prop_cover_orientation_blind(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 13000 + inst);
    TabularQuasiMetric t = random_tabular(rng, 8, false);
    std::vector<int> ys(t.size());
    for (int i = 0; i < t.size(); ++i) ys[i] = i;
    std::uniform_real_distribution<double> eps_d(0.2, 4.0);
    double eps = eps_d(rng);
    int via_rho = min_cover_size(t, ys, eps);
    int via_sym = min_cover_size(t.symmetrized(), ys, eps);
    int via_conj = min_cover_size(t.conjugate(), ys, eps);
    chk.count(via_rho == via_sym, "cover number changed under symmetrization");
    chk.count(via_rho == via_conj, "cover number changed under conjugation");
  }
}

void prop_cover_to_net(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 14000 + inst);
    TabularQuasiMetric t = random_tabular(rng, 10, false);
    std::vector<int> ys(t.size());
    for (int i = 0; i < t.size(); ++i) ys[i] = i;
    std::uniform_real_distribution<double> eps_d(0.3, 4.0);
    double eps = eps_d(rng);
    auto [ok, cover] = is_totally_bounded_sample(t, ys, eps);
    chk.count(ok, "greedy cover must verify");
    auto net = cover_to_net(t, ys, cover);
    chk.count(net.centers.size() == cover.blocks.size(), "transformed net size differs");
    chk.count(verify_net(t, net, tol), "transformed net must verify");
  }
}

// -------------------------------------------------------------- operators --

void prop_opnorm_cone(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 40; ++inst) {
    auto rng = instance_rng(seed, 15000 + inst);
    std::uniform_int_distribution<int> dim(1, 3);
    int nd = dim(rng), nc = dim(rng);
    NormGenOptions od, oc;
    od.dim = nd;
    oc.dim = nc;
    PolyAsymNorm p = random_valid_norm(rng, od);
    PolyAsymNorm q = random_valid_norm(rng, oc);
    LinOperator a(random_matrix(rng, nc, nd, 2.0, false), p, q);
    LinOperator b(random_matrix(rng, nc, nd, 2.0, false), p, q);
    ExtReal na = op_norm(a, NormSelector::Base, NormSelector::Base);
    ExtReal nb = op_norm(b, NormSelector::Base, NormSelector::Base);
    ExtReal nab = op_norm(a.plus(b), NormSelector::Base, NormSelector::Base);
    if (na.is_finite() && nb.is_finite())
      chk.count(leq_tol(nab.as_double(), na.value() + nb.value(), tol),
                "op norm subadditivity");
    std::uniform_real_distribution<double> alpha_d(0.0, 3.0);
    double alpha = alpha_d(rng);
    ExtReal nscaled = op_norm(a.scaled_by(alpha), NormSelector::Base, NormSelector::Base);
    if (alpha == 0.0 || na.is_finite())
      chk.count(nearly_equal(nscaled.as_double(), na.scaled(alpha).as_double(), tol) ||
                    (nscaled.is_infinite() && na.scaled(alpha).is_infinite()),
                "op norm positive homogeneity");
    else
      chk.count(nscaled.is_infinite(), "scaling an unbounded operator by alpha > 0");
  }
}

void prop_operator_norm_comparison(std::uint64_t seed, double tol, Check& chk) {
  // A (p,q)-bounded operator is (p_s,q_s)-bounded with the smaller
  // constant: q_s(Ax) <= max(q(Ax), q(A(-x))) <= ||A| p_s(x). When the
  // domain ball is already symmetric both sups run over the same set, so
  // the comparison tightens to ||A| <= ||A||.
  int found = 0;
  for (int inst = 0; found < 60 && inst < 600; ++inst) {
    auto rng = instance_rng(seed, 16000 + inst);
    std::uniform_int_distribution<int> dim(1, 3);
    int nd = dim(rng), nc = dim(rng);
    NormGenOptions od, oc;
    od.dim = nd;
    oc.dim = nc;
    bool symmetric_domain = inst % 2 == 0;
    PolyAsymNorm p = random_valid_norm(rng, od);
    if (symmetric_domain) p = p.symmetrized();
    PolyAsymNorm q = random_valid_norm(rng, oc);
    LinOperator a(random_matrix(rng, nc, nd, 2.0, false), p, q);
    ExtReal flat = op_norm(a, NormSelector::Base, NormSelector::Base);
    if (!flat.is_finite()) continue;
    ++found;
    chk.count(leq_tol(sym_op_norm(a), flat.value(), tol),
              "symmetric norm above the asymmetric norm");
    if (symmetric_domain)
      chk.count(leq_tol(flat.value(), sym_op_norm(a), tol),
                "symmetric-domain comparison failed");
  }
}

void prop_compact_implies_bounded(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 40; ++inst) {
    auto rng = instance_rng(seed, 17000 + inst);
    std::uniform_int_distribution<int> dim(1, 3);
    LinOperator a = random_compact_operator(rng, dim(rng), dim(rng));
    CompactnessVerdict v = is_compact(a, NormSelector::Base, NormSelector::Base);
    chk.count(v.compact, "constructed operator must be compact");
    if (v.compact)
      chk.count(is_bounded(a, NormSelector::Base, NormSelector::Base).bounded,
                "compact must imply bounded");
  }
}

void prop_compact_vs_oracle(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 12; ++inst) {
    auto rng = instance_rng(seed, 18000 + inst);
    std::uniform_int_distribution<int> dim(1, 2);
    int d = dim(rng);
    NormGenOptions opts;
    opts.dim = d;
    opts.min_gens = d;
    opts.max_gens = d + 2;
    opts.integer_entries = true;
    PolyAsymNorm p = random_valid_norm(rng, opts);
    PolyAsymNorm q = random_valid_norm(rng, opts);
    LinOperator a(random_matrix(rng, d, d, 2.0, true), p, q);
    CompactnessVerdict v = is_compact(a, NormSelector::Base, NormSelector::Base);
    bool oracle = box_saturation_compact_oracle(a, NormSelector::Base, NormSelector::Base);
    chk.count(v.compact == oracle, "criterion and box oracle disagree");
  }
}

void prop_combine_nets(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 12; ++inst) {
    auto rng = instance_rng(seed, 19000 + inst);
    std::uniform_int_distribution<int> dim(1, 2);
    int nd = dim(rng), nc = dim(rng);
    LinOperator a1 = random_compact_operator(rng, nd, nc);
    LinOperator a2(random_matrix(rng, nc, nd, 2.0, false), a1.domain_norm(),
                   a1.codomain_norm());
    if (!is_compact(a2, NormSelector::Base, NormSelector::Base).compact)
      a2 = a1.scaled_by(0.5);
    std::uniform_real_distribution<double> eps_d(0.2, 1.0);
    double eps = eps_d(rng);
    SamplePlan plan;
    plan.target_count = 256;
    plan.seed = inst;
    auto n1 = operator_ball_net(a1, NormSelector::Base, NormSelector::Base, eps, plan);
    auto n2 = operator_ball_net(a2, NormSelector::Base, NormSelector::Base, eps, plan);
    auto combined = combine_nets(n1, n2);
    chk.count(leq_tol(combined.net.max_deficit, 2.0 * eps, tol),
              "combined net misses the 2eps bound");
  }
}

void prop_limit_nets(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 8; ++inst) {
    auto rng = instance_rng(seed, 20000 + inst);
    std::uniform_int_distribution<int> dim(1, 2);
    LinOperator a = random_compact_operator(rng, dim(rng), dim(rng));
    std::vector<LinOperator> family;
    for (int k = 1; k <= 10; ++k) family.push_back(a.scaled_by(1.0 - 1.0 / (k + 1.0)));
    ExtReal na = op_norm(a, NormSelector::Base, NormSelector::Base);
    double eps = 0.05 + (na.is_finite() ? na.value() : 1.0) / 11.0;
    SamplePlan plan;
    plan.target_count = 256;
    plan.seed = inst;
    auto outcome = limit_of_compacts_net(a, family, eps, plan);
    chk.count(outcome.ok, "hypothesis must hold for the tail of the family");
    if (outcome.ok)
      chk.count(leq_tol(outcome.net->net.max_deficit, 3.0 * eps, tol),
                "lifted net misses the 3eps bound");
  }
}

void prop_qdist_triangle(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 21000 + inst);
    std::uniform_int_distribution<int> dim(1, 3);
    int nd = dim(rng), nc = dim(rng);
    NormGenOptions od, oc;
    od.dim = nd;
    oc.dim = nc;
    PolyAsymNorm p = random_valid_norm(rng, od);
    PolyAsymNorm q = random_valid_norm(rng, oc);
    LinOperator a(random_matrix(rng, nc, nd, 2.0, false), p, q);
    LinOperator b(random_matrix(rng, nc, nd, 2.0, false), p, q);
    LinOperator c(random_matrix(rng, nc, nd, 2.0, false), p, q);
    chk.count(operator_qdist(a, a, NormSelector::Base, NormSelector::Base) == ExtReal(0.0),
              "diagonal distance");
    ExtReal ac = operator_qdist(a, c, NormSelector::Base, NormSelector::Base);
    ExtReal ab = operator_qdist(a, b, NormSelector::Base, NormSelector::Base);
    ExtReal bc = operator_qdist(b, c, NormSelector::Base, NormSelector::Base);
    ExtReal rhs = ab + bc;
    chk.count(rhs.is_infinite() || leq_tol(ac.as_double(), rhs.value(), tol),
              "operator quasi-distance triangle");
  }
}

// ---------------------------------------------------------------- duality --

void prop_polar_routes(std::uint64_t seed, double, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 22000 + inst);
    std::uniform_int_distribution<int> dim(1, 3);
    NormGenOptions opts;
    opts.dim = dim(rng);
    opts.min_gens = opts.dim;
    opts.max_gens = opts.dim + 3;
    PolyAsymNorm p = random_valid_norm(rng, opts);
    PolarBall ball = polar(p);
    chk.count(ball.vertex_check_passed, "polar vertices must satisfy the inequality form");
    for (int t = 0; t < 16; ++t) {
      Vec phi = random_vec(rng, p.dim(), 2.5);
      ExtReal sup = ball_support(p, phi).value;
      bool inequality_route = sup.is_finite() && sup.value() <= 1.0;
      if (sup.is_finite() && std::abs(sup.value() - 1.0) <= 1e-6) continue;  // margin band
      bool hull_route = polar_contains(ball, phi);
      chk.count(inequality_route == hull_route, "polar membership routes disagree");
    }
  }
}

void prop_dual_operator_identities(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 30; ++inst) {
    auto rng = instance_rng(seed, 23000 + inst);
    std::uniform_int_distribution<int> dim(1, 3);
    int nd = dim(rng), nc = dim(rng);
    NormGenOptions od, oc;
    od.dim = nd;
    oc.dim = nc;
    PolyAsymNorm p = random_valid_norm(rng, od);
    PolyAsymNorm q = random_valid_norm(rng, oc);
    LinOperator a(random_matrix(rng, nc, nd, 2.0, false), p, q);
    std::uniform_real_distribution<double> alpha_d(0.0, 3.0);
    for (int t = 0; t < 10; ++t) {
      Vec psi = random_vec(rng, nc, 2.0);
      Vec chi = random_vec(rng, nc, 2.0);
      Vec x = random_vec(rng, nd, 3.0);
      chk.count(nearly_equal(dot(dual_operator(a, psi), x), dot(psi, a.apply(x)), tol),
                "transpose action identity");
      Vec sum_action = dual_operator(a, add(psi, chi));
      chk.count(nearly_equal(dot(sum_action, x),
                             dot(dual_operator(a, psi), x) + dot(dual_operator(a, chi), x), tol),
                "additivity of the dual operator");
      double alpha = alpha_d(rng);
      chk.count(nearly_equal(dot(dual_operator(a, scaled(psi, alpha)), x),
                             alpha * dot(dual_operator(a, psi), x), tol),
                "positive homogeneity of the dual operator");
    }
    // Entourage pullback: membership over the pushed-forward test points
    // transfers exactly to the pulled-back pair.
    std::uniform_int_distribution<int> npts(1, 4);
    std::uniform_real_distribution<double> eps_d(0.1, 1.5);
    for (int t = 0; t < 8; ++t) {
      int k = npts(rng);
      std::vector<Vec> xs, axs;
      for (int i = 0; i < k; ++i) {
        xs.push_back(random_vec(rng, nd, 3.0));
        axs.push_back(a.apply(xs.back()));
      }
      double eps = eps_d(rng);
      Vec psi1 = random_vec(rng, nc, 2.0);
      Vec psi2 = random_vec(rng, nc, 2.0);
      if (wflat_pair_within(axs, eps, psi1, psi2)) {
        chk.count(wflat_pair_within(xs, eps, dual_operator(a, psi1), dual_operator(a, psi2)),
                  "entourage pullback implication");
      } else {
        chk.count(true, "");
      }
    }
  }
}

void prop_dual_continuity(std::uint64_t seed, double tol, Check& chk) {
  int found = 0;
  for (int inst = 0; found < 10 && inst < 100; ++inst) {
    auto rng = instance_rng(seed, 24000 + inst);
    std::uniform_int_distribution<int> dim(1, 2);
    LinOperator a = random_compact_operator(rng, dim(rng), dim(rng));
    if (!is_bounded(a, NormSelector::Base, NormSelector::Base).bounded) continue;
    ++found;
    std::uniform_real_distribution<double> eps_d(0.2, 1.5);
    int failures = dual_continuity_failures(a, eps_d(rng), 50, rng, tol);
    chk.count(failures == 0, "dual continuity radius failed on sampled pairs");
  }
}

void prop_schauder(std::uint64_t seed, double tol, Check& chk) {
  for (int inst = 0; inst < 8; ++inst) {
    auto rng = instance_rng(seed, 25000 + inst);
    std::uniform_int_distribution<int> dim(1, 2);
    LinOperator a = random_compact_operator(rng, dim(rng), dim(rng));
    std::uniform_real_distribution<double> eps_d(0.1, 1.0);
    double eps = eps_d(rng);
    SchauderCertificate cert = schauder_certificate(a, eps, 8, 4);
    chk.count(leq_tol(cert.max_deficit, cert.radius, tol),
              "certificate misses the 3eps radius");
    chk.count(cert.sample_count > 0 && !cert.net.empty(), "degenerate certificate");
  }
}

void prop_func_norm_comparison(std::uint64_t seed, double tol, Check& chk) {
  // The symmetric dual norm never exceeds the asymmetric one (the
  // symmetrized ball sits inside the ball), with equality for symmetric p.
  for (int inst = 0; inst < 40; ++inst) {
    auto rng = instance_rng(seed, 26000 + inst);
    PolyAsymNorm p = random_valid_norm(rng, dims_1_to_4(rng));
    PolyAsymNorm ps = p.symmetrized();
    for (int t = 0; t < 8; ++t) {
      Vec phi = random_vec(rng, p.dim(), 2.0);
      ExtReal flat = func_norm(phi, p);
      ExtReal symv = func_norm(phi, ps);
      chk.count(symv.is_finite(), "symmetric dual norm must be finite");
      if (flat.is_finite() && symv.is_finite())
        chk.count(leq_tol(symv.value(), flat.value(), tol),
                  "symmetric dual norm above the asymmetric one");
      ExtReal flat_sym_base = func_norm(phi, ps.symmetrized());
      if (symv.is_finite() && flat_sym_base.is_finite())
        chk.count(nearly_equal(symv.value(), flat_sym_base.value(), tol),
                  "symmetrization must be idempotent for dual norms");
    }
  }
}

struct NamedProperty {
  const char* name;
  PropertyFn fn;
};

const std::vector<NamedProperty>& property_table() {
  static const std::vector<NamedProperty> table = {
      {"norm_axioms", prop_norm_axioms},
      {"ball_translation", prop_ball_translation},
      {"validate_definiteness", prop_validate_definiteness},
      {"support_function_routes", prop_support_routes},
      {"translation_invariance", prop_translation_invariance},
      {"tabular_symmetrization_metric", prop_tabular_symmetrization},
      {"ball_nesting", prop_ball_nesting},
      {"entourage_half_composition", prop_half_composition},
      {"cauchy_chain", prop_cauchy_chain},
      {"convergent_prefixes", prop_convergent_prefixes},
      {"symmetric_left_right", prop_symmetric_left_right},
      {"net_cover_bounds", prop_net_cover_bounds},
      {"cover_orientation_blind", prop_cover_orientation_blind},
      {"cover_to_net", prop_cover_to_net},
      {"opnorm_cone", prop_opnorm_cone},
      {"operator_norm_comparison", prop_operator_norm_comparison},
      {"compact_implies_bounded", prop_compact_implies_bounded},
      {"compact_vs_box_oracle", prop_compact_vs_oracle},
      {"combine_nets_two_eps", prop_combine_nets},
      {"limit_nets_three_eps", prop_limit_nets},
      {"operator_qdist_triangle", prop_qdist_triangle},
      {"polar_membership_routes", prop_polar_routes},
      {"dual_operator_identities", prop_dual_operator_identities},
      {"dual_continuity_radius", prop_dual_continuity},
      {"schauder_three_eps", prop_schauder},
      {"func_norm_comparison", prop_func_norm_comparison},
  };
  return table;
}

}  // namespace

SuiteReport run_property_suite(std::uint64_t seed, double tol, int jobs) {
  const auto& table = property_table();
  SuiteReport report;
  report.seed = seed;
  report.tol = tol;
  report.results.resize(table.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= table.size()) break;
      Check chk;
      chk.result.name = table[i].name;
      table[i].fn(seed, tol, chk);
      report.results[i] = chk.result;
    }
  };
  int n_threads = std::max(1, jobs);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  report.all_passed = true;
  for (const auto& r : report.results)
    if (r.failures > 0) report.all_passed = false;
  return report;
}

nlohmann::ordered_json suite_report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.seed;
  j["tolerance"] = report.tol;
  j["all_passed"] = report.all_passed;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json row;
    row["property"] = r.name;
    row["trials"] = r.trials;
    row["failures"] = r.failures;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(row);
  }
  j["properties"] = rows;
  return j;
}

}  // namespace asymlab
