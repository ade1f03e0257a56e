#pragma once

#include <cstdint>
#include <random>

#include "asymlab/operators.hpp"
#include "asymlab/quasimetric.hpp"

namespace asymlab {

/// Engine for one instance of a seeded batch; mixing keeps instances
/// independent of each other and of the batch order.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t instance);

struct NormGenOptions {
  int dim = 2;
  int min_gens = 1;
  int max_gens = 5;
  bool integer_entries = false;
  double entry_scale = 2.0;
};

/// Random polyhedral asymmetric norm passing definiteness; retries until
/// the generators span, topping up with scaled coordinate rows if needed.
PolyAsymNorm random_valid_norm(std::mt19937_64& rng, const NormGenOptions& opts);

Vec random_vec(std::mt19937_64& rng, int dim, double scale);
Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, double scale,
                     bool integer_entries);

/// Distance table of random points embedded in a random 2-D normed space;
/// triangle inequality holds by construction. Symmetric variant uses the
/// symmetrized norm.
TabularQuasiMetric random_tabular(std::mt19937_64& rng, int n_points, bool symmetric);

/// Sampling-saturation oracle for operator compactness in dimensions 1-2:
/// the unit ball is clipped to a small and a large box, both sampled
/// (interior grid plus exact boundary with subdivisions); the operator is
/// declared compact when the small-box image net keeps covering the
/// large-box image. Intended for integer-entry instances, whose growth
/// along recession rays clears the threshold by a wide margin.
struct BoxOracleParams {
  double inner_box = 12.0;
  double outer_box = 36.0;
  double coverage = 6.0;  // accepted covering radius
};

bool box_saturation_compact_oracle(const LinOperator& a, NormSelector mu, NormSelector nu,
                                   const BoxOracleParams& params = {});

/// Samples functional pairs at dual distance <= delta on the codomain side
/// and checks the pulled-back pairs stay within eps on the domain side.
/// Returns the number of failed pairs.
int dual_continuity_failures(const LinOperator& a, double eps, int n_pairs,
                             std::mt19937_64& rng, double tol = 1e-9);

}  // namespace asymlab
