#pragma once

#include <cstdint>

#include "asymlab/norms.hpp"

namespace asymlab {

/// Deterministic low-discrepancy sampling plan for unit balls clipped to a
/// box: Halton points in [-radius, radius]^dim filtered by mu(x) <= 1. The
/// seed only shifts the start index of the sequence.
struct SamplePlan {
  double box_radius = 10.0;
  int target_count = 2048;
  std::uint64_t seed = 0;
};

double halton(std::uint64_t index, int base);

/// Points of the clipped ball, zero vector first. Stops after target_count
/// accepted points or a fixed candidate budget, whichever comes first.
std::vector<Vec> sample_ball(const PolyAsymNorm& mu, const SamplePlan& plan);

}  // namespace asymlab
