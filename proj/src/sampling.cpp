#include "asymlab/sampling.hpp"

namespace asymlab {
namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13};
constexpr std::uint64_t kCandidateBudget = 1u << 18;

}  // namespace

double halton(std::uint64_t index, int base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::vector<Vec> sample_ball(const PolyAsymNorm& mu, const SamplePlan& plan) {
  const int dim = mu.dim();
  if (dim > 6) throw std::invalid_argument("sample_ball: dimension too large");
  std::vector<Vec> out;
  out.push_back(zeros(dim));
  const std::uint64_t start = 1 + (plan.seed % 997) * 131;
  for (std::uint64_t k = 0; k < kCandidateBudget; ++k) {
    if (static_cast<int>(out.size()) >= plan.target_count) break;
    Vec x(dim);
    for (int j = 0; j < dim; ++j)
      x[j] = (2.0 * halton(start + k, kPrimes[j]) - 1.0) * plan.box_radius;
    if (mu.eval(x) <= 1.0) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace asymlab
