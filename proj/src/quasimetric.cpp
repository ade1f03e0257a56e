#include "asymlab/quasimetric.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace asymlab {
namespace {

void check_triple(const Matrix& d, int i, int j, int k) {
  // Allow a hair of slack so tables produced in floating point round-trip.
  if (d[i][k] > d[i][j] + d[j][k] + 1e-12 * std::max(1.0, d[i][j] + d[j][k])) {
    std::ostringstream os;
    os << "TabularQuasiMetric: triangle inequality fails at (" << i << "," << j << "," << k
       << "): " << d[i][k] << " > " << d[i][j] << " + " << d[j][k];
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

TabularQuasiMetric::TabularQuasiMetric(std::vector<std::string> labels, Matrix distances,
                                       std::uint64_t sample_seed)
    : labels_(std::move(labels)), d_(std::move(distances)) {
  const int n = static_cast<int>(labels_.size());
  if (n == 0) throw std::invalid_argument("TabularQuasiMetric: empty point set");
  if (static_cast<int>(d_.size()) != n)
    throw std::invalid_argument("TabularQuasiMetric: matrix row count mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(d_[i].size()) != n)
      throw std::invalid_argument("TabularQuasiMetric: matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(d_[i][j]) || d_[i][j] < 0.0)
        throw std::invalid_argument("TabularQuasiMetric: entries must be finite nonnegative");
    }
    if (d_[i][i] != 0.0)
      throw std::invalid_argument("TabularQuasiMetric: diagonal must be zero");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d_[i][j] == 0.0 && d_[j][i] == 0.0) {
        qm1_ = false;
        if (!qm1_violation_) qm1_violation_ = std::make_pair(i, j);
      }

  if (n <= 512) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check_triple(d_, i, j, k);
  } else {
    std::mt19937_64 rng(sample_seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const long long trials = 10LL * n * n;
    for (long long t = 0; t < trials; ++t) check_triple(d_, pick(rng), pick(rng), pick(rng));
  }
}

std::optional<int> TabularQuasiMetric::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

TabularQuasiMetric TabularQuasiMetric::conjugate() const {
  TabularQuasiMetric out;
  out.labels_ = labels_;
  out.d_ = transpose(d_);
  out.qm1_ = qm1_;
  out.qm1_violation_ = qm1_violation_;
  return out;
}

TabularQuasiMetric TabularQuasiMetric::symmetrized() const {
  TabularQuasiMetric out;
  out.labels_ = labels_;
  out.d_ = d_;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.d_[i][j] = std::max(d_[i][j], d_[j][i]);
  out.qm1_ = qm1_;
  out.qm1_violation_ = qm1_violation_;
  return out;
}

}  // namespace asymlab
