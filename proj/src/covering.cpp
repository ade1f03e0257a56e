#include "asymlab/covering.hpp"

namespace asymlab::detail {
namespace {

struct CoverSearch {
  const std::vector<std::uint32_t>& sets;
  int best;

  void dfs(std::uint32_t uncovered, int used) {
    if (uncovered == 0) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    int max_gain = 0;
    for (auto s : sets) max_gain = std::max(max_gain, __builtin_popcount(s & uncovered));
    if (max_gain == 0) return;
    int remaining = __builtin_popcount(uncovered);
    if (used + (remaining + max_gain - 1) / max_gain >= best) return;

    int low = __builtin_ctz(uncovered);
    std::vector<int> order;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] & (1u << low)) order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return __builtin_popcount(sets[a] & uncovered) > __builtin_popcount(sets[b] & uncovered);
    });
    for (int i : order) dfs(uncovered & ~sets[i], used + 1);
  }
};

}  // namespace

int exact_set_cover(const std::vector<std::uint32_t>& sets, std::uint32_t universe) {
  CoverSearch search{sets, __builtin_popcount(universe) + 1};
  // Greedy warm start tightens the pruning bound.
  std::uint32_t uncovered = universe;
  int greedy = 0;
  while (uncovered) {
    std::uint32_t pick = 0;
    for (auto s : sets)
      if (__builtin_popcount(s & uncovered) > __builtin_popcount(pick & uncovered)) pick = s;
    if ((pick & uncovered) == 0) break;
    uncovered &= ~pick;
    ++greedy;
  }
  if (uncovered == 0) search.best = greedy;
  search.dfs(universe, 0);
  return search.best;
}

}  // namespace asymlab::detail
