#include "dualbin/brute_force.hpp"

#include <algorithm>
#include <numeric>

#include "dualbin/errors.hpp"

namespace dualbin {

namespace {

// Backtracks over items in decreasing weight order. Prunes: equal-load
// bins are interchangeable, equal items are forced into non-decreasing
// bin indices, and a branch dies when the remaining weight cannot fit
// into the remaining free space.
struct FeasibilitySearch {
  std::span<const Weight> items;  // sorted decreasing
  std::vector<Weight> loads;
  std::vector<Weight> suffix_weight;
  std::vector<std::uint64_t> chosen;
  Weight free_total;

  bool run(std::size_t idx, std::uint64_t min_bin) {
    if (idx == items.size()) return true;
    if (suffix_weight[idx] > free_total) return false;
    const Weight& w = items[idx];
    std::vector<const Weight*> tried;
    for (std::uint64_t b = (idx > 0 && items[idx] == items[idx - 1]) ? min_bin : 0;
         b < loads.size(); ++b) {
      Weight next = loads[b] + w;
      if (next > Weight::one()) continue;
      bool duplicate = false;
      for (const Weight* seen : tried) {
        if (*seen == loads[b]) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      tried.push_back(&loads[b]);
      Weight saved = loads[b];
      loads[b] = next;
      free_total = free_total - w;
      chosen[idx] = b;
      if (run(idx + 1, b)) return true;
      loads[b] = saved;
      free_total = free_total + w;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint64_t>> pack_all_into_bins(
    std::span<const Weight> items, std::uint64_t m) {
  if (items.empty()) return std::vector<std::uint64_t>{};
  if (m == 0) return std::nullopt;

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[b] < items[a];
  });
  std::vector<Weight> sorted(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) sorted[i] = items[order[i]];

  FeasibilitySearch search;
  search.items = sorted;
  search.loads.assign(m, Weight{});
  search.chosen.assign(items.size(), 0);
  search.suffix_weight.assign(items.size() + 1, Weight{});
  for (std::size_t i = items.size(); i-- > 0;)
    search.suffix_weight[i] = search.suffix_weight[i + 1] + sorted[i];
  search.free_total = Weight::from_u64(m, 0);
  if (!search.run(0, 0)) return std::nullopt;

  std::vector<std::uint64_t> assignment(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    assignment[order[i]] = search.chosen[i];
  return assignment;
}

BruteForceResult brute_force_opt(const Instance& inst, std::size_t n_guard) {
  if (inst.size() > n_guard)
    throw ResourceLimitError("instance too large for the brute-force oracle (n = " +
                             std::to_string(inst.size()) + ", guard = " +
                             std::to_string(n_guard) + ")");
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.weights[a] < inst.weights[b];
  });

  std::vector<Weight> prefix(inst.size() + 1, Weight{});
  for (std::size_t i = 0; i < inst.size(); ++i)
    prefix[i + 1] = prefix[i] + inst.weights[order[i]];
  Weight capacity = Weight::from_u64(inst.bins, 0);

  std::vector<Weight> items;
  for (std::size_t n = inst.size(); n > 0; --n) {
    if (prefix[n] > capacity) continue;
    items.clear();
    for (std::size_t i = 0; i < n; ++i) items.push_back(inst.weights[order[i]]);
    auto assignment = pack_all_into_bins(items, inst.bins);
    if (!assignment) continue;
    BruteForceResult result;
    result.opt = n;
    result.witness = Packing::all_rejected(inst.size());
    for (std::size_t i = 0; i < n; ++i)
      result.witness.assignment[order[i]] = static_cast<std::int64_t>((*assignment)[i]);
    return result;
  }
  return {0, Packing::all_rejected(inst.size())};
}

}  // namespace dualbin
