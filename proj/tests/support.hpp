#ifndef DUALBIN_TESTS_SUPPORT_HPP
#define DUALBIN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "dualbin/brute_force.hpp"
#include "dualbin/instance.hpp"
#include "dualbin/packing.hpp"
#include "dualbin/rng.hpp"

namespace testsupport {

using namespace dualbin;

inline Weight w(std::uint64_t num, std::uint64_t exp) {
  return Weight::from_u64(num, exp);
}

inline Instance make_instance(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& weights,
    std::uint64_t bins) {
  Instance inst;
  inst.bins = bins;
  for (const auto& [num, exp] : weights) inst.weights.push_back(w(num, exp));
  return inst;
}

inline Instance random_instance(std::mt19937_64& rng, std::uint64_t max_n,
                                std::uint64_t max_m, std::uint64_t s) {
  Instance inst;
  inst.bins = uniform_u64(rng, 0, max_m);
  std::uint64_t n = uniform_u64(rng, 0, max_n);
  for (std::uint64_t i = 0; i < n; ++i)
    inst.weights.push_back(w(uniform_u64(rng, 1, std::uint64_t{1} << s), s));
  return inst;
}

// Instance with at most max_k distinct weights, n in [1, max_n].
inline Instance random_grouped_arrivals(std::mt19937_64& rng, std::uint64_t max_n,
                                        std::uint64_t max_m, std::uint64_t max_k,
                                        std::uint64_t s) {
  std::vector<Weight> palette;
  std::uint64_t k =
      uniform_u64(rng, 1, std::min(max_k, std::uint64_t{1} << s));
  while (palette.size() < k) {
    Weight cand = w(uniform_u64(rng, 1, std::uint64_t{1} << s), s);
    bool fresh = true;
    for (const Weight& seen : palette) {
      if (seen == cand) fresh = false;
    }
    if (fresh) palette.push_back(cand);
  }
  Instance inst;
  inst.bins = uniform_u64(rng, 0, max_m);
  std::uint64_t n = uniform_u64(rng, 1, max_n);
  for (std::uint64_t i = 0; i < n; ++i)
    inst.weights.push_back(palette[uniform_u64(rng, 0, k - 1)]);
  return inst;
}

// Exhaustive optimum of the weight-capped large-selection problem: the
// most large items (taken smallest first) that respect the budget and
// still pack into m bins. Independent of the grouped DP under test.
inline std::uint64_t lfp_opt(const Instance& inst,
                             const std::vector<std::size_t>& large_sorted,
                             const Weight& budget, std::uint64_t m) {
  std::vector<Weight> prefix_items;
  std::vector<Weight> prefix_sum(large_sorted.size() + 1, Weight{});
  for (std::size_t i = 0; i < large_sorted.size(); ++i)
    prefix_sum[i + 1] = prefix_sum[i] + inst.weights[large_sorted[i]];
  for (std::size_t t = large_sorted.size(); t > 0; --t) {
    if (prefix_sum[t] > budget) continue;
    prefix_items.clear();
    for (std::size_t i = 0; i < t; ++i)
      prefix_items.push_back(inst.weights[large_sorted[i]]);
    if (pack_all_into_bins(prefix_items, m)) return t;
  }
  return 0;
}

// Valid only for arrival-order first fit: every rejection must happen at
// a moment when no bin could take the item.
inline bool ff_never_rejects_feasible(const Instance& inst, const Packing& p) {
  std::vector<Weight> loads(inst.bins, Weight{});
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Weight& wi = inst.weights[i];
    if (p.assignment[i] == kRejected) {
      for (std::uint64_t b = 0; b < inst.bins; ++b) {
        if (loads[b] + wi <= Weight::one()) return false;
      }
    } else {
      loads[p.assignment[i]] = loads[p.assignment[i]] + wi;
    }
  }
  return true;
}

}  // namespace testsupport

#endif
