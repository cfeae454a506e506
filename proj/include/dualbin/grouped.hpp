#ifndef DUALBIN_GROUPED_HPP
#define DUALBIN_GROUPED_HPP

#include <cstdint>
#include <vector>

#include "dualbin/packing.hpp"

namespace dualbin {

inline constexpr std::uint64_t kDefaultDpStateGuard = 100'000'000;

// A multiset of items described by k strictly increasing distinct weights
// and their multiplicities, to be packed into `bins` unit bins.
struct GroupedInstance {
  std::vector<Weight> weights;        // strictly increasing, each in (0, 1]
  std::vector<std::uint64_t> counts;  // multiplicities, same length
  std::uint64_t bins = 0;

  std::size_t classes() const { return weights.size(); }
  std::uint64_t total_items() const;
  void validate() const;  // throws std::invalid_argument
};

// Collapses an instance to its distinct weights (sorted increasing).
GroupedInstance group_by_weight(const Instance& inst);

// Item indices per class, ascending, matching group_by_weight's order.
std::vector<std::vector<std::size_t>> class_members(const Instance& inst,
                                                    const GroupedInstance& gi);

// All per-class count tuples (l_1, ..., l_k) with l_i <= counts[i] and
// sum l_i * w_i <= 1, in lexicographic order.
std::vector<std::vector<std::uint32_t>> enumerate_bin_tuples(
    const GroupedInstance& gi);

struct DPSolution {
  std::uint64_t best_count = 0;
  // One count tuple per bin. The layout is canonical: filling proceeds
  // bin by bin, always choosing the lexicographically first maximizing
  // tuple, so identical inputs reproduce identical layouts.
  std::vector<std::vector<std::uint32_t>> bin_contents;
};

// Exact optimum of the grouped problem by dynamic programming over
// multiplicity vectors. The table size prod(counts[i]+1) * (bins+1) must
// stay below state_guard or a ResourceLimitError is thrown.
DPSolution solve_grouped_dp(const GroupedInstance& gi,
                            std::uint64_t state_guard = kDefaultDpStateGuard);

// Materializes a DP solution over the original instance, filling each
// class's slots with its smallest-index members, bins in index order.
Packing expand_solution(const Instance& inst, const GroupedInstance& gi,
                        const DPSolution& dp);

}  // namespace dualbin

#endif
