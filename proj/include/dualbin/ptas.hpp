#ifndef DUALBIN_PTAS_HPP
#define DUALBIN_PTAS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dualbin/grouped.hpp"
#include "dualbin/packing.hpp"

namespace dualbin {

struct SplitResult {
  std::vector<std::size_t> small_items;  // weight <= eps, arrival order
  std::vector<std::size_t> large_items;  // weight > eps, arrival order
  Weight small_weight;                   // exact total over small_items
};

// Boundary items (weight == eps) count as small.
SplitResult split_small_large(const Instance& inst, const Weight& eps);

// Item indices reordered by (weight, original index) ascending.
std::vector<std::size_t> sort_by_weight(const Instance& inst,
                                        std::span<const std::size_t> items);

// Greedy maximum-cardinality prefix: takes smallest-weight items while
// the running total stays within budget. `large_sorted` must be sorted
// by weight ascending.
std::vector<std::size_t> select_l_prime(const Instance& inst,
                                        std::span<const std::size_t> large_sorted,
                                        const Weight& budget);

struct GroupSpec {
  std::uint64_t group_size = 0;                   // floor(eps * m)
  std::vector<std::uint64_t> group_sizes;         // full groups, last may be short
  std::vector<Weight> rounded_weights;            // per group: its max true weight
  std::vector<std::vector<std::size_t>> members;  // item indices per group
  std::size_t groups() const { return group_sizes.size(); }
};

// Splits the sorted selection into consecutive groups of floor(eps*m)
// items and rounds each group's weights up to the group maximum.
// Requires a nonempty selection and eps*m >= 1.
GroupSpec group_and_round(const Instance& inst,
                          std::span<const std::size_t> l_prime_sorted,
                          std::uint64_t m, const Weight& eps);

// Adjacent groups can share a rounded weight; the DP wants strictly
// increasing classes, so equal-weight groups merge. Both the offline
// solver and the online player perform the identical merge.
struct MergedClasses {
  GroupedInstance gi;
  std::vector<std::size_t> class_of_group;
};
MergedClasses merge_rounded(std::span<const std::uint64_t> sizes,
                            std::span<const Weight> rounded, std::uint64_t m);

enum class PtasBranch {
  SmallCertificate,  // FFI over the small items rejected one of them
  Grouped,           // selection + rounding + DP + first-fit completion
};

struct PtasResult {
  Packing packing;
  PtasBranch branch = PtasBranch::Grouped;
  std::size_t small_count = 0;
  std::size_t large_count = 0;
  std::size_t l_prime_count = 0;
  std::uint64_t group_size = 0;
  std::uint64_t groups = 0;
  std::uint64_t dp_count = 0;
};

// Floor of eps*m as an integer (the group size).
std::uint64_t floor_eps_m(const Weight& eps, std::uint64_t m);

// Approximation scheme: certificate branch when greedy already saturates
// the bins with small items, otherwise pack a weight-capped selection of
// large items via the grouped DP and first-fit the small items into the
// space left by the rounded reservations.
PtasResult ptas_solve(const Instance& inst, const Weight& eps,
                      std::uint64_t dp_state_guard = kDefaultDpStateGuard);

// The grouped path unconditionally (no certificate branch). This is the
// offline twin of the advice player's packing.
PtasResult grouped_pipeline(const Instance& inst, const Weight& eps,
                            std::uint64_t dp_state_guard = kDefaultDpStateGuard);

}  // namespace dualbin

#endif
