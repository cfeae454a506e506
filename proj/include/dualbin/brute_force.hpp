#ifndef DUALBIN_BRUTE_FORCE_HPP
#define DUALBIN_BRUTE_FORCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dualbin/packing.hpp"

namespace dualbin {

inline constexpr std::size_t kDefaultBruteForceGuard = 30;

// Backtracking bin-packing feasibility: can all the given items go into
// m unit bins? Returns the per-item bin assignment when feasible.
std::optional<std::vector<std::uint64_t>> pack_all_into_bins(
    std::span<const Weight> items, std::uint64_t m);

struct BruteForceResult {
  std::uint64_t opt = 0;
  Packing witness;
};

// Ground-truth optimum. An optimal solution is some largest feasible
// prefix of the weight-sorted items, so the search walks prefix lengths
// downward, deciding each by backtracking. Guarded by instance size.
BruteForceResult brute_force_opt(const Instance& inst,
                                 std::size_t n_guard = kDefaultBruteForceGuard);

}  // namespace dualbin

#endif
