#ifndef DUALBIN_PACKING_HPP
#define DUALBIN_PACKING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dualbin/instance.hpp"

namespace dualbin {

inline constexpr std::int64_t kRejected = -1;

// Per-item decision: a bin index in [0, m) or kRejected.
struct Packing {
  std::vector<std::int64_t> assignment;

  static Packing all_rejected(std::size_t n) {
    return Packing{std::vector<std::int64_t>(n, kRejected)};
  }
  std::size_t packed_count() const;
};

struct VerifyReport {
  bool structure_ok = false;     // sizes and bin indices are sane
  std::string structure_error;   // set when structure_ok is false
  bool feasible = false;         // all bin loads <= 1
  std::size_t packed_count = 0;
  std::vector<std::uint64_t> overfull_bins;
  std::vector<Weight> loads;

  bool ok() const { return structure_ok && feasible; }
};

// Checks both constraint families: at most one bin per item (structural,
// by representation), and exact load <= 1 per bin. Structural problems
// (wrong assignment length, bin index out of range) are reported apart
// from infeasibility.
VerifyReport verify_packing(const Instance& inst, const Packing& p);

// Exact per-bin loads; requires a structurally valid packing.
std::vector<Weight> bin_loads(const Instance& inst, const Packing& p);

}  // namespace dualbin

#endif
