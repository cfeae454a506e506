#ifndef DUALBIN_RNG_HPP
#define DUALBIN_RNG_HPP

#include <cstdint>
#include <random>

namespace dualbin {

// Unbiased uniform draw from [lo, hi]. Hand-rolled rejection sampling so
// that seeded runs reproduce bit-for-bit across standard libraries.
inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t lo,
                                 std::uint64_t hi) {
  std::uint64_t span = hi - lo + 1;  // hi == UINT64_MAX with lo == 0 wraps to 0
  if (span == 0) return rng();
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + draw % span;
}

}  // namespace dualbin

#endif
