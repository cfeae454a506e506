#ifndef DUALBIN_GENERATOR_HPP
#define DUALBIN_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dualbin/instance.hpp"
#include "dualbin/reduction.hpp"

namespace dualbin {

// Seeded instance families:
//   uniform          numerators uniform in [1, 2^s] at exponent s
//   small-heavy      weights at most eps (requires eps)
//   ffi-adversarial  near-half weights in (3/8, 5/8] (requires s >= 3)
//   reduction-derived  the constructed instance of a random separation
//                      problem with n values (2n items, n bins)
struct GenSpec {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t s = 4;
  std::uint64_t seed = 0;
  std::optional<Weight> eps;
};

Instance generate_instance(const GenSpec& spec);

// Random separation instance: n distinct values of at most `value_bits`
// bits, a seed-chosen large count.
BspInstance generate_bsp(std::uint64_t n, std::uint64_t value_bits,
                         std::uint64_t seed);

}  // namespace dualbin

#endif
