#ifndef DUALBIN_REDUCTION_HPP
#define DUALBIN_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualbin/online.hpp"

namespace dualbin {

// Binary separation: values arrive online and must each be guessed as
// belonging to the large or the small side of a hidden threshold
// partition. Exactly n1 values exceed the threshold.
struct BspInstance {
  std::uint64_t n1 = 0;
  std::vector<std::uint64_t> values;
  std::uint64_t threshold = 0;  // value > threshold means large

  std::size_t size() const { return values.size(); }
  std::uint64_t n2() const { return values.size() - n1; }
  bool is_large(std::size_t i) const { return values[i] > threshold; }

  // Derives the threshold; throws if no strict large/small split with
  // exactly n1 large values exists.
  static BspInstance from_values(std::uint64_t n1, std::vector<std::uint64_t> values);
};

// Text format: first record "n n1", then n positive integers. Same
// whitespace/comment rules as instance files.
BspInstance parse_bsp(std::string_view text);
std::string serialize_bsp(const BspInstance& bsp);

// Strictly decreasing dyadic map into (1/16, 3/32]: f(y) = 1/16 + 2^-(y+4).
// The bounds keep every constructed weight inside (1/2 - 1/8, 1/2 + 1/8],
// so no bin ever holds three items.
Weight f_map(std::uint64_t y);

inline Weight delta_min() { return Weight::from_u64(1, 4); }   // 1/16
inline Weight delta_max() { return Weight::from_u64(1, 3); }   // 1/8

// The dual-bin-packing instance the reduction presents to the wrapped
// algorithm: n1 items of 1/2 + delta_min, then 1/2 - f(y_i) per value,
// then complements 1/2 + f(y_i) for every truly small value. m = n bins.
Instance build_reduction_instance(const BspInstance& bsp);

// A packing of the constructed instance that packs all 2n items: each
// large pairs with a preprocessing item, each small with its complement.
Packing explicit_pairing(const BspInstance& bsp);

struct ReductionReport {
  std::uint64_t p1 = 0;  // unpacked preprocessing items
  std::uint64_t l2 = 0;  // unpacked large middle-phase items
  std::uint64_t s2 = 0;  // unpacked small middle-phase items
  std::uint64_t p3 = 0;  // unpacked complements
  std::uint64_t g1 = 0;  // correct guesses on large values
  std::uint64_t g2 = 0;  // correct guesses on small values

  std::uint64_t unpacked_total() const { return p1 + l2 + s2 + p3; }
  std::uint64_t mistakes(std::uint64_t n) const { return n - g1 - g2; }
};

struct ReductionRun {
  ReductionReport report;
  Instance constructed;
  Packing packing;
  std::vector<bool> guessed_large;
  std::vector<bool> guess_correct;
};

// Feeds the three phases to the solver; while the middle phase runs, a
// value is declared large exactly when the solver packs its item into a
// bin that already holds a preprocessing item. Correctness of each guess
// is revealed immediately after it is made (and never used).
ReductionRun reduce_and_run(const BspInstance& bsp, OnlineSolver& solver);

// Guaranteed-correct-guess lower bounds from the unpacked counts.
std::int64_t accounting_bound_tight(std::uint64_t p1, std::uint64_t l2,
                                    std::uint64_t s2, std::uint64_t p3,
                                    std::uint64_t n1, std::uint64_t n2);
std::int64_t accounting_bound_loose(std::uint64_t p1, std::uint64_t l2,
                                    std::uint64_t s2, std::uint64_t p3,
                                    std::uint64_t n1, std::uint64_t n2);

// Advice bits needed for at most r mistakes out of n guesses:
// (1 - H((n-r)/n)) * n, defined for (n-r)/n in [1/2, 1]; nullopt outside
// that regime. H(1) is taken as its limit 0.
std::optional<double> entropy_lower_bound(std::uint64_t n, std::uint64_t r);

}  // namespace dualbin

#endif
