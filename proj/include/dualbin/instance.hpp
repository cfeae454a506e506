#ifndef DUALBIN_INSTANCE_HPP
#define DUALBIN_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dualbin/weight.hpp"

namespace dualbin {

// An ordered arrival sequence of item weights plus the bin count m.
// Every weight lies in (0, 1]; bins have unit capacity.
struct Instance {
  std::vector<Weight> weights;
  std::uint64_t bins = 0;

  std::size_t size() const { return weights.size(); }

  // Maximum canonical exponent over all weights (the precision s).
  std::uint64_t max_bit_size() const;
};

// Text format: first record "n m", then n records "v/2^e". Records are
// whitespace separated; '#' starts a comment that runs to end of line.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

}  // namespace dualbin

#endif
