#ifndef DUALBIN_WEIGHT_HPP
#define DUALBIN_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "dualbin/bigint.hpp"

namespace dualbin {

// Non-negative dyadic rational v / 2^e, always kept canonical: v odd or
// e == 0. The canonical exponent is the bit size of the value. All
// arithmetic and comparisons are exact.
class Weight {
 public:
  Weight() = default;  // zero
  Weight(BigUint numerator, std::uint64_t exponent);

  static Weight from_u64(std::uint64_t numerator, std::uint64_t exponent);
  static Weight one() { return from_u64(1, 0); }
  static Weight parse(std::string_view text);  // "v/2^e"

  const BigUint& numerator() const { return num_; }
  std::uint64_t exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }

  Weight operator+(const Weight& rhs) const;
  Weight operator-(const Weight& rhs) const;  // requires *this >= rhs
  Weight operator*(const Weight& rhs) const;
  std::strong_ordering operator<=>(const Weight& rhs) const;
  bool operator==(const Weight& rhs) const;

  // Numerator rescaled to the given exponent; requires exponent >= e.
  BigUint scaled_numerator(std::uint64_t exponent) const;

  std::string str() const;  // canonical "v/2^e"
  double to_double() const;

 private:
  BigUint num_;
  std::uint64_t exp_ = 0;
};

Weight weight_sum(std::span<const Weight> ws);

}  // namespace dualbin

#endif
