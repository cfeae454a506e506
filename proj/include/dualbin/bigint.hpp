#ifndef DUALBIN_BIGINT_HPP
#define DUALBIN_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dualbin {

// Arbitrary-precision unsigned integer, little-endian 32-bit limbs.
// Provides exactly the operations dyadic weight arithmetic needs; no
// general division.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t value);

  static BigUint from_decimal(std::string_view text);
  static BigUint power_of_two(std::size_t k);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  std::size_t bit_length() const;          // 0 for zero
  std::size_t trailing_zero_bits() const;  // zero input yields 0
  bool bit(std::size_t i) const;

  std::uint64_t to_u64() const;  // throws std::overflow_error if it does not fit
  std::string to_decimal() const;

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
  friend BigUint operator+(BigUint a, const BigUint& b) {
    a += b;
    return a;
  }
  friend BigUint operator-(BigUint a, const BigUint& b) {
    a -= b;
    return a;
  }
  BigUint operator*(const BigUint& rhs) const;
  BigUint operator<<(std::size_t bits) const;
  BigUint operator>>(std::size_t bits) const;

  std::strong_ordering operator<=>(const BigUint& rhs) const;
  bool operator==(const BigUint& rhs) const = default;

 private:
  void normalize();

  std::vector<std::uint32_t> limbs_;
};

}  // namespace dualbin

#endif
