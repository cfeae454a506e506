#include "dualbin/weight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dualbin {

Weight::Weight(BigUint numerator, std::uint64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  std::uint64_t strip = std::min<std::uint64_t>(num_.trailing_zero_bits(), exp_);
  if (strip) {
    num_ = num_ >> strip;
    exp_ -= strip;
  }
}

Weight Weight::from_u64(std::uint64_t numerator, std::uint64_t exponent) {
  return Weight(BigUint(numerator), exponent);
}

Weight Weight::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0)
    throw std::invalid_argument("weight must be written as v/2^e");
  std::string_view den = text.substr(slash + 1);
  if (den.size() < 3 || den[0] != '2' || den[1] != '^')
    throw std::invalid_argument("weight denominator must be a power of two (2^e)");
  BigUint num;
  std::uint64_t exp = 0;
  try {
    num = BigUint::from_decimal(text.substr(0, slash));
    BigUint e = BigUint::from_decimal(den.substr(2));
    exp = e.to_u64();
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("weight exponent too large");
  }
  return Weight(std::move(num), exp);
}

Weight Weight::operator+(const Weight& rhs) const {
  std::uint64_t e = std::max(exp_, rhs.exp_);
  return Weight(scaled_numerator(e) + rhs.scaled_numerator(e), e);
}

Weight Weight::operator-(const Weight& rhs) const {
  std::uint64_t e = std::max(exp_, rhs.exp_);
  BigUint a = scaled_numerator(e);
  BigUint b = rhs.scaled_numerator(e);
  if (a < b) throw std::invalid_argument("weight subtraction would go negative");
  return Weight(a - b, e);
}

Weight Weight::operator*(const Weight& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  return Weight(num_ * rhs.num_, exp_ + rhs.exp_);
}

std::strong_ordering Weight::operator<=>(const Weight& rhs) const {
  if (is_zero() || rhs.is_zero()) {
    return (is_zero() ? 0 : 1) <=> (rhs.is_zero() ? 0 : 1);
  }
  // value = num * 2^-exp, so bit_length - exp orders by magnitude first
  std::int64_t mag_l = static_cast<std::int64_t>(num_.bit_length()) -
                       static_cast<std::int64_t>(exp_);
  std::int64_t mag_r = static_cast<std::int64_t>(rhs.num_.bit_length()) -
                       static_cast<std::int64_t>(rhs.exp_);
  if (mag_l != mag_r) return mag_l <=> mag_r;
  std::uint64_t e = std::max(exp_, rhs.exp_);
  return scaled_numerator(e) <=> rhs.scaled_numerator(e);
}

bool Weight::operator==(const Weight& rhs) const {
  return exp_ == rhs.exp_ && num_ == rhs.num_;  // canonical form is unique
}

BigUint Weight::scaled_numerator(std::uint64_t exponent) const {
  if (exponent < exp_)
    throw std::invalid_argument("cannot rescale weight to a smaller exponent");
  return num_ << (exponent - exp_);
}

std::string Weight::str() const {
  return num_.to_decimal() + "/2^" + std::to_string(exp_);
}

double Weight::to_double() const {
  if (is_zero()) return 0.0;
  std::size_t bits = num_.bit_length();
  std::uint64_t top = 0;
  std::size_t take = std::min<std::size_t>(bits, 53);
  for (std::size_t i = 0; i < take; ++i) {
    top = (top << 1) | (num_.bit(bits - 1 - i) ? 1u : 0u);
  }
  double scale_pow = static_cast<double>(bits) - static_cast<double>(take) -
                     static_cast<double>(exp_);
  if (scale_pow < -1100.0) return 0.0;
  return std::ldexp(static_cast<double>(top), static_cast<int>(scale_pow));
}

Weight weight_sum(std::span<const Weight> ws) {
  Weight total;
  for (const Weight& w : ws) total = total + w;
  return total;
}

}  // namespace dualbin
