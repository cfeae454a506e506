#include "dualbin/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dualbin/rng.hpp"

namespace dualbin {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

Instance fill_uniform(const GenSpec& spec, std::uint64_t numerator_max) {
  std::mt19937_64 rng(spec.seed);
  Instance inst;
  inst.bins = spec.m;
  inst.weights.reserve(spec.n);
  for (std::uint64_t i = 0; i < spec.n; ++i)
    inst.weights.push_back(
        Weight::from_u64(uniform_u64(rng, 1, numerator_max), spec.s));
  return inst;
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
  require(spec.s >= 1 && spec.s <= 62, "bit size s must lie in [1, 62]");
  if (spec.family == "uniform") {
    return fill_uniform(spec, std::uint64_t{1} << spec.s);
  }
  if (spec.family == "small-heavy") {
    require(spec.eps.has_value(), "small-heavy needs eps");
    require(!spec.eps->is_zero() && *spec.eps <= Weight::one(),
            "eps must lie in (0, 1]");
    require(spec.eps->exponent() <= spec.s, "eps finer than the bit size s");
    // floor(eps * 2^s) keeps every weight at or below eps
    std::uint64_t cap =
        (spec.eps->scaled_numerator(spec.s)).to_u64();
    require(cap >= 1, "eps too small for the bit size s");
    return fill_uniform(spec, cap);
  }
  if (spec.family == "ffi-adversarial") {
    require(spec.s >= 3, "ffi-adversarial needs s >= 3");
    std::uint64_t unit = std::uint64_t{1} << (spec.s - 3);  // 1/8 at scale s
    std::mt19937_64 rng(spec.seed);
    Instance inst;
    inst.bins = spec.m;
    inst.weights.reserve(spec.n);
    for (std::uint64_t i = 0; i < spec.n; ++i)
      inst.weights.push_back(
          Weight::from_u64(uniform_u64(rng, 3 * unit + 1, 5 * unit), spec.s));
    return inst;
  }
  if (spec.family == "reduction-derived") {
    BspInstance bsp = generate_bsp(spec.n, spec.s, spec.seed);
    return build_reduction_instance(bsp);
  }
  throw std::invalid_argument("unknown instance family '" + spec.family + "'");
}

BspInstance generate_bsp(std::uint64_t n, std::uint64_t value_bits,
                         std::uint64_t seed) {
  require(n >= 1, "separation instance needs at least one value");
  // constructed weights carry value+4 bits, so keep the values modest
  require(value_bits >= 1 && value_bits <= 20, "value bits must lie in [1, 20]");
  std::uint64_t value_max = std::uint64_t{1} << value_bits;
  require(value_max >= n, "not enough distinct values for n");
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < n) chosen.insert(uniform_u64(rng, 1, value_max));
  std::vector<std::uint64_t> values(chosen.begin(), chosen.end());
  // arrival order is a seeded shuffle of the distinct values
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[uniform_u64(rng, 0, i - 1)]);
  std::uint64_t n1 = uniform_u64(rng, 0, n);
  return BspInstance::from_values(n1, std::move(values));
}

}  // namespace dualbin
