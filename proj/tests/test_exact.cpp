#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dualbin/brute_force.hpp"
#include "dualbin/errors.hpp"
#include "dualbin/grouped.hpp"
#include "support.hpp"

using namespace dualbin;
using testsupport::make_instance;
using testsupport::w;

namespace {

GroupedInstance grouped(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ws,
                        const std::vector<std::uint64_t>& counts, std::uint64_t m) {
  GroupedInstance gi;
  for (const auto& [num, exp] : ws) gi.weights.push_back(w(num, exp));
  gi.counts = counts;
  gi.bins = m;
  return gi;
}

Instance expand_arrivals(const GroupedInstance& gi) {
  Instance inst;
  inst.bins = gi.bins;
  for (std::size_t c = 0; c < gi.classes(); ++c) {
    for (std::uint64_t i = 0; i < gi.counts[c]; ++i)
      inst.weights.push_back(gi.weights[c]);
  }
  return inst;
}

}  // namespace

TEST_CASE("bin tuple enumeration is exhaustive and lexicographic") {
  auto halves = enumerate_bin_tuples(grouped({{1, 1}}, {3}, 1));
  CHECK(halves == std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});

  auto mixed = enumerate_bin_tuples(grouped({{3, 3}, {3, 2}}, {2, 1}, 1));
  CHECK(mixed == std::vector<std::vector<std::uint32_t>>{
                     {0, 0}, {0, 1}, {1, 0}, {2, 0}});  // 3/8+3/4 overflows

  auto ones = enumerate_bin_tuples(grouped({{1, 0}}, {5}, 1));
  CHECK(ones == std::vector<std::vector<std::uint32_t>>{{0}, {1}});

  CHECK_THROWS_AS(enumerate_bin_tuples(grouped({}, {}, 1)), std::invalid_argument);
}

TEST_CASE("grouped dp matches hand-checked optima") {
  GroupedInstance gi = grouped({{3, 3}, {3, 2}}, {3, 2}, 2);
  DPSolution dp = solve_grouped_dp(gi);
  CHECK(dp.best_count == 3);  // {3/8,3/8} and {3/4}; no bin fits both kinds
  CHECK(dp.best_count == brute_force_opt(expand_arrivals(gi)).opt);

  CHECK(solve_grouped_dp(grouped({{1, 1}}, {4}, 2)).best_count == 4);
  CHECK(solve_grouped_dp(grouped({{1, 1}}, {4}, 0)).best_count == 0);
}

TEST_CASE("dp witnesses expand to feasible packings with the same count") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testsupport::random_grouped_arrivals(rng, 10, 3, 3, 4);
    GroupedInstance gi = group_by_weight(inst);
    DPSolution dp = solve_grouped_dp(gi);
    Packing p = expand_solution(inst, gi, dp);
    VerifyReport report = verify_packing(inst, p);
    CHECK(report.ok());
    CHECK(report.packed_count == dp.best_count);
    // per-bin tuples must each fit a single bin
    for (const auto& tuple : dp.bin_contents) {
      Weight load;
      for (std::size_t c = 0; c < gi.classes(); ++c)
        for (std::uint32_t q = 0; q < tuple[c]; ++q) load = load + gi.weights[c];
      CHECK(load <= Weight::one());
    }
  }
}

TEST_CASE("dp equals the backtracking oracle on random instances") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = testsupport::random_grouped_arrivals(rng, 12, 4, 4, 4);
    GroupedInstance gi = group_by_weight(inst);
    CHECK(solve_grouped_dp(gi).best_count == brute_force_opt(inst).opt);
  }
}

TEST_CASE("dp count is monotone in bins and multiplicities") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testsupport::random_grouped_arrivals(rng, 8, 3, 3, 4);
    GroupedInstance gi = group_by_weight(inst);
    std::uint64_t base = solve_grouped_dp(gi).best_count;
    GroupedInstance more_bins = gi;
    more_bins.bins += 1;
    CHECK(solve_grouped_dp(more_bins).best_count >= base);
    GroupedInstance more_items = gi;
    more_items.counts[uniform_u64(rng, 0, gi.classes() - 1)] += 1;
    CHECK(solve_grouped_dp(more_items).best_count >= base);
  }
}

TEST_CASE("dp reconstruction is deterministic") {
  GroupedInstance gi = grouped({{1, 2}, {1, 1}, {3, 2}}, {3, 2, 2}, 3);
  DPSolution a = solve_grouped_dp(gi);
  DPSolution b = solve_grouped_dp(gi);
  CHECK(a.best_count == b.best_count);
  CHECK(a.bin_contents == b.bin_contents);
}

TEST_CASE("dp state guard raises a resource error") {
  GroupedInstance gi = grouped({{1, 4}, {1, 3}}, {30, 30}, 4);
  CHECK_THROWS_AS(solve_grouped_dp(gi, 100), ResourceLimitError);
}

TEST_CASE("brute force finds maximal sorted prefixes") {
  Instance inst = make_instance({{3, 3}, {3, 3}, {3, 3}, {3, 2}, {3, 2}}, 2);
  BruteForceResult result = brute_force_opt(inst);
  CHECK(result.opt == 3);
  VerifyReport report = verify_packing(inst, result.witness);
  CHECK(report.ok());
  CHECK(report.packed_count == 3);

  Instance ones = make_instance({{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, 3);
  CHECK(brute_force_opt(ones).opt == 3);  // one per bin

  CHECK(brute_force_opt(make_instance({}, 2)).opt == 0);
  CHECK(brute_force_opt(make_instance({{1, 1}, {1, 1}}, 0)).opt == 0);

  Instance big = make_instance(
      std::vector<std::pair<std::uint64_t, std::uint64_t>>(31, {1, 1}), 2);
  CHECK_THROWS_AS(brute_force_opt(big), ResourceLimitError);
}

TEST_CASE("feasibility backtracking agrees with simple counting") {
  // 13/32 items: two per bin fit, three never do
  std::vector<Weight> items(7, Weight::parse("13/2^5"));
  CHECK(pack_all_into_bins(items, 4).has_value());
  items.assign(9, Weight::parse("13/2^5"));
  CHECK_FALSE(pack_all_into_bins(items, 4).has_value());
}
