#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dualbin/bigint.hpp"
#include "dualbin/errors.hpp"
#include "dualbin/generator.hpp"
#include "dualbin/instance.hpp"
#include "dualbin/packing.hpp"
#include "support.hpp"

using namespace dualbin;
using testsupport::make_instance;
using testsupport::w;

TEST_CASE("biguint decimal round trip and arithmetic") {
  CHECK(BigUint::from_decimal("0").to_decimal() == "0");
  CHECK(BigUint::from_decimal("18446744073709551616").to_decimal() ==
        "18446744073709551616");  // 2^64
  CHECK((BigUint(123456789) * BigUint(987654321)).to_decimal() ==
        "121932631112635269");
  CHECK((BigUint::power_of_two(100) >> 100).to_u64() == 1);
  CHECK((BigUint(1) << 200).bit_length() == 201);
  CHECK(BigUint(40) - BigUint(15) == BigUint(25));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uint64_t a = rng() >> 33, b = rng() >> 33;
    CHECK((BigUint(a) + BigUint(b)).to_u64() == a + b);
    CHECK((BigUint(a) * BigUint(b)).to_u64() == a * b);
    CHECK((BigUint(a) <=> BigUint(b)) == (a <=> b));
  }
}

TEST_CASE("weights canonicalize and compare exactly") {
  CHECK(w(2, 2) == w(1, 1));
  CHECK(w(8, 3) == Weight::one());
  CHECK(w(3, 3).str() == "3/2^3");
  CHECK(Weight::parse("6/2^4") == w(3, 3));
  CHECK(w(1, 1) + w(1, 2) == w(3, 2));
  CHECK(w(3, 2) - w(1, 1) == w(1, 2));
  CHECK(w(3, 2) * w(1, 1) == w(3, 3));
  CHECK(w(1, 4) < w(1, 3));
  CHECK_THROWS_AS(Weight::parse("1/3^2"), std::invalid_argument);
  CHECK_THROWS_AS(w(1, 2) - w(1, 1), std::invalid_argument);
  CHECK(w(1, 1).to_double() == doctest::Approx(0.5));
}

TEST_CASE("weight arithmetic is associative and commutative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Weight a = w(uniform_u64(rng, 1, 1 << 10), uniform_u64(rng, 0, 12));
    Weight b = w(uniform_u64(rng, 1, 1 << 10), uniform_u64(rng, 0, 12));
    Weight c = w(uniform_u64(rng, 1, 1 << 10), uniform_u64(rng, 0, 12));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("weight_sum") {
  std::vector<Weight> ws{w(1, 1), w(1, 2)};
  CHECK(weight_sum(ws) == w(3, 2));
  CHECK(weight_sum(std::span<const Weight>{}).is_zero());
  std::vector<Weight> big{w(3, 2), w(3, 2)};
  CHECK(weight_sum(big) == w(3, 1));  // 3/2, sums may exceed one
}

TEST_CASE("instance parsing") {
  Instance inst = parse_instance("2 1\n1/2^1\n1/2^1\n");
  CHECK(inst.size() == 2);
  CHECK(inst.bins == 1);
  CHECK(inst.max_bit_size() == 1);
  CHECK(inst.weights[0] == w(1, 1));

  Instance single = parse_instance("1 1\n3/2^2");
  CHECK(single.max_bit_size() == 2);
  CHECK(single.weights[0] == w(3, 2));

  CHECK_THROWS_AS(parse_instance("1 1\n5/2^2"), ParseError);   // 5/4 > 1
  CHECK_THROWS_AS(parse_instance("1 1\n0/2^2"), ParseError);   // zero weight
  CHECK_THROWS_AS(parse_instance("2 -1\n1/2^1\n1/2^1"), ParseError);
  CHECK_THROWS_AS(parse_instance("3 1\n1/2^1\n1/2^1"), ParseError);
  CHECK_THROWS_AS(parse_instance("1 1\nnope"), ParseError);

  // comments and flexible whitespace
  Instance commented = parse_instance("# header\n2 2  # counts\n1/2^1\n 3/2^2 \n");
  CHECK(commented.size() == 2);
  CHECK(commented.bins == 2);

  // line numbers surface in errors
  try {
    parse_instance("2 1\n1/2^1\n5/2^2\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("instance serialization round trips field for field") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = testsupport::random_instance(rng, 20, 5, 6);
    Instance back = parse_instance(serialize_instance(inst));
    REQUIRE(back.size() == inst.size());
    CHECK(back.bins == inst.bins);
    for (std::size_t i = 0; i < inst.size(); ++i)
      CHECK(back.weights[i] == inst.weights[i]);
  }
  for (const char* family :
       {"uniform", "small-heavy", "ffi-adversarial", "reduction-derived"}) {
    GenSpec spec{family, 8, 3, 5, 42, Weight::from_u64(1, 3)};
    Instance inst = generate_instance(spec);
    Instance back = parse_instance(serialize_instance(inst));
    CHECK(back.weights == std::vector<Weight>(inst.weights));
    CHECK(back.bins == inst.bins);
  }
}

TEST_CASE("verify_packing checks loads and structure") {
  Instance half_half = make_instance({{1, 1}, {1, 1}}, 1);
  Packing both{{0, 0}};
  VerifyReport report = verify_packing(half_half, both);
  CHECK(report.ok());
  CHECK(report.packed_count == 2);  // load exactly one

  Instance heavy = make_instance({{3, 2}, {1, 1}}, 1);
  VerifyReport overfull = verify_packing(heavy, both);
  CHECK(overfull.structure_ok);
  CHECK_FALSE(overfull.feasible);
  CHECK(overfull.overfull_bins == std::vector<std::uint64_t>{0});

  Packing partial{{0, kRejected}};
  VerifyReport one_packed = verify_packing(heavy, partial);
  CHECK(one_packed.ok());
  CHECK(one_packed.packed_count == 1);

  // structural problems are distinct from infeasibility
  VerifyReport short_assignment = verify_packing(heavy, Packing{{0}});
  CHECK_FALSE(short_assignment.structure_ok);
  CHECK_FALSE(short_assignment.structure_error.empty());
  VerifyReport bad_bin = verify_packing(heavy, Packing{{0, 7}});
  CHECK_FALSE(bad_bin.structure_ok);

  // m = 0 is legal: everything must be rejected
  Instance no_bins = make_instance({{1, 1}}, 0);
  CHECK(verify_packing(no_bins, Packing::all_rejected(1)).ok());
  CHECK_FALSE(verify_packing(no_bins, Packing{{0}}).structure_ok);
}

TEST_CASE("verify_packing is pure") {
  Instance inst = make_instance({{3, 2}, {1, 1}, {1, 2}}, 2);
  Packing p{{0, 1, kRejected}};
  VerifyReport a = verify_packing(inst, p);
  VerifyReport b = verify_packing(inst, p);
  CHECK(a.feasible == b.feasible);
  CHECK(a.packed_count == b.packed_count);
  CHECK(a.loads == b.loads);
}
