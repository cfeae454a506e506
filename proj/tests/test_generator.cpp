#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualbin/generator.hpp"
#include "support.hpp"

using namespace dualbin;
using testsupport::w;

TEST_CASE("same seed reproduces the same instance") {
  GenSpec spec{"uniform", 8, 2, 4, 1, {}};
  Instance a = generate_instance(spec);
  Instance b = generate_instance(spec);
  CHECK(a.weights == b.weights);
  CHECK(serialize_instance(a) == serialize_instance(b));
  spec.seed = 2;
  CHECK_FALSE(generate_instance(spec).weights == a.weights);

  BspInstance bsp_a = generate_bsp(9, 6, 5);
  BspInstance bsp_b = generate_bsp(9, 6, 5);
  CHECK(bsp_a.values == bsp_b.values);
  CHECK(bsp_a.n1 == bsp_b.n1);
}

TEST_CASE("family contracts") {
  GenSpec uniform{"uniform", 30, 3, 5, 7, {}};
  for (const Weight& wt : generate_instance(uniform).weights) {
    CHECK(!wt.is_zero());
    CHECK(wt <= Weight::one());
  }

  GenSpec small{"small-heavy", 30, 3, 6, 7, w(1, 3)};
  for (const Weight& wt : generate_instance(small).weights) CHECK(wt <= w(1, 3));

  GenSpec nearhalf{"ffi-adversarial", 30, 3, 5, 7, {}};
  for (const Weight& wt : generate_instance(nearhalf).weights) {
    CHECK(w(3, 3) < wt);
    CHECK(wt <= w(5, 3));
  }

  GenSpec reduction{"reduction-derived", 4, 0, 6, 7, {}};
  Instance constructed = generate_instance(reduction);
  CHECK(constructed.size() == 8);  // 2n items
  CHECK(constructed.bins == 4);    // n bins, family overrides m
  for (const Weight& wt : constructed.weights) {
    CHECK(w(1, 1) - w(1, 3) < wt);
    CHECK(wt <= w(1, 1) + w(1, 3));
  }
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(generate_instance({"nope", 4, 2, 4, 1, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_instance({"small-heavy", 4, 2, 4, 1, {}}),
                  std::invalid_argument);  // needs eps
  CHECK_THROWS_AS(generate_instance({"ffi-adversarial", 4, 2, 2, 1, {}}),
                  std::invalid_argument);  // needs s >= 3
  CHECK_THROWS_AS(generate_instance({"uniform", 4, 2, 0, 1, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_bsp(9, 3, 1), std::invalid_argument);  // 2^3 < 9
}
