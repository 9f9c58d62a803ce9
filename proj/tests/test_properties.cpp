#include <doctest.h>

#include "support/oracles.hpp"

TEST_CASE("property suite on random networks") {
  testkit::PropertyStats stats = testkit::run_property_suite(40, 2024);
  for (const auto& f : stats.failures) MESSAGE(f);
  CHECK(stats.dags == 40);
  CHECK(stats.checks > 1000);
  CHECK(stats.decoded > 0);
  CHECK(stats.violations == 0);
}

TEST_CASE("library against brute-force oracles") {
  testkit::OracleStats stats = testkit::run_oracle_suite(60, 99);
  for (const auto& f : stats.failures) MESSAGE(f);
  CHECK(stats.min_distance_checks > 0);
  CHECK(stats.mismatches == 0);
}
