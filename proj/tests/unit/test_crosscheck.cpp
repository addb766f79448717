#include <doctest.h>

#include "scrolls/crosscheck.hpp"

using namespace scrolls;

TEST_CASE("quick scope runs clean") {
  auto report = run_crosscheck(CrosscheckScope::Quick);
  CHECK(report.ok());
  CHECK(report.total() > 1000);
  // Every suite executed.
  for (const char* suite : {"oracle", "fundamental", "standard", "delta", "family",
                            "bijection", "transform", "classify"})
    CHECK(report.suite_counts.count(suite) == 1);
}

TEST_CASE("fault injection names the offending tuple") {
  auto report = run_crosscheck(CrosscheckScope::Quick, true);
  CHECK(!report.ok());
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].suite == "delta");
  CHECK(!report.failures[0].tuple.empty());
}
