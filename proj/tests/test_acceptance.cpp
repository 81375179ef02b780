// Dedicated acceptance binary: runs the full suite once, printing one
// pass/fail line per criterion, and asserts every verdict.

#include "gw/selftest.hpp"

#include <iostream>

#include "doctest.h"

TEST_CASE("acceptance suite is green") {
  const gw::SelftestReport report = gw::run_selftest(&std::cout);
  REQUIRE(report.results.size() == 10);
  for (const gw::CriterionResult& r : report.results) {
    CAPTURE(r.index);
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  CHECK(report.all_pass);
}

TEST_CASE("corrupted multiplicity table is caught") {
  // Negative control: the identity check must be able to fail.
  const gw::CriterionResult corrupted = gw::check_intersection_identity(true);
  CHECK_FALSE(corrupted.pass);
  const gw::CriterionResult honest = gw::check_intersection_identity(false);
  CHECK(honest.pass);
}
