#include "doctest.h"
#include "wahl/verify/verify.hpp"

using namespace wahl;

TEST_CASE("verify filtering and digests") {
  verify::Options opts;
  opts.only_prefix = "zak";
  opts.check_determinism = false;

  const auto report = verify::run(opts);
  CHECK(report.checks.size() == 6);
  CHECK(report.failed == 0);
  for (const auto& c : report.checks) {
    CHECK(c.criterion == 5);
    CHECK(c.provenance == "literature");
    CHECK(c.id.rfind("zak", 0) == 0);
  }

  const auto again = verify::run(opts);
  CHECK(verify::canonical_digest(report) == verify::canonical_digest(again));
}

TEST_CASE("verify failure injection") {
  verify::Options opts;
  opts.only_prefix = "fano-params";
  opts.inject_failure_id = "fano-params/2,5";
  opts.check_determinism = false;

  const auto report = verify::run(opts);
  CHECK(report.checks.size() == 6);
  CHECK(report.failed == 1);
  CHECK_FALSE(report.all_passed());
  for (const auto& c : report.checks) {
    if (c.id == opts.inject_failure_id) {
      CHECK_FALSE(c.pass);
      CHECK(c.expected == "INJECTED-WRONG-VALUE");
      CHECK(c.computed == "363");
    } else {
      CHECK(c.pass);
    }
  }
}
