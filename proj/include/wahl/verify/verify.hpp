#ifndef WAHL_VERIFY_VERIFY_HPP
#define WAHL_VERIFY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wahl/gaussmap/gaussian.hpp"

namespace wahl::verify {

// One verification check: a computed quantity against its expected value,
// with the reference the expectation comes from and how trustworthy it is
// (literature constant, derived constant, or a triviality).
struct CheckRecord {
  std::string id;
  int criterion = 0;  // grouping used by the acceptance gate (1..7)
  std::string reference;
  std::string provenance;
  std::string expected;
  std::string computed;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct Options {
  std::uint64_t seed = gaussmap::kDefaultSeed;
  int retries = 3;
  std::string only_prefix;        // run only checks whose id starts with this
  std::string inject_failure_id;  // test hook: force one check to fail
  bool check_determinism = true;  // re-run the suite and compare
};

struct Report {
  std::vector<CheckRecord> checks;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_passed() const { return failed == 0; }
};

Report run(const Options& opts);

// Serialisation of everything except runtimes; equal digests mean the two
// runs verified the same facts with the same outcomes.
std::string canonical_digest(const Report& report);

}  // namespace wahl::verify

#endif
