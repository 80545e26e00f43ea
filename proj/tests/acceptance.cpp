// Acceptance gate: runs the full verification battery and prints one
// pass/fail line per criterion tag.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "itl/verify.hpp"

TEST_CASE("full verification battery") {
  auto results = itl::run_verification(/*full=*/true);
  REQUIRE(results.size() >= 12);
  for (auto& r : results) {
    std::printf("[ACCEPTANCE] %s %s — %s\n", r.pass ? "PASS" : "FAIL", r.tag.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(r.pass, r.tag, ": ", r.detail);
  }
}
