#include <doctest.h>

#include "errors.hpp"
#include "selftest.hpp"

using namespace kbu;

namespace {

SelftestConfig small(uint64_t seed) {
  SelftestConfig c;
  c.seed = seed;
  c.cases = 100;
  return c;
}

}  // namespace

TEST_CASE("default configuration passes every suite") {
  const SelftestReport r = run_selftest(SelftestConfig{});
  CHECK(r.ok());
  REQUIRE(r.suites.size() == 5);
  const char* names[] = {"word", "pi1k", "p2", "kerg", "buc"};
  for (size_t i = 0; i < r.suites.size(); ++i) {
    CHECK(r.suites[i].name == names[i]);
    CHECK(r.suites[i].checks > 0);
    CHECK(r.suites[i].failures == 0);
  }
}

TEST_CASE("other seeds pass") {
  for (uint64_t seed : {7ull, 1ull, 123456789ull}) CHECK(run_selftest(small(seed)).ok());
}

TEST_CASE("a corrupted theta is caught with a counterexample") {
  SelftestConfig c = small(42);
  c.mutant = true;
  const SelftestReport r = run_selftest(c);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& s : r.suites)
    if (s.failures > 0) found = found || !s.counterexample.empty();
  CHECK(found);
  CHECK(r.format().find("FAIL") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CHECK(run_selftest(small(9)).format() == run_selftest(small(9)).format());
}

TEST_CASE("invalid configurations are rejected") {
  SelftestConfig c;
  c.cases = 0;
  CHECK_THROWS_AS(run_selftest(c), Error);
  c = SelftestConfig{};
  c.kerg_bound = 0;
  CHECK_THROWS_AS(run_selftest(c), Error);
}
