#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kbu {

struct SelftestConfig {
  uint64_t seed = 42;
  int64_t cases = 1000;
  int64_t word_len = 64;   // syllables in random free words
  int64_t pi1k_bound = 10; // |m|,|n| of random elements of Z x| Z
  int64_t p2_bound = 5;    // |m|,|n| fed to theta and P2 elements
  int64_t kerg_bound = 5;  // |k|,|l| of random B_{k,l} factors
  int64_t buc_bound = 8;   // |k|,|l| and |r2| on the obstruction grids
  /// Replace theta by a corrupted copy in the theta suites. Harness check only.
  bool mutant = false;
};

struct SuiteReport {
  std::string name;
  int64_t checks = 0;
  int64_t failures = 0;
  /// Smallest failing case seen, after shrinking where the inputs are words.
  std::string counterexample;
};

struct SelftestReport {
  std::vector<SuiteReport> suites;
  bool ok() const;
  std::string format() const;
};

/// Throws Error(PreconditionFail) on a config with cases or bounds < 1.
SelftestReport run_selftest(const SelftestConfig& cfg);

}  // namespace kbu
