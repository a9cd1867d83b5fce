#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zpw {

struct SuiteConfig {
  std::vector<std::int64_t> primes;  // empty = suite default
  int trials = 0;                    // 0 = suite default
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool passed() const { return failures == 0; }
};

// Property suites shared by the CLI and the test binaries. Every suite is
// deterministic under a fixed config.
SuiteResult suite_parseval(const SuiteConfig& cfg);   // + transform round trip
SuiteResult suite_young(const SuiteConfig& cfg);
SuiteResult suite_vdp(const SuiteConfig& cfg);        // kernel and mean bounds
SuiteResult suite_identities(const SuiteConfig& cfg); // trivial/complement/dilation
SuiteResult suite_tk_lower(const SuiteConfig& cfg);   // + 2-fold energy case
SuiteResult suite_sumdiff(const SuiteConfig& cfg);
SuiteResult suite_scattered(const SuiteConfig& cfg);
SuiteResult suite_blichfeldt(const SuiteConfig& cfg);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace zpw
