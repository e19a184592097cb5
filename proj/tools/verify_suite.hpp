#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace biharm::verify {

struct Options {
  std::uint64_t seed = 20181;
  /// Zero tolerance for symbolic identities, relative to term magnitudes.
  double tolerance = 1e-10;
};

struct CheckResult {
  std::string module;
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Runs the property suites of every kernel module with a fixed seed.
std::vector<CheckResult> run_all(const Options& opts);

}  // namespace biharm::verify
