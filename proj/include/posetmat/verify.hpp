#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetmat/extremal.hpp"
#include "posetmat/io.hpp"

namespace posetmat {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  ExOptions ex;
};

/// Names accepted by run_check, in the order `all` runs them.
const std::vector<std::string>& check_names();

/// Runs one named property check. The result has "name", "passed" and
/// "details", plus "counterexample" on failure.
Json run_check(const std::string& name, const VerifyOptions& options);

}  // namespace posetmat
