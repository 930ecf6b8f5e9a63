#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posetmat/bounds.hpp"
#include "posetmat/io.hpp"

namespace posetmat {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name), writing the
/// result document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Every applicable coefficient of binom(n, floor(n/2)) for P, as emitted by
/// `bounds`.
Json bounds_table(const Poset& p, const std::string& name, const PipelineOptions& pipeline);

/// One "path<TAB>value" line per leaf.
std::string to_tsv(const Json& doc);

}  // namespace posetmat
