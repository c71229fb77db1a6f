#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "json.hpp"
#include "logperm/errors.hpp"
#include "logperm/limits.hpp"

namespace logperm::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kOutside = 2, kBudget = 3, kCertificateViolation = 4 };

ExitCode exit_code_for(ErrorCode code);

struct BenchmarkResult {
  nlohmann::json report;  // {"rows": [...], "suite", "seed", "all_pass"}
  bool all_pass = true;
};

/// Seeded random in-region instances, each approximated and checked against
/// the exact oracle. Suites "small" and "medium".
BenchmarkResult run_benchmark(std::string_view suite, std::uint64_t seed, const Limits& limits = {});

/// Entry point of the logperm tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logperm::cli
