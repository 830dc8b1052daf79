#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "supercong/statement.hpp"
#include "supercong/sweep.hpp"

namespace supercong::cli {

enum ExitCode : int { kOk = 0, kFailures = 1, kUsage = 2 };

enum class Format { text, json, csv };

struct VerifyConfig {
  std::uint32_t lo = 5;
  std::uint32_t hi = 1000;
  ParamStrategy strategy;
  SweepOptions sweep;
  Format format = Format::text;
  int verbosity = 1;
};

/// Parses "lo..hi".
std::optional<std::pair<std::uint32_t, std::uint32_t>> parse_prime_range(std::string_view text);

/// Worker count: SUPERCONG_JOBS if set, else `requested`, else hardware
/// concurrency.
unsigned resolve_jobs(unsigned requested);

/// Sweeps every spec and writes the reports. Returns kFailures if any
/// instance failed.
int cmd_verify(const std::vector<const StatementSpec*>& specs, const VerifyConfig& config, std::ostream& out,
               std::ostream& err);

/// Entry point shared by the executable and the tests; args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supercong::cli
