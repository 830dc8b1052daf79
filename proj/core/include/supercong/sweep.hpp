#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/outcome.hpp"
#include "supercong/statement.hpp"

namespace supercong {

/// How parameter residues are chosen per prime. `automatic` enumerates every
/// residue for e = 1 statements at p <= 500 and draws 32 at random otherwise.
struct ParamStrategy {
  enum class Kind { automatic, all, random, fixed };

  Kind kind = Kind::automatic;
  std::size_t count = 32;
  std::vector<std::int64_t> values;

  static ParamStrategy all() { return {Kind::all, 0, {}}; }
  static ParamStrategy random(std::size_t count) { return {Kind::random, count, {}}; }
  static ParamStrategy fixed(std::vector<std::int64_t> values) { return {Kind::fixed, 0, std::move(values)}; }

  /// "auto", "all", "random:N" or "fixed:v1,v2,...".
  static std::optional<ParamStrategy> parse(std::string_view text);
  std::string describe() const;

  /// Sorted, distinct residues in [0, p) for this prime.
  std::vector<std::int64_t> params_for(std::uint32_t p, unsigned power, std::uint64_t seed) const;

  bool operator==(const ParamStrategy&) const = default;
};

struct InstanceResult {
  std::uint32_t p = 0;
  std::vector<std::int64_t> params;
  CheckOutcome outcome;

  bool operator==(const InstanceResult&) const = default;
};

struct Totals {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;

  std::size_t instances() const noexcept { return pass + fail + skipped; }
  bool operator==(const Totals&) const = default;
};

struct Report {
  std::string statement;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::string strategy;
  std::uint64_t seed = 0;
  std::vector<InstanceResult> results;
  Totals totals;
  std::uint64_t duration_ms = 0;
  std::string version;

  bool operator==(const Report&) const = default;
};

Totals tally(const std::vector<InstanceResult>& results);

class RangeTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  /// 0 means hardware concurrency.
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  /// Upper limit on the estimated number of instances.
  std::uint64_t budget = 20'000'000;
  /// Failures at primes up to this bound are recomputed by the exact route.
  std::uint32_t recheck_limit = 5000;
};

/// Estimated instance count, used against SweepOptions::budget.
std::uint64_t estimate_instances(const StatementSpec& spec, std::uint32_t lo, std::uint32_t hi,
                                 const ParamStrategy& strategy);

/// Checks every prime in [lo, hi] with the chosen parameters. Results are in
/// (p, params) order whatever the number of workers. Failures are rechecked
/// by check_statement_exact and their reason says whether it agreed.
Report sweep(const StatementSpec& spec, std::uint32_t lo, std::uint32_t hi, const ParamStrategy& strategy,
             const SweepOptions& options = {});

std::string library_version();

}  // namespace supercong
