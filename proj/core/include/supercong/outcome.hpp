#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "supercong/modarith.hpp"

namespace supercong {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s);
std::optional<Status> parse_status(std::string_view name);

/// Result of one (statement or bridge, prime, parameters) instance. A failure
/// always carries both residues; skipped instances carry the reason.
struct CheckOutcome {
  Status status = Status::skipped;
  std::string reason;
  std::optional<Residue> lhs;
  std::optional<Residue> rhs;
  std::optional<QuadFormWitness> witness;

  static CheckOutcome skipped(std::string why) { return {Status::skipped, std::move(why), {}, {}, {}}; }

  bool operator==(const CheckOutcome&) const = default;
};

/// Raised while evaluating an instance whose hypotheses do not hold.
class SkippedHypothesis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace supercong
