#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "supercong/charsums.hpp"
#include "supercong/outcome.hpp"
#include "supercong/padic.hpp"
#include "supercong/sequences.hpp"
#include "supercong/statement.hpp"

namespace supercong {

/// Per-prime state for evaluating statements: context, factorial table and
/// lazily built sequence tables. Owned by one worker at a time.
class PrimeWorkspace {
 public:
  PrimeWorkspace(std::uint32_t p, unsigned e);

  const PrimeCtx& ctx() const noexcept { return table_.ctx(); }
  const FactTable& table() const noexcept { return table_; }
  /// Values for n = 0 .. p-1 modulo p^e.
  const std::vector<Residue>& sequence(SeqId id);

 private:
  FactTable table_;
  std::array<std::optional<std::vector<Residue>>, 4> sequences_;
};

class NoRepresentation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ExpectedValue {
  Residue value = 0;
  std::optional<QuadFormWitness> witness;
};

/// Resolves the row of `cases` covering p, finds the representation of p (or
/// 2p) by the row's form and evaluates the row's value modulo p^e. Throws
/// SkippedHypothesis when no row covers p and NoRepresentation when the
/// form has no solution.
ExpectedValue quadform_expected(const CaseTable& cases, std::uint32_t p, unsigned e);

/// Reason the prime fails the statement's hypotheses, if any.
std::optional<std::string> hypothesis_failure(const StatementSpec& spec, std::uint32_t p);

/// Fast route: p-adic factorial tables and residue arithmetic. The workspace
/// exponent must be at least spec.power(). `param` is ignored by statements
/// without a parameter and reduced mod p otherwise.
CheckOutcome check_statement(const StatementSpec& spec, PrimeWorkspace& ws, std::optional<std::int64_t> param);
CheckOutcome check_statement(const StatementSpec& spec, std::uint32_t p, std::optional<std::int64_t> param);

/// Independent route: exact big-integer sums over a common denominator,
/// reduced mod p^e only at the end; characters via GMP's Legendre symbol.
CheckOutcome check_statement_exact(const StatementSpec& spec, std::uint32_t p, std::optional<std::int64_t> param);

}  // namespace supercong
