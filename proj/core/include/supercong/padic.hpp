#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "supercong/modarith.hpp"

namespace supercong {

/// An integer written as unit * p^val with the unit kept modulo p^e.
/// Valuations are exact (never capped at e) so quotients of factorials
/// cancel correctly.
struct PadicScaled {
  bool zero = false;
  std::uint32_t val = 0;
  Residue unit = 1;

  static PadicScaled one() { return {}; }
  static PadicScaled zero_value() { return {true, 0, 0}; }

  bool operator==(const PadicScaled&) const = default;
};

class NegativeValuation : public std::logic_error {
 public:
  NegativeValuation() : std::logic_error("p-adic quotient has negative valuation") {}
};

PadicScaled padic_from_int(std::uint64_t n, const PrimeCtx& ctx);
PadicScaled padic_mul(const PadicScaled& x, const PadicScaled& y, const PrimeCtx& ctx);
/// Throws std::domain_error on a zero divisor and NegativeValuation when
/// val(x) < val(y).
PadicScaled padic_div(const PadicScaled& x, const PadicScaled& y, const PrimeCtx& ctx);
/// unit * p^val mod p^e; 0 once val >= e.
Residue to_residue(const PadicScaled& x, const PrimeCtx& ctx);

/// Number of carries when adding k and n - k in base p (Kummer), i.e. the
/// exact p-adic valuation of C(n, k).
unsigned kummer_carries(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// n! as PadicScaled for every n <= 6(p - 1), which covers C(6k, 3k) for
/// k < p. Stores inverse units as well so a binomial costs two products.
class FactTable {
 public:
  explicit FactTable(const PrimeCtx& ctx);

  const PrimeCtx& ctx() const noexcept { return ctx_; }
  std::size_t limit() const noexcept { return val_.size() - 1; }

  PadicScaled factorial(std::size_t n) const { return {false, val_.at(n), unit_.at(n)}; }

  /// C(n, k), or zero when k > n.
  PadicScaled binom(std::size_t n, std::size_t k) const {
    if (k > n) return PadicScaled::zero_value();
    const std::uint32_t v = val_[n] - val_[k] - val_[n - k];
    const Residue u = ctx_.mul(ctx_.mul(unit_[n], inv_unit_[k]), inv_unit_[n - k]);
    return {false, v, u};
  }

  Residue binom_residue(std::size_t n, std::size_t k) const { return to_residue(binom(n, k), ctx_); }

 private:
  PrimeCtx ctx_;
  std::vector<std::uint32_t> val_;
  std::vector<Residue> unit_;
  std::vector<Residue> inv_unit_;
};

FactTable build_fact_table(const PrimeCtx& ctx);

/// C(n, k) with 0 <= k <= n <= table.limit(). In debug builds the valuation
/// is cross-checked against Kummer's carry count.
PadicScaled binom_padic(std::size_t n, std::size_t k, const FactTable& table);

}  // namespace supercong
