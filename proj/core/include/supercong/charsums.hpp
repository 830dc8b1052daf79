#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "supercong/outcome.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// Quadratic character of F_p as a lookup table over residues.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(std::uint32_t p);

  std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
  int operator()(Residue x) const { return table_[x % table_.size()]; }

 private:
  std::vector<std::int8_t> table_;
};

/// Curve y^2 = x^3 + m x + n.
struct CubicParams {
  Residue m = 0;
  Residue n = 0;
};

/// sum_{x in F_p} ((x^3 + m x + n) / p). Throws std::logic_error if the
/// result leaves the Hasse interval [-2 sqrt p, 2 sqrt p].
long cubic_char_sum(const QuadraticCharacter& chi, CubicParams params);
long cubic_char_sum(const PrimeCtx& ctx, CubicParams params);

/// The five congruences tying Legendre polynomials at floor(p/3) and
/// floor(p/4), cubic character sums and truncated binomial sums together.
enum class Bridge {
  p3_charsum,     // P_[p/3](t) vs -(p/3) sum chi(x^3 + 3(4t-5)x + 2(2t^2-14t+11))
  p3_square,      // sum_{k<=(p-1)/2} C(2k,k)^2 C(3k,k) ((1-t^2)/108)^k vs P_[p/3](t)^2
  p4_charsum,     // P_[p/4](t) vs -(6/p) sum chi(x^3 - 3(3t+5)/2 x + 9t + 7)
  p4_square,      // sum_{k<=(p-1)/2} C(2k,k)^2 C(4k,2k) ((1-t^2)/256)^k vs P_[p/4](t)^2
  cubic_square,   // (sum chi(x^3+mx+n))^2 vs (-3m/p) sum_{k<=[p/6]} C(2k,k)C(3k,k)C(6k,3k) ((4m^3+27n^2)/(12^3 4m^3))^k
};

std::string_view bridge_name(Bridge which);
std::optional<Bridge> parse_bridge(std::string_view name);

/// Evaluates both sides mod p. `param` is t for the Legendre-polynomial
/// bridges and m for cubic_square, where `param2` is n. The table must have
/// e = 1. Returns skipped when a required inverse vanishes or m = 0.
CheckOutcome bridge_check(Bridge which, const FactTable& table, const QuadraticCharacter& chi, Residue param,
                          Residue param2 = 0);

}  // namespace supercong
