#include "supercong/charsums.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "supercong/kernels.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

QuadraticCharacter::QuadraticCharacter(std::uint32_t p) : table_(p, -1) {
  if (p < 3) throw std::invalid_argument("QuadraticCharacter: p must be an odd prime");
  table_[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) table_[x * x % p] = 1;
}

long cubic_char_sum(const QuadraticCharacter& chi, CubicParams params) {
  const std::uint64_t p = chi.p();
  const Residue m = params.m % p, n = params.n % p;
  long s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = x * x % p;
    s += chi((x2 * x + m * x + n) % p);
  }
  if (static_cast<double>(s) * static_cast<double>(s) > 4.0 * static_cast<double>(p)) {
    throw std::logic_error("cubic character sum " + std::to_string(s) + " violates the Hasse bound for p = " +
                           std::to_string(p));
  }
  return s;
}

long cubic_char_sum(const PrimeCtx& ctx, CubicParams params) {
  if (ctx.e() != 1) throw std::invalid_argument("cubic_char_sum: context must have e = 1");
  return cubic_char_sum(QuadraticCharacter(ctx.p()), params);
}

std::string_view bridge_name(Bridge which) {
  switch (which) {
    case Bridge::p3_charsum: return "p3-charsum";
    case Bridge::p3_square: return "p3-square";
    case Bridge::p4_charsum: return "p4-charsum";
    case Bridge::p4_square: return "p4-square";
    case Bridge::cubic_square: return "cubic-square";
  }
  return "?";
}

std::optional<Bridge> parse_bridge(std::string_view name) {
  for (auto b : {Bridge::p3_charsum, Bridge::p3_square, Bridge::p4_charsum, Bridge::p4_square, Bridge::cubic_square}) {
    if (bridge_name(b) == name) return b;
  }
  return std::nullopt;
}

namespace {

CheckOutcome compare(Residue lhs, Residue rhs) {
  CheckOutcome out;
  out.status = lhs == rhs ? Status::pass : Status::fail;
  out.lhs = lhs;
  out.rhs = rhs;
  return out;
}

}  // namespace

CheckOutcome bridge_check(Bridge which, const FactTable& table, const QuadraticCharacter& chi, Residue param,
                          Residue param2) {
  const PrimeCtx& ctx = table.ctx();
  if (ctx.e() != 1) throw std::invalid_argument("bridge_check: context must have e = 1");
  const std::uint32_t p = ctx.p();
  const ModInt t(ctx, param);
  auto charsum_residue = [&](const ModInt& lin, const ModInt& cst) {
    return ctx.from_int(cubic_char_sum(chi, {lin.value(), cst.value()}));
  };

  try {
    switch (which) {
      case Bridge::p3_charsum: {
        const Residue lhs = legendre_poly_mod(p / 3, t.value(), table);
        const Residue s = charsum_residue(3 * (4 * t - 5), 2 * (2 * t * t - 14 * t + 11));
        return compare(lhs, ctx.from_int(-legendre_symbol(p, 3) * static_cast<long>(s)));
      }
      case Bridge::p3_square: {
        const ModInt x = (1 - t * t) / 108;
        const Residue lhs = truncated_sum(Kernel::central_sq_c3k, (p - 1) / 2, x.value(), table);
        const Residue poly = legendre_poly_mod(p / 3, t.value(), table);
        return compare(lhs, ctx.mul(poly, poly));
      }
      case Bridge::p4_charsum: {
        const Residue lhs = legendre_poly_mod(p / 4, t.value(), table);
        const Residue s = charsum_residue(-(3 * (3 * t + 5)) / 2, 9 * t + 7);
        return compare(lhs, ctx.from_int(-legendre_symbol(6, p) * static_cast<long>(s)));
      }
      case Bridge::p4_square: {
        const ModInt x = (1 - t * t) / 256;
        const Residue lhs = truncated_sum(Kernel::central_sq_c4k, (p - 1) / 2, x.value(), table);
        const Residue poly = legendre_poly_mod(p / 4, t.value(), table);
        return compare(lhs, ctx.mul(poly, poly));
      }
      case Bridge::cubic_square: {
        const ModInt m = t, n(ctx, param2);
        if (m.value() == 0) return CheckOutcome::skipped("m = 0 mod p");
        const long s = cubic_char_sum(chi, {m.value(), n.value()});
        const Residue lhs = ctx.from_int(s * s);
        const ModInt x = (4 * m * m * m + 27 * n * n) / (1728 * 4 * m * m * m);
        const int sign = legendre_symbol(static_cast<std::int64_t>((-3 * m).value()), p);
        const Residue sum = truncated_sum(Kernel::central_c3k_c6k, p / 6, x.value(), table);
        return compare(lhs, sign < 0 ? ctx.neg(sum) : sum);
      }
    }
  } catch (const NotInvertible& e) {
    return CheckOutcome::skipped(e.what());
  }
  throw std::invalid_argument("bridge_check: unknown bridge");
}

}  // namespace supercong
