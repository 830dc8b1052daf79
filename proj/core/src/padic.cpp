#include "supercong/padic.hpp"

#include <cassert>

namespace supercong {

PadicScaled padic_from_int(std::uint64_t n, const PrimeCtx& ctx) {
  if (n == 0) return PadicScaled::zero_value();
  std::uint32_t v = 0;
  while (n % ctx.p() == 0) {
    n /= ctx.p();
    ++v;
  }
  return {false, v, n % ctx.modulus()};
}

PadicScaled padic_mul(const PadicScaled& x, const PadicScaled& y, const PrimeCtx& ctx) {
  if (x.zero || y.zero) return PadicScaled::zero_value();
  return {false, x.val + y.val, ctx.mul(x.unit, y.unit)};
}

PadicScaled padic_div(const PadicScaled& x, const PadicScaled& y, const PrimeCtx& ctx) {
  if (y.zero) throw std::domain_error("p-adic division by zero");
  if (x.zero) return x;
  if (x.val < y.val) throw NegativeValuation();
  return {false, x.val - y.val, ctx.mul(x.unit, ctx.inv(y.unit))};
}

Residue to_residue(const PadicScaled& x, const PrimeCtx& ctx) {
  if (x.zero || x.val >= ctx.e()) return 0;
  return ctx.mul(x.unit, ctx.power(x.val));
}

unsigned kummer_carries(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t a = k, b = n - k;
  unsigned carries = 0, carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit_sum = a % p + b % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

FactTable::FactTable(const PrimeCtx& ctx) : ctx_(ctx) {
  const std::size_t limit = 6 * (static_cast<std::size_t>(ctx.p()) - 1);
  val_.resize(limit + 1);
  unit_.resize(limit + 1);
  inv_unit_.resize(limit + 1);
  std::vector<Residue> stripped(limit + 1, 1);

  val_[0] = 0;
  unit_[0] = 1 % ctx.modulus();
  for (std::size_t n = 1; n <= limit; ++n) {
    const PadicScaled f = padic_from_int(n, ctx);
    stripped[n] = f.unit;
    val_[n] = val_[n - 1] + f.val;
    unit_[n] = ctx.mul(unit_[n - 1], f.unit);
  }
  inv_unit_[limit] = ctx.inv(unit_[limit]);
  for (std::size_t n = limit; n > 0; --n) inv_unit_[n - 1] = ctx.mul(inv_unit_[n], stripped[n]);
}

FactTable build_fact_table(const PrimeCtx& ctx) { return FactTable(ctx); }

PadicScaled binom_padic(std::size_t n, std::size_t k, const FactTable& table) {
  if (k > n || n > table.limit()) throw std::out_of_range("binom_padic: need 0 <= k <= n <= 6(p-1)");
  PadicScaled r = table.binom(n, k);
  assert(r.val == kummer_carries(n, k, table.ctx().p()));
  return r;
}

}  // namespace supercong
