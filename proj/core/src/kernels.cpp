#include "supercong/kernels.hpp"

#include "supercong/sequences.hpp"

namespace supercong {

std::string_view kernel_name(Kernel kernel) {
  switch (kernel) {
    case Kernel::central_cube: return "C(2k,k)^3";
    case Kernel::central_sq_c3k: return "C(2k,k)^2 C(3k,k)";
    case Kernel::central_sq_c4k: return "C(2k,k)^2 C(4k,2k)";
    case Kernel::central_c3k_c6k: return "C(2k,k) C(3k,k) C(6k,3k)";
  }
  return "?";
}

Residue kernel_residue(Kernel kernel, std::size_t k, const FactTable& table) {
  const PrimeCtx& ctx = table.ctx();
  const PadicScaled c = table.binom(2 * k, k);
  PadicScaled t;
  switch (kernel) {
    case Kernel::central_cube: t = padic_mul(padic_mul(c, c, ctx), c, ctx); break;
    case Kernel::central_sq_c3k: t = padic_mul(padic_mul(c, c, ctx), table.binom(3 * k, k), ctx); break;
    case Kernel::central_sq_c4k: t = padic_mul(padic_mul(c, c, ctx), table.binom(4 * k, 2 * k), ctx); break;
    case Kernel::central_c3k_c6k:
      t = padic_mul(padic_mul(c, table.binom(3 * k, k), ctx), table.binom(6 * k, 3 * k), ctx);
      break;
  }
  return to_residue(t, ctx);
}

mpz_class kernel_exact(Kernel kernel, std::size_t k) {
  const long K = static_cast<long>(k);
  const mpz_class c = binom_exact(2 * K, K);
  switch (kernel) {
    case Kernel::central_cube: return c * c * c;
    case Kernel::central_sq_c3k: return c * c * binom_exact(3 * K, K);
    case Kernel::central_sq_c4k: return c * c * binom_exact(4 * K, 2 * K);
    case Kernel::central_c3k_c6k: return c * binom_exact(3 * K, K) * binom_exact(6 * K, 3 * K);
  }
  return 0;
}

Residue truncated_sum(Kernel kernel, std::size_t bound, Residue x, const FactTable& table) {
  const PrimeCtx& ctx = table.ctx();
  Residue s = 0;
  Residue xk = 1 % ctx.modulus();
  for (std::size_t k = 0; k <= bound; ++k) {
    s = ctx.add(s, ctx.mul(kernel_residue(kernel, k, table), xk));
    xk = ctx.mul(xk, x);
  }
  return s;
}

}  // namespace supercong
