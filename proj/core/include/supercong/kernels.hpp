#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string_view>

#include "supercong/padic.hpp"

namespace supercong {

/// Binomial products summed by the truncated hypergeometric sums.
enum class Kernel {
  central_cube,     // C(2k,k)^3
  central_sq_c3k,   // C(2k,k)^2 C(3k,k)
  central_sq_c4k,   // C(2k,k)^2 C(4k,2k)
  central_c3k_c6k,  // C(2k,k) C(3k,k) C(6k,3k)
};

std::string_view kernel_name(Kernel kernel);

/// Kernel value at k modulo p^e, from the p-adic factorial table.
Residue kernel_residue(Kernel kernel, std::size_t k, const FactTable& table);

/// Exact kernel value.
mpz_class kernel_exact(Kernel kernel, std::size_t k);

/// sum_{k=0}^{bound} kernel(k) x^k modulo p^e. Each term is a product of
/// table entries; no term-ratio recurrence.
Residue truncated_sum(Kernel kernel, std::size_t bound, Residue x, const FactTable& table);

}  // namespace supercong
