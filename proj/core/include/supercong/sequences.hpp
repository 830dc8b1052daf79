#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "supercong/modarith.hpp"
#include "supercong/padic.hpp"

namespace supercong {

// A_n = sum_k C(2k,k) C(2n-2k,n-k) C(n,k)^2
// a_n = sum_k C(n,k)^2 C(2k,k)
// b_n = sum_k C(2k,k)^2 C(4k,2k) C(n+3k,4k) (-27)^(n-k)
//     = sum_k C(2k,k) C(3k,k) C(n,3k) C(n+k,k) (-3)^(n-3k)
// D_n = sum_k C(n,k)^4
enum class SeqId { A, a, b, D };

std::optional<SeqId> parse_seq_id(std::string_view name);
std::string_view seq_name(SeqId id);

/// Guard against accidental huge exact runs.
inline constexpr unsigned kExactIndexLimit = 10000;

/// Exact C(n, k); zero outside 0 <= k <= n.
mpz_class binom_exact(long n, long k);

mpz_class seq_exact(SeqId id, unsigned n);
/// Exact values for n = 0 .. count-1, computed incrementally.
std::vector<mpz_class> seq_exact_prefix(SeqId id, unsigned count);

mpz_class b_closed_form_27(unsigned n);
mpz_class b_closed_form_3(unsigned n);

/// seq_exact(id, n) mod p^e from p-adic binomials; requires n <= p - 1.
Residue seq_mod(SeqId id, unsigned n, const FactTable& table);

/// Values for n = 0 .. p-1 modulo p^e. A, a and b use their three-term
/// recurrences (every leading coefficient (n+2)^k with n + 2 < p is a unit);
/// D is summed directly.
std::vector<Residue> seq_table(SeqId id, const FactTable& table);

/// sum_{k<=n/2} C(2k,k)^2 C(3k,k) C(n+k,3k) 4^(n-2k) == A_n.
bool A_sum_form_check(unsigned n);

enum class CertSide { first = 1, second = 2 };

class DegenerateDenominator : public std::logic_error {
 public:
  DegenerateDenominator() : std::logic_error("certificate denominator vanishes") {}
};

/// F_i and G_i of the telescoping certificate for A_n.
mpq_class cert_F(CertSide side, long m, long k);
mpq_class cert_G(CertSide side, long m, long k);

/// (m+2)^3 F(m+2,k) - 2(2m+3)(5m^2+15m+12) F(m+1,k) + 64(m+1)^3 F(m,k)
///   == G(m,k+1) - G(m,k), exactly, for 0 <= k <= m.
bool wz_certificate_check(CertSide side, unsigned m, unsigned k);

/// Three-term recurrence at index n, for A or a (other ids throw).
bool recurrence_check(SeqId id, unsigned n);
/// Same, for every n <= max_n; returns the first failing index.
std::optional<unsigned> recurrence_check_range(SeqId id, unsigned max_n);

/// sum_k C(2k,k) C(n+k,2k) (-9)^(n-k) a_k == b_n, plus the shared
/// third-order recurrence of both sides at n when n >= 2.
bool b_dual_sums_check(unsigned n);
std::optional<unsigned> b_dual_sums_check_range(unsigned max_n);
std::optional<unsigned> A_sum_form_check_range(unsigned max_n);
/// First n <= max_n where the two closed forms of b_n differ.
std::optional<unsigned> b_forms_check_range(unsigned max_n);

/// Legendre polynomial P_n(t) mod p through the explicit sum
/// 2^-n sum_k C(n,k) (-1)^k C(2n-2k,n) t^(n-2k). Needs e = 1 and n <= p-1.
Residue legendre_poly_mod(unsigned n, Residue t, const FactTable& table);

}  // namespace supercong
