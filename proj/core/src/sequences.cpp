#include "supercong/sequences.hpp"

#include <cassert>
#include <string>

namespace supercong {

std::optional<SeqId> parse_seq_id(std::string_view name) {
  if (name == "A") return SeqId::A;
  if (name == "a") return SeqId::a;
  if (name == "b") return SeqId::b;
  if (name == "D") return SeqId::D;
  return std::nullopt;
}

std::string_view seq_name(SeqId id) {
  switch (id) {
    case SeqId::A: return "A";
    case SeqId::a: return "a";
    case SeqId::b: return "b";
    case SeqId::D: return "D";
  }
  return "?";
}

mpz_class binom_exact(long n, long k) {
  mpz_class r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

void check_index(unsigned n) {
  if (n > kExactIndexLimit) {
    throw std::out_of_range("exact sequence index " + std::to_string(n) + " exceeds " +
                            std::to_string(kExactIndexLimit));
  }
}

mpz_class signed_pow(long base, unsigned long exp) {
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

mpq_class pow4(long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 4, static_cast<unsigned long>(exp < 0 ? -exp : exp));
  return exp < 0 ? mpq_class(mpz_class(1), r) : mpq_class(r);
}

/// C(2k,k) for k < count.
std::vector<mpz_class> central_binomials(unsigned count) {
  std::vector<mpz_class> c(count);
  if (count == 0) return c;
  c[0] = 1;
  for (unsigned k = 1; k < count; ++k) {
    c[k] = c[k - 1] * (2 * (2 * k - 1));
    mpz_divexact_ui(c[k].get_mpz_t(), c[k].get_mpz_t(), k);
  }
  return c;
}

mpz_class a_direct(unsigned n) {
  mpz_class s;
  for (unsigned k = 0; k <= n; ++k) {
    const mpz_class c = binom_exact(n, k);
    s += c * c * binom_exact(2 * k, k);
  }
  return s;
}

bool recurrence_holds(SeqId id, long n, const mpz_class& s0, const mpz_class& s1, const mpz_class& s2) {
  if (id == SeqId::A) {
    const mpz_class lhs = mpz_class((n + 2) * (n + 2) * (n + 2)) * s2 -
                          mpz_class(2 * (2 * n + 3) * (5 * n * n + 15 * n + 12)) * s1 +
                          mpz_class(64 * (n + 1) * (n + 1) * (n + 1)) * s0;
    return lhs == 0;
  }
  if (id == SeqId::a) {
    const mpz_class lhs = mpz_class((n + 2) * (n + 2)) * s2 - mpz_class(10 * n * n + 30 * n + 23) * s1 +
                          mpz_class(9 * (n + 1) * (n + 1)) * s0;
    return lhs == 0;
  }
  throw std::invalid_argument("recurrence_check: only A and a have a checked recurrence");
}

// (m+2)^3 S(m+2) + (2m+3)(7m^2+21m+17) S(m+1) + 81(m+1)^3 S(m) = 0
bool b_recurrence_holds(long m, const mpz_class& s0, const mpz_class& s1, const mpz_class& s2) {
  const mpz_class lhs = mpz_class((m + 2) * (m + 2) * (m + 2)) * s2 +
                        mpz_class((2 * m + 3) * (7 * m * m + 21 * m + 17)) * s1 +
                        mpz_class(81 * (m + 1) * (m + 1) * (m + 1)) * s0;
  return lhs == 0;
}

mpz_class A_sum_form(unsigned n) {
  mpz_class s;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const mpz_class c = binom_exact(2 * k, k);
    mpz_class four;
    mpz_ui_pow_ui(four.get_mpz_t(), 4, n - 2 * k);
    s += c * c * binom_exact(3 * k, k) * binom_exact(n + k, 3 * k) * four;
  }
  return s;
}

mpz_class b_sum_over_a(unsigned n, const std::vector<mpz_class>& a) {
  mpz_class s;
  for (unsigned k = 0; k <= n; ++k) {
    s += binom_exact(2 * k, k) * binom_exact(n + k, 2 * k) * signed_pow(-9, n - k) * a[k];
  }
  return s;
}

}  // namespace

mpz_class b_closed_form_27(unsigned n) {
  mpz_class s;
  for (unsigned k = 0; k <= n; ++k) {
    const mpz_class c = binom_exact(2 * k, k);
    s += c * c * binom_exact(4 * k, 2 * k) * binom_exact(n + 3 * k, 4 * k) * signed_pow(-27, n - k);
  }
  return s;
}

mpz_class b_closed_form_3(unsigned n) {
  mpz_class s;
  for (unsigned k = 0; 3 * k <= n; ++k) {
    s += binom_exact(2 * k, k) * binom_exact(3 * k, k) * binom_exact(n, 3 * k) * binom_exact(n + k, k) *
         signed_pow(-3, n - 3 * k);
  }
  return s;
}

mpz_class seq_exact(SeqId id, unsigned n) {
  check_index(n);
  mpz_class s;
  switch (id) {
    case SeqId::A:
      for (unsigned k = 0; k <= n; ++k) {
        const mpz_class c = binom_exact(n, k);
        s += binom_exact(2 * k, k) * binom_exact(2 * (n - k), n - k) * c * c;
      }
      return s;
    case SeqId::a:
      return a_direct(n);
    case SeqId::b:
      s = b_closed_form_27(n);
      assert(s == b_closed_form_3(n));
      return s;
    case SeqId::D:
      for (unsigned k = 0; k <= n; ++k) {
        const mpz_class c = binom_exact(n, k);
        s += c * c * c * c;
      }
      return s;
  }
  return s;
}

std::vector<mpz_class> seq_exact_prefix(SeqId id, unsigned count) {
  if (count > 0) check_index(count - 1);
  std::vector<mpz_class> out;
  out.reserve(count);
  const auto central = central_binomials(id == SeqId::b ? 2 * count + 1 : count + 1);

  if (id == SeqId::b) {
    // col[k] = C(n+3k, 4k) for the current n, updated as n grows.
    std::vector<mpz_class> col;
    std::vector<mpz_class> neg27(count + 1);
    if (count > 0) neg27[0] = 1;
    for (unsigned j = 1; j < count; ++j) neg27[j] = neg27[j - 1] * -27;
    for (unsigned n = 0; n < count; ++n) {
      for (unsigned k = 0; k < n; ++k) {
        col[k] *= n + 3 * k;
        mpz_divexact_ui(col[k].get_mpz_t(), col[k].get_mpz_t(), n - k);
      }
      col.emplace_back(1);
      mpz_class s;
      for (unsigned k = 0; k <= n; ++k) s += central[k] * central[k] * central[2 * k] * col[k] * neg27[n - k];
      out.push_back(std::move(s));
    }
    return out;
  }

  std::vector<mpz_class> row;  // C(n, k)
  for (unsigned n = 0; n < count; ++n) {
    row.emplace_back(1);
    for (unsigned k = n - 1; k >= 1 && k < n; --k) row[k] += row[k - 1];
    mpz_class s;
    for (unsigned k = 0; k <= n; ++k) {
      const mpz_class sq = row[k] * row[k];
      switch (id) {
        case SeqId::A: s += central[k] * central[n - k] * sq; break;
        case SeqId::a: s += central[k] * sq; break;
        case SeqId::D: s += sq * sq; break;
        case SeqId::b: break;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

Residue seq_mod(SeqId id, unsigned n, const FactTable& table) {
  const PrimeCtx& ctx = table.ctx();
  if (n > ctx.p() - 1) throw std::out_of_range("seq_mod: index must be at most p - 1");
  Residue s = 0;
  auto add = [&](std::initializer_list<PadicScaled> factors, Residue scale) {
    PadicScaled t = PadicScaled::one();
    for (const auto& f : factors) t = padic_mul(t, f, ctx);
    s = ctx.add(s, ctx.mul(to_residue(t, ctx), scale));
  };
  switch (id) {
    case SeqId::A:
      for (unsigned k = 0; k <= n; ++k) {
        const auto c = table.binom(n, k);
        add({table.binom(2 * k, k), table.binom(2 * (n - k), n - k), c, c}, 1);
      }
      break;
    case SeqId::a:
      for (unsigned k = 0; k <= n; ++k) {
        const auto c = table.binom(n, k);
        add({c, c, table.binom(2 * k, k)}, 1);
      }
      break;
    case SeqId::b: {
      const Residue m27 = ctx.from_int(-27);
      for (unsigned k = 0; k <= n; ++k) {
        const auto c = table.binom(2 * k, k);
        add({c, c, table.binom(4 * k, 2 * k), table.binom(n + 3 * k, 4 * k)}, ctx.pow(m27, n - k));
      }
      break;
    }
    case SeqId::D:
      for (unsigned k = 0; k <= n; ++k) {
        const auto c = table.binom(n, k);
        add({c, c, c, c}, 1);
      }
      break;
  }
  return s;
}

std::vector<Residue> seq_table(SeqId id, const FactTable& table) {
  const PrimeCtx& ctx = table.ctx();
  const unsigned count = ctx.p();
  std::vector<Residue> v(count);
  if (id == SeqId::D) {
    for (unsigned n = 0; n < count; ++n) v[n] = seq_mod(id, n, table);
    return v;
  }
  auto r = [&](std::int64_t x) { return ctx.from_int(x); };
  auto prod = [&](std::initializer_list<Residue> xs) {
    Residue acc = 1 % ctx.modulus();
    for (auto x : xs) acc = ctx.mul(acc, x);
    return acc;
  };
  v[0] = r(1);
  v[1] = r(id == SeqId::A ? 4 : (id == SeqId::a ? 3 : -3));
  for (std::int64_t m = 0; m + 2 < count; ++m) {
    const Residue m1 = r(m + 1), m2 = r(m + 2);
    Residue next = 0;
    switch (id) {
      case SeqId::A: {
        // (m+2)^3 A(m+2) = 2(2m+3)(5m^2+15m+12) A(m+1) - 64(m+1)^3 A(m)
        const Residue c1 = prod({r(2), r(2 * m + 3), r(5 * m * m + 15 * m + 12)});
        const Residue c0 = prod({r(64), m1, m1, m1});
        next = ctx.mul(ctx.sub(ctx.mul(c1, v[m + 1]), ctx.mul(c0, v[m])), ctx.inv(prod({m2, m2, m2})));
        break;
      }
      case SeqId::a: {
        // (m+2)^2 a(m+2) = (10m^2+30m+23) a(m+1) - 9(m+1)^2 a(m)
        const Residue c1 = r(10 * m * m + 30 * m + 23);
        const Residue c0 = prod({r(9), m1, m1});
        next = ctx.mul(ctx.sub(ctx.mul(c1, v[m + 1]), ctx.mul(c0, v[m])), ctx.inv(prod({m2, m2})));
        break;
      }
      case SeqId::b: {
        // (m+2)^3 b(m+2) = -(2m+3)(7m^2+21m+17) b(m+1) - 81(m+1)^3 b(m)
        const Residue c1 = prod({r(2 * m + 3), r(7 * m * m + 21 * m + 17)});
        const Residue c0 = prod({r(81), m1, m1, m1});
        next = ctx.mul(ctx.neg(ctx.add(ctx.mul(c1, v[m + 1]), ctx.mul(c0, v[m]))), ctx.inv(prod({m2, m2, m2})));
        break;
      }
      case SeqId::D: break;
    }
    v[m + 2] = next;
  }
  return v;
}

bool A_sum_form_check(unsigned n) { return A_sum_form(n) == seq_exact(SeqId::A, n); }

std::optional<unsigned> A_sum_form_check_range(unsigned max_n) {
  const auto A = seq_exact_prefix(SeqId::A, max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    if (A_sum_form(n) != A[n]) return n;
  }
  return std::nullopt;
}

mpq_class cert_F(CertSide side, long m, long k) {
  if (side == CertSide::first) {
    const mpz_class c = binom_exact(2 * k, k);
    return mpq_class(c * c * binom_exact(3 * k, k) * binom_exact(m + k, 3 * k)) * pow4(m - 2 * k);
  }
  const mpz_class c = binom_exact(m, k);
  return mpq_class(binom_exact(2 * k, k) * binom_exact(2 * m - 2 * k, m - k) * c * c);
}

mpq_class cert_G(CertSide side, long m, long k) {
  if (side == CertSide::first) {
    const long den = (m + 1 + k) * (m + 2 + k);
    if (den == 0) throw DegenerateDenominator();
    const mpz_class c = binom_exact(2 * k, k);
    mpq_class coeff(mpz_class(-192 * (3 * m + 4)) * k * k * k * k, mpz_class(den));
    coeff.canonicalize();
    return coeff * mpq_class(c * c * binom_exact(3 * k, k) * binom_exact(m + k + 2, 3 * k)) * pow4(m - 2 * k);
  }
  const long d = m + 2 - k;
  if (d == 0) throw DegenerateDenominator();
  const long poly = -12 * m * m * m - 62 * m * m - 104 * m - 56 + 26 * k * m * m + 89 * k * m + 74 * k -
                    18 * k * k * m - 30 * k * k + 4 * k * k * k;
  mpq_class coeff(mpz_class(2 * k * k * k) * poly, mpz_class(d * d * d));
  coeff.canonicalize();
  const mpz_class c = binom_exact(m + 1, k);
  return coeff * mpq_class(binom_exact(2 * k, k) * binom_exact(2 * (m + 1 - k), m + 1 - k) * c * c);
}

bool wz_certificate_check(CertSide side, unsigned m, unsigned k) {
  if (k > m) throw std::invalid_argument("wz_certificate_check: need 0 <= k <= m");
  const long M = m, K = k;
  const mpq_class lhs = mpq_class((M + 2) * (M + 2) * (M + 2)) * cert_F(side, M + 2, K) -
                        mpq_class(2 * (2 * M + 3) * (5 * M * M + 15 * M + 12)) * cert_F(side, M + 1, K) +
                        mpq_class(64 * (M + 1) * (M + 1) * (M + 1)) * cert_F(side, M, K);
  const mpq_class rhs = cert_G(side, M, K + 1) - cert_G(side, M, K);
  return lhs == rhs;
}

bool recurrence_check(SeqId id, unsigned n) {
  if (id != SeqId::A && id != SeqId::a) throw std::invalid_argument("recurrence_check: id must be A or a");
  return recurrence_holds(id, n, seq_exact(id, n), seq_exact(id, n + 1), seq_exact(id, n + 2));
}

std::optional<unsigned> recurrence_check_range(SeqId id, unsigned max_n) {
  if (id != SeqId::A && id != SeqId::a) throw std::invalid_argument("recurrence_check: id must be A or a");
  const auto v = seq_exact_prefix(id, max_n + 3);
  for (unsigned n = 0; n <= max_n; ++n) {
    if (!recurrence_holds(id, n, v[n], v[n + 1], v[n + 2])) return n;
  }
  return std::nullopt;
}

bool b_dual_sums_check(unsigned n) {
  const auto a = seq_exact_prefix(SeqId::a, n + 1);
  if (b_sum_over_a(n, a) != b_closed_form_27(n)) return false;
  if (n < 2) return true;
  const long m = static_cast<long>(n) - 2;
  return b_recurrence_holds(m, b_sum_over_a(n - 2, a), b_sum_over_a(n - 1, a), b_sum_over_a(n, a)) &&
         b_recurrence_holds(m, b_closed_form_27(n - 2), b_closed_form_27(n - 1), b_closed_form_27(n));
}

std::optional<unsigned> b_dual_sums_check_range(unsigned max_n) {
  const auto a = seq_exact_prefix(SeqId::a, max_n + 1);
  const auto b = seq_exact_prefix(SeqId::b, max_n + 1);
  std::vector<mpz_class> s1;
  for (unsigned n = 0; n <= max_n; ++n) {
    s1.push_back(b_sum_over_a(n, a));
    if (s1[n] != b[n] || b[n] != b_closed_form_27(n)) return n;
    if (n >= 2) {
      const long m = static_cast<long>(n) - 2;
      if (!b_recurrence_holds(m, s1[n - 2], s1[n - 1], s1[n]) ||
          !b_recurrence_holds(m, b[n - 2], b[n - 1], b[n])) {
        return n;
      }
    }
  }
  return std::nullopt;
}

std::optional<unsigned> b_forms_check_range(unsigned max_n) {
  for (unsigned n = 0; n <= max_n; ++n) {
    if (b_closed_form_27(n) != b_closed_form_3(n)) return n;
  }
  return std::nullopt;
}

Residue legendre_poly_mod(unsigned n, Residue t, const FactTable& table) {
  const PrimeCtx& ctx = table.ctx();
  if (ctx.e() != 1) throw std::invalid_argument("legendre_poly_mod: context must have e = 1");
  if (n > ctx.p() - 1) throw std::out_of_range("legendre_poly_mod: need n <= p - 1");
  t %= ctx.modulus();
  Residue s = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Residue term = ctx.mul(table.binom_residue(n, k), table.binom_residue(2 * n - 2 * k, n));
    term = ctx.mul(term, ctx.pow(t, n - 2 * k));
    s = (k % 2 == 0) ? ctx.add(s, term) : ctx.sub(s, term);
  }
  return ctx.mul(s, ctx.pow(ctx.inv(2), n));
}

}  // namespace supercong
