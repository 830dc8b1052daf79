#include "supercong/modarith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace supercong {

NotInvertible::NotInvertible(Residue value, Residue modulus)
    : std::domain_error("residue " + std::to_string(value) + " is not invertible modulo " +
                        std::to_string(modulus)),
      value_(value),
      modulus_(modulus) {}

Residue mod_pow(Residue base, std::uint64_t exp, Residue modulus) {
  Residue result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

Residue mod_inv(Residue a, Residue modulus) {
  // Extended Euclid on signed 128-bit values; moduli are < 2^63.
  __int128 r0 = static_cast<__int128>(modulus), r1 = static_cast<__int128>(a % modulus);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(s0, s1);
    s1 -= q * s0;
  }
  if (r0 != 1) {
    if (modulus == 1) return 0;
    throw NotInvertible(a % modulus, modulus);
  }
  if (s0 < 0) s0 += modulus;
  return static_cast<Residue>(s0);
}

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, unsigned s, std::uint64_t a) {
  Residue x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  return std::all_of(kBases.begin(), kBases.end(),
                     [&](std::uint64_t a) { return miller_rabin_round(n, d, s, a); });
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint32_t>(lo, 2);

  const auto root = static_cast<std::uint32_t>(isqrt(hi));
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint32_t> base;
  for (std::uint32_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= root; j += i) small[j] = false;
  }

  constexpr std::uint32_t kSegment = 1u << 15;
  std::vector<char> seg(kSegment);
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t stop = std::min<std::uint64_t>(start + kSegment - 1, hi);
    std::fill(seg.begin(), seg.end(), 1);
    for (auto q : base) {
      std::uint64_t first = std::max<std::uint64_t>(std::uint64_t{q} * q, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j <= stop; j += q) seg[j - start] = 0;
    }
    for (std::uint64_t n = start; n <= stop; ++n) {
      if (seg[n - start]) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return out;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  std::uint64_t x = reduce(a, p);
  std::uint64_t n = p;
  int sign = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const auto r = n & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, n);
    if ((x & 3) == 3 && (n & 3) == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

int legendre_symbol_euler(std::int64_t a, std::uint64_t p) {
  const Residue r = mod_pow(reduce(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::optional<Residue> sqrt_mod(Residue a, std::uint64_t p) {
  a %= p;
  if (a == 0) return Residue{0};
  if (legendre_symbol(static_cast<std::int64_t>(a), p) != 1) return std::nullopt;

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Residue z = 2;
  while (legendre_symbol(static_cast<std::int64_t>(z), p) != -1) ++z;

  Residue m = s;
  Residue c = mod_pow(z, q, p);
  Residue t = mod_pow(a, q, p);
  Residue r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    Residue i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    Residue b = c;
    for (Residue j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

std::optional<QuadFormWitness> represent(std::uint64_t target, std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("represent: form coefficients must be positive");
  for (std::uint64_t y = 0; b * y * y <= target; ++y) {
    const std::uint64_t rest = target - b * y * y;
    if (rest % a != 0) continue;
    const std::uint64_t x = isqrt(rest / a);
    if (x * x == rest / a) {
      QuadFormWitness w{a, b, x, y, target};
      if (a * x * x + b * y * y != target) throw std::logic_error("represent: witness check failed");
      return w;
    }
  }
  return std::nullopt;
}

PrimeCtx::PrimeCtx(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  if (p <= 3 || p >= kPrimeLimit || !is_prime(p)) {
    throw std::invalid_argument("PrimeCtx: expected a prime 3 < p < 2^20, got " + std::to_string(p));
  }
  if (e < 1 || e > 3) throw std::invalid_argument("PrimeCtx: exponent must be 1, 2 or 3");
  powers_.push_back(1);
  for (unsigned k = 1; k <= e; ++k) powers_.push_back(powers_.back() * p);
  modulus_ = powers_.back();
}

}  // namespace supercong
