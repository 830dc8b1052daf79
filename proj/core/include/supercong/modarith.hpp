#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercong {

using Residue = std::uint64_t;

/// Thrown when a residue has no inverse modulo the working modulus. Callers in
/// the verification layer translate it into a skipped instance.
class NotInvertible : public std::domain_error {
 public:
  NotInvertible(Residue value, Residue modulus);
  Residue value() const noexcept { return value_; }
  Residue modulus() const noexcept { return modulus_; }

 private:
  Residue value_;
  Residue modulus_;
};

inline Residue mul_mod(Residue a, Residue b, Residue m) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

/// Canonical representative of a signed integer in [0, m).
inline Residue reduce(std::int64_t a, Residue m) {
  const auto r = a % static_cast<std::int64_t>(m);
  return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

Residue mod_pow(Residue base, std::uint64_t exp, Residue modulus);

/// Inverse by extended Euclid. Throws NotInvertible when gcd(a, modulus) > 1.
Residue mod_inv(Residue a, Residue modulus);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending. Segmented sieve of Eratosthenes.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

/// Legendre symbol (a/p) by quadratic reciprocity (Jacobi symbol algorithm).
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// Legendre symbol by Euler's criterion a^((p-1)/2) mod p.
int legendre_symbol_euler(std::int64_t a, std::uint64_t p);

/// Tonelli-Shanks. Returns the root in [0, p/2], or nullopt for a non-residue.
std::optional<Residue> sqrt_mod(Residue a, std::uint64_t p);

/// Largest r with r*r <= n.
std::uint64_t isqrt(std::uint64_t n);

struct QuadFormWitness {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t target = 0;

  bool operator==(const QuadFormWitness&) const = default;
};

/// Finds target = a*x^2 + b*y^2 with x, y >= 0, preferring the smallest y.
/// Brute force over y; intended for the small forms used by the statement
/// tables (a*b <= 45) and targets well below 2^40.
std::optional<QuadFormWitness> represent(std::uint64_t target, std::uint64_t a,
                                         std::uint64_t b);

/// Largest prime the engine accepts (exclusive bound): p^3 must stay below
/// 2^60 so that products of residues fit a 128-bit intermediate.
inline constexpr std::uint32_t kPrimeLimit = 1u << 20;

/// A prime p > 3 together with the working modulus p^e, e in {1, 2, 3}.
/// Immutable after construction.
class PrimeCtx {
 public:
  PrimeCtx(std::uint32_t p, unsigned e);

  std::uint32_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  Residue modulus() const noexcept { return modulus_; }
  /// p^k for 0 <= k <= e.
  Residue power(unsigned k) const { return powers_.at(k); }

  Residue from_int(std::int64_t a) const { return reduce(a, modulus_); }
  Residue add(Residue a, Residue b) const {
    const Residue s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + modulus_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const { return mul_mod(a, b, modulus_); }
  Residue pow(Residue a, std::uint64_t k) const { return mod_pow(a, k, modulus_); }
  Residue inv(Residue a) const { return mod_inv(a, modulus_); }

  /// Same prime, different exponent.
  PrimeCtx with_exponent(unsigned e) const { return PrimeCtx(p_, e); }

 private:
  std::uint32_t p_;
  unsigned e_;
  Residue modulus_;
  std::vector<Residue> powers_;
};

/// Residue modulo a PrimeCtx's modulus with ring operators. Used to evaluate
/// the rational argument expressions of the statement tables generically
/// (the same expression is also evaluated over exact rationals).
class ModInt {
 public:
  ModInt(const PrimeCtx& ctx, Residue v) : ctx_(&ctx), v_(v % ctx.modulus()) {}

  Residue value() const noexcept { return v_; }
  const PrimeCtx& ctx() const noexcept { return *ctx_; }

  ModInt operator-() const { return {*ctx_, ctx_->neg(v_)}; }
  friend ModInt operator+(const ModInt& a, const ModInt& b) { return {*a.ctx_, a.ctx_->add(a.v_, b.v_)}; }
  friend ModInt operator-(const ModInt& a, const ModInt& b) { return {*a.ctx_, a.ctx_->sub(a.v_, b.v_)}; }
  friend ModInt operator*(const ModInt& a, const ModInt& b) { return {*a.ctx_, a.ctx_->mul(a.v_, b.v_)}; }
  friend ModInt operator/(const ModInt& a, const ModInt& b) {
    return {*a.ctx_, a.ctx_->mul(a.v_, a.ctx_->inv(b.v_))};
  }

  friend ModInt operator+(const ModInt& a, std::int64_t b) { return a + a.lift(b); }
  friend ModInt operator+(std::int64_t a, const ModInt& b) { return b.lift(a) + b; }
  friend ModInt operator-(const ModInt& a, std::int64_t b) { return a - a.lift(b); }
  friend ModInt operator-(std::int64_t a, const ModInt& b) { return b.lift(a) - b; }
  friend ModInt operator*(const ModInt& a, std::int64_t b) { return a * a.lift(b); }
  friend ModInt operator*(std::int64_t a, const ModInt& b) { return b.lift(a) * b; }
  friend ModInt operator/(const ModInt& a, std::int64_t b) { return a / a.lift(b); }
  friend ModInt operator/(std::int64_t a, const ModInt& b) { return b.lift(a) / b; }

  bool operator==(const ModInt& o) const { return v_ == o.v_; }

 private:
  ModInt lift(std::int64_t a) const { return {*ctx_, ctx_->from_int(a)}; }

  const PrimeCtx* ctx_;
  Residue v_;
};

}  // namespace supercong
