#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace supercong {

class ZeroConstantTerm : public std::domain_error {
 public:
  ZeroConstantTerm() : std::domain_error("series has zero constant term") {}
};

class NonSquareConstant : public std::domain_error {
 public:
  NonSquareConstant() : std::domain_error("series constant term is not a rational square") {}
};

/// Power series c_0 + c_1 x + ... + c_N x^N over the rationals, truncated at
/// a fixed order N. Every operation truncates to the order of its inputs.
class RatSeries {
 public:
  explicit RatSeries(std::size_t order) : coeffs_(order + 1) {}
  RatSeries(std::size_t order, std::vector<mpq_class> coeffs);

  static RatSeries constant(std::size_t order, const mpq_class& c);
  /// c * x^k
  static RatSeries monomial(std::size_t order, std::size_t k, const mpq_class& c);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }
  mpq_class& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or order() + 1 for zero.
  std::size_t valuation() const;

  RatSeries& operator+=(const RatSeries& o);
  RatSeries& operator-=(const RatSeries& o);
  RatSeries& operator*=(const mpq_class& c);

  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator*(RatSeries a, const mpq_class& c) { return a *= c; }

  bool operator==(const RatSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<mpq_class> coeffs_;
};

RatSeries series_mul(const RatSeries& f, const RatSeries& g);
inline RatSeries operator*(const RatSeries& f, const RatSeries& g) { return series_mul(f, g); }
RatSeries series_inv(const RatSeries& f);
/// f(g(x)); g must have zero constant term.
RatSeries series_compose(const RatSeries& f, const RatSeries& g);
/// Square root with positive constant term, by Newton iteration.
RatSeries series_sqrt(const RatSeries& f);
RatSeries series_pow(const RatSeries& f, unsigned k);

/// sum_k coeff(k) * g^k, truncated; g must have positive valuation so only
/// k <= order contributes.
template <class CoeffFn>
RatSeries series_sum_powers(const RatSeries& g, CoeffFn coeff) {
  if (g.valuation() == 0) throw std::invalid_argument("series_sum_powers: argument needs zero constant term");
  RatSeries out(g.order());
  RatSeries power = RatSeries::constant(g.order(), 1);
  for (std::size_t k = 0; k <= g.order() && power.valuation() <= g.order(); ++k) {
    out += power * mpq_class(coeff(k));
    power = series_mul(power, g);
  }
  return out;
}

/// (1/2)_k / k! == C(2k,k)/4^k and (1/2)_k (1/6)_k (5/6)_k / k!^3 ==
/// C(2k,k) C(3k,k) C(6k,3k) / 12^(3k) for all k <= k_max.
bool pochhammer_check(unsigned k_max);

/// Bailey's transformation, both right-hand forms, to order N.
bool bailey_check(unsigned order);

enum class RogersIdentity { A_generating, a_generating };

/// A_generating: sum A_n u^n = (1-4u)^-1 sum C(2k,k)^2 C(3k,k) (u^2/(1-4u)^3)^k.
/// a_generating: sum C(2k,k) a_k (u/(9(1+u)^2))^k
///               = (1+u)/(1+3u) sum C(2k,k)^2 C(4k,2k) (u/(9(1+3u)^4))^k.
bool rogers_check(RogersIdentity which, unsigned order);

/// Rising factorial (a)_k.
mpq_class pochhammer(const mpq_class& a, unsigned k);

}  // namespace supercong
