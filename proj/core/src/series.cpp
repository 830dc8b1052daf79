#include "supercong/series.hpp"

#include "supercong/sequences.hpp"

namespace supercong {

RatSeries::RatSeries(std::size_t order, std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

RatSeries RatSeries::constant(std::size_t order, const mpq_class& c) { return monomial(order, 0, c); }

RatSeries RatSeries::monomial(std::size_t order, std::size_t k, const mpq_class& c) {
  RatSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

std::size_t RatSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

RatSeries& RatSeries::operator+=(const RatSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RatSeries& RatSeries::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatSeries series_mul(const RatSeries& f, const RatSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series order mismatch");
  const std::size_t n = f.order();
  RatSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (g[j] != 0) out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

RatSeries series_inv(const RatSeries& f) {
  if (f[0] == 0) throw ZeroConstantTerm();
  const std::size_t n = f.order();
  RatSeries out(n);
  const mpq_class inv0 = 1 / f[0];
  out[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class s;
    for (std::size_t j = 1; j <= k; ++j) s += f[j] * out[k - j];
    out[k] = -s * inv0;
  }
  return out;
}

RatSeries series_compose(const RatSeries& f, const RatSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series order mismatch");
  if (g[0] != 0) throw std::invalid_argument("series_compose: inner series needs zero constant term");
  // Horner: f0 + g (f1 + g (f2 + ...))
  const std::size_t n = f.order();
  RatSeries acc = RatSeries::constant(n, f[n]);
  for (std::size_t i = n; i-- > 0;) {
    acc = series_mul(acc, g);
    acc[0] += f[i];
  }
  return acc;
}

RatSeries series_sqrt(const RatSeries& f) {
  const mpq_class& c0 = f[0];
  if (c0 == 0) throw ZeroConstantTerm();
  if (c0 < 0 || !mpz_perfect_square_p(c0.get_num_mpz_t()) || !mpz_perfect_square_p(c0.get_den_mpz_t())) {
    throw NonSquareConstant();
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), c0.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), c0.get_den_mpz_t());

  const std::size_t n = f.order();
  mpq_class root(num, den);
  root.canonicalize();
  RatSeries y = RatSeries::constant(n, root);
  // Each Newton step y <- (y + f/y)/2 doubles the number of correct terms.
  for (std::size_t correct = 1; correct <= n; correct *= 2) {
    y = (y + series_mul(f, series_inv(y))) * mpq_class(1, 2);
  }
  return y;
}

RatSeries series_pow(const RatSeries& f, unsigned k) {
  RatSeries out = RatSeries::constant(f.order(), 1);
  for (unsigned i = 0; i < k; ++i) out = series_mul(out, f);
  return out;
}

mpq_class pochhammer(const mpq_class& a, unsigned k) {
  mpq_class r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a + i;
  return r;
}

namespace {

mpz_class factorial(unsigned k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

/// C(2k,k) C(3k,k) C(6k,3k) / 12^(3k)
mpq_class bailey_coeff(std::size_t k) {
  const long K = static_cast<long>(k);
  mpq_class c(binom_exact(2 * K, K) * binom_exact(3 * K, K) * binom_exact(6 * K, 3 * K), pow_ui(12, 3 * k));
  c.canonicalize();
  return c;
}

/// a + b x as a series.
RatSeries linear(std::size_t order, long a, long b) {
  RatSeries s(order);
  s[0] = a;
  if (order >= 1) s[1] = b;
  return s;
}

}  // namespace

bool pochhammer_check(unsigned k_max) {
  const mpq_class half(1, 2), sixth(1, 6), five_sixths(5, 6);
  for (unsigned k = 0; k <= k_max; ++k) {
    const mpz_class kf = factorial(k);
    const mpq_class left1 = pochhammer(half, k) / mpq_class(kf);
    mpq_class right1(binom_exact(2 * k, k), pow_ui(4, k));
    right1.canonicalize();
    if (left1 != right1) return false;
    const mpq_class left2 =
        pochhammer(half, k) * pochhammer(sixth, k) * pochhammer(five_sixths, k) / mpq_class(kf * kf * kf);
    if (left2 != bailey_coeff(k)) return false;
  }
  return true;
}

bool bailey_check(unsigned order) {
  if (order < 4) throw std::invalid_argument("bailey_check: order must be at least 4");
  const std::size_t n = order;

  RatSeries lhs(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const mpq_class c = pochhammer(mpq_class(1, 2), k) / mpq_class(factorial(k));
    lhs[k] = c * c * c;
  }

  // 2/sqrt(4-x) * sum c_k (27x^2/(4-x)^3)^k
  const RatSeries four_minus_x = linear(n, 4, -1);
  const RatSeries arg1 = RatSeries::monomial(n, 2, 27) * series_inv(series_pow(four_minus_x, 3));
  const RatSeries rhs1 = series_inv(series_sqrt(four_minus_x)) * mpq_class(2) * series_sum_powers(arg1, bailey_coeff);

  // 1/sqrt(1-4x) * sum c_k (27x/(4x-1)^3)^k
  const RatSeries arg2 = RatSeries::monomial(n, 1, 27) * series_inv(series_pow(linear(n, -1, 4), 3));
  const RatSeries rhs2 = series_inv(series_sqrt(linear(n, 1, -4))) * series_sum_powers(arg2, bailey_coeff);

  return lhs == rhs1 && lhs == rhs2;
}

bool rogers_check(RogersIdentity which, unsigned order) {
  if (order < 4) throw std::invalid_argument("rogers_check: order must be at least 4");
  const std::size_t n = order;

  if (which == RogersIdentity::A_generating) {
    const auto A = seq_exact_prefix(SeqId::A, order + 1);
    const RatSeries lhs(n, std::vector<mpq_class>(A.begin(), A.end()));
    const RatSeries one_minus_4u = linear(n, 1, -4);
    const RatSeries arg = RatSeries::monomial(n, 2, 1) * series_inv(series_pow(one_minus_4u, 3));
    const RatSeries rhs = series_inv(one_minus_4u) * series_sum_powers(arg, [](std::size_t k) {
                            const long K = static_cast<long>(k);
                            const mpz_class c = binom_exact(2 * K, K);
                            return mpq_class(c * c * binom_exact(3 * K, K));
                          });
    return lhs == rhs;
  }

  const auto a = seq_exact_prefix(SeqId::a, order + 1);
  const RatSeries one_plus_u = linear(n, 1, 1);
  const RatSeries one_plus_3u = linear(n, 1, 3);
  const RatSeries lhs_arg =
      RatSeries::monomial(n, 1, 1) * series_inv(series_pow(one_plus_u, 2) * mpq_class(9));
  const RatSeries lhs = series_sum_powers(lhs_arg, [&](std::size_t k) {
    return mpq_class(binom_exact(2 * static_cast<long>(k), static_cast<long>(k)) * a[k]);
  });
  const RatSeries rhs_arg =
      RatSeries::monomial(n, 1, 1) * series_inv(series_pow(one_plus_3u, 4) * mpq_class(9));
  const RatSeries rhs = one_plus_u * series_inv(one_plus_3u) * series_sum_powers(rhs_arg, [](std::size_t k) {
                          const long K = static_cast<long>(k);
                          const mpz_class c = binom_exact(2 * K, K);
                          return mpq_class(c * c * binom_exact(4 * K, 2 * K));
                        });
  return lhs == rhs;
}

}  // namespace supercong
