#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "supercong/kernels.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

TEST(Sequences, SmallValues) {
  EXPECT_EQ(seq_exact(SeqId::A, 0), 1);
  EXPECT_EQ(seq_exact(SeqId::A, 1), 4);
  EXPECT_EQ(seq_exact(SeqId::A, 2), 28);
  EXPECT_EQ(seq_exact(SeqId::a, 2), 15);
  EXPECT_EQ(seq_exact(SeqId::b, 1), -3);
  EXPECT_EQ(seq_exact(SeqId::b, 2), 9);
  EXPECT_EQ(seq_exact(SeqId::D, 2), 18);
}

TEST(Sequences, ParseNames) {
  EXPECT_EQ(parse_seq_id("A"), SeqId::A);
  EXPECT_EQ(parse_seq_id("a"), SeqId::a);
  EXPECT_FALSE(parse_seq_id("Q").has_value());
  EXPECT_EQ(seq_name(SeqId::D), "D");
}

TEST(Sequences, ExactPrefixMatchesDefinitions) {
  const unsigned N = 120;
  const oracle::PascalExact C(4 * N);
  const auto A = seq_exact_prefix(SeqId::A, N), a = seq_exact_prefix(SeqId::a, N), b = seq_exact_prefix(SeqId::b, N),
             D = seq_exact_prefix(SeqId::D, N);
  for (unsigned n = 0; n < N; ++n) {
    EXPECT_EQ(A[n], oracle::seq_A(n, C)) << n;
    EXPECT_EQ(a[n], oracle::seq_a(n, C)) << n;
    EXPECT_EQ(b[n], oracle::seq_b(n, C)) << n;
    EXPECT_EQ(D[n], oracle::seq_D(n, C)) << n;
  }
  EXPECT_EQ(seq_exact(SeqId::b, 57), b[57]);
}

TEST(Sequences, IndexLimit) {
  EXPECT_THROW(seq_exact(SeqId::A, kExactIndexLimit + 1), std::out_of_range);
  EXPECT_EQ(binom_exact(5, 7), 0);
  EXPECT_EQ(binom_exact(5, -1), 0);
}

TEST(Sequences, ModExample) {
  // A_2 = 28 = 4 * 7.
  const FactTable t(PrimeCtx(7, 1));
  EXPECT_EQ(seq_mod(SeqId::A, 2, t), 0u);
  EXPECT_EQ(seq_mod(SeqId::a, 2, t), 1u);
}

TEST(Sequences, TablesMatchExactValues) {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 29u, 53u, 101u}) {
    const oracle::PascalExact C(4 * p);
    for (unsigned e = 1; e <= 3; ++e) {
      const FactTable t(PrimeCtx(p, e));
      const auto m = oracle::pw(p, e);
      for (SeqId id : {SeqId::A, SeqId::a, SeqId::b, SeqId::D}) {
        const auto table = seq_table(id, t);
        ASSERT_EQ(table.size(), p);
        for (unsigned n = 0; n < p; ++n) {
          mpz_class expected;
          switch (id) {
            case SeqId::A: expected = oracle::seq_A(n, C); break;
            case SeqId::a: expected = oracle::seq_a(n, C); break;
            case SeqId::b: expected = oracle::seq_b(n, C); break;
            case SeqId::D: expected = oracle::seq_D(n, C); break;
          }
          EXPECT_EQ(table[n], oracle::mpz_mod_u64(expected, m)) << seq_name(id) << " n=" << n << " p=" << p;
          if (n % 7 == 0) EXPECT_EQ(seq_mod(id, n, t), table[n]);
        }
      }
    }
  }
}

TEST(Sequences, ParityOfA) {
  const auto A = seq_exact_prefix(SeqId::A, 200);
  for (unsigned n = 1; n < 200; ++n) EXPECT_TRUE(mpz_even_p(A[n].get_mpz_t())) << n;
}

TEST(Identities, SumFormAndDualForms) {
  EXPECT_TRUE(A_sum_form_check(0));
  EXPECT_TRUE(A_sum_form_check(17));
  EXPECT_FALSE(A_sum_form_check_range(120).has_value());
  EXPECT_TRUE(b_dual_sums_check(1));
  EXPECT_TRUE(b_dual_sums_check(30));
  EXPECT_FALSE(b_dual_sums_check_range(120).has_value());
  EXPECT_FALSE(b_forms_check_range(120).has_value());
}

TEST(Identities, Recurrences) {
  EXPECT_TRUE(recurrence_check(SeqId::A, 0));
  EXPECT_TRUE(recurrence_check(SeqId::a, 5));
  EXPECT_FALSE(recurrence_check_range(SeqId::A, 300).has_value());
  EXPECT_FALSE(recurrence_check_range(SeqId::a, 300).has_value());
  EXPECT_THROW(recurrence_check(SeqId::D, 3), std::invalid_argument);
}

TEST(Identities, RecurrenceRejectsPerturbedSequence) {
  // Check the recurrence with an oracle that uses the definitions directly,
  // then confirm that changing one value breaks it.
  const oracle::PascalExact C(80);
  auto holds = [](long m, const mpz_class& x0, const mpz_class& x1, const mpz_class& x2) {
    return (m + 2) * (m + 2) * (m + 2) * x2 == 2 * (2 * m + 3) * (5 * m * m + 15 * m + 12) * x1 - 64 * (m + 1) * (m + 1) * (m + 1) * x0;
  };
  for (long m = 0; m < 30; ++m) {
    EXPECT_TRUE(holds(m, oracle::seq_A(m, C), oracle::seq_A(m + 1, C), oracle::seq_A(m + 2, C)));
    EXPECT_FALSE(holds(m, oracle::seq_A(m, C), oracle::seq_A(m + 1, C), oracle::seq_A(m + 2, C) + 1));
  }
}

TEST(Identities, Certificate) {
  for (unsigned m = 0; m <= 12; ++m) {
    for (unsigned k = 0; k <= m; ++k) {
      EXPECT_TRUE(wz_certificate_check(CertSide::first, m, k)) << m << "," << k;
      EXPECT_TRUE(wz_certificate_check(CertSide::second, m, k)) << m << "," << k;
    }
  }
  EXPECT_THROW(wz_certificate_check(CertSide::first, 2, 3), std::invalid_argument);
}

TEST(Sequences, LegendrePolynomialExample) {
  // P_2(t) = (3t^2 - 1)/2; P_2(3) = 13 = 6 mod 7.
  const FactTable t(PrimeCtx(7, 1));
  EXPECT_EQ(legendre_poly_mod(2, 3, t), 6u);
  EXPECT_EQ(legendre_poly_mod(0, 5, t), 1u);
  EXPECT_EQ(legendre_poly_mod(1, 5, t), 5u);
}

TEST(Sequences, LegendrePolynomialThreeTermRecurrence) {
  // (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}
  for (std::uint32_t p : {11u, 31u, 97u}) {
    const FactTable table(PrimeCtx(p, 1));
    for (Residue t = 0; t < p; t += 3) {
      std::vector<std::uint64_t> P{1, t};
      for (unsigned n = 1; n + 1 < p; ++n) {
        const std::int64_t v = static_cast<std::int64_t>((2 * n + 1) * t % p * P[n] % p) -
                               static_cast<std::int64_t>(n * P[n - 1] % p);
        P.push_back(oracle::mulm(oracle::reduce(v, p), oracle::inv_mod(n + 1, p), p));
      }
      for (unsigned n = 0; n < p; ++n) EXPECT_EQ(legendre_poly_mod(n, t, table), P[n]) << n << " " << t << " " << p;
    }
  }
}

TEST(Kernels, TruncatedSumsMatchPascal) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {5u, 7u, 13u, 23u, 31u}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const FactTable t(PrimeCtx(p, e));
      const auto m = oracle::pw(p, e);
      const oracle::PascalMod C(6 * (p - 1), m);
      for (int trial = 0; trial < 10; ++trial) {
        const Residue x = rng() % m;
        const unsigned bound = p - 1;
        using oracle::mulm;
        EXPECT_EQ(truncated_sum(Kernel::central_cube, bound, x, t),
                  oracle::power_sum(bound, x, m, [&](unsigned k) { return mulm(mulm(C(2 * k, k), C(2 * k, k), m), C(2 * k, k), m); }));
        EXPECT_EQ(truncated_sum(Kernel::central_sq_c3k, bound, x, t),
                  oracle::power_sum(bound, x, m, [&](unsigned k) { return mulm(mulm(C(2 * k, k), C(2 * k, k), m), C(3 * k, k), m); }));
        EXPECT_EQ(truncated_sum(Kernel::central_sq_c4k, bound, x, t),
                  oracle::power_sum(bound, x, m, [&](unsigned k) { return mulm(mulm(C(2 * k, k), C(2 * k, k), m), C(4 * k, 2 * k), m); }));
        EXPECT_EQ(truncated_sum(Kernel::central_c3k_c6k, bound, x, t),
                  oracle::power_sum(bound, x, m, [&](unsigned k) { return mulm(mulm(C(2 * k, k), C(3 * k, k), m), C(6 * k, 3 * k), m); }));
      }
    }
  }
}

TEST(Kernels, ExactValues) {
  EXPECT_EQ(kernel_exact(Kernel::central_cube, 2), 216);
  EXPECT_EQ(kernel_exact(Kernel::central_sq_c3k, 1), 12);
  EXPECT_EQ(kernel_exact(Kernel::central_sq_c4k, 1), 24);
  EXPECT_EQ(kernel_exact(Kernel::central_c3k_c6k, 1), 120);
}
