#include <gtest/gtest.h>

#include "oracle.hpp"
#include "supercong/verify.hpp"

using namespace supercong;
using oracle::mulm;

namespace {

const StatementSpec& spec(std::string_view id) {
  const StatementSpec* s = find_statement(id);
  if (!s) throw std::runtime_error("missing statement");
  return *s;
}

}  // namespace

TEST(Registry, ContainsEveryStatement) {
  const std::vector<std::string> expected = {
      "T2.1",    "T2.2",     "T2.3",    "T3.1",     "T3.2",    "T3.3",    "T3.4",   "T4.1i",  "T4.1ii",
      "COR4.1",  "COR4.2",   "COR4.3",  "CJ2.1i",   "CJ2.1ii", "CJ2.1iii", "CJ2.1iv", "CJ3.1", "CJ3.2",
      "CJ3.3",   "CJ3.4i",   "CJ3.4ii", "CJ3.4iii", "R3.2",    "R3.3",    "R3.4",   "R3.5",   "CJ4.1",
      "CJ4.2",   "R4.2",     "CJ4.3",   "CJ4.4",    "CJ4.5",   "CJ4.6",   "CJ4.7"};
  EXPECT_EQ(statement_ids(), expected);
  EXPECT_EQ(select_statements("all-theorems").size(), 12u);
  EXPECT_EQ(select_statements("all-conjectures").size(), expected.size() - 12);
  EXPECT_TRUE(select_statements("NOPE").empty());
  for (const auto& s : statement_registry()) {
    EXPECT_FALSE(s.congruences.empty()) << s.id;
    EXPECT_EQ(s.kind == StatementKind::theorem, s.power() == 1) << s.id;
    for (const auto& c : s.congruences) EXPECT_TRUE(c.sides.size() >= 2 || c.cases) << s.id;
  }
}

TEST(Verify, QuadFormCaseExample) {
  const auto o = check_statement(spec("T3.2"), 19, std::nullopt);
  EXPECT_EQ(o.status, Status::pass);
  EXPECT_EQ(o.lhs, Residue{16});
  EXPECT_EQ(o.rhs, Residue{16});
  ASSERT_TRUE(o.witness.has_value());
  EXPECT_EQ(o.witness->x, 2u);
  EXPECT_EQ(o.witness->y, 1u);

  // Oracle: sum of A_n for n < 19 reduced mod 19.
  const oracle::PascalExact C(40);
  mpz_class s;
  for (unsigned n = 0; n < 19; ++n) s += oracle::seq_A(n, C);
  EXPECT_EQ(oracle::mpz_mod_u64(s, 19), 16u);
}

TEST(Verify, HypothesisGate) {
  const auto o = check_statement(spec("T3.2"), 7, std::nullopt);
  EXPECT_EQ(o.status, Status::skipped);
  EXPECT_NE(o.reason.find("mod 5"), std::string::npos) << o.reason;
  EXPECT_EQ(check_statement(spec("COR4.2"), 7, std::nullopt).status, Status::skipped);
  EXPECT_EQ(check_statement(spec("R4.2"), 7, std::nullopt).status, Status::skipped);
  EXPECT_EQ(check_statement(spec("R4.2"), 11, std::nullopt).status, Status::pass);
}

TEST(Verify, TransformTheoremExample) {
  const std::uint32_t p = 7;
  const std::int64_t m = 3;
  const auto o = check_statement(spec("T2.1"), p, m);
  ASSERT_EQ(o.status, Status::pass) << o.reason;

  const oracle::PascalMod C(36, p);
  auto inv = [&](std::int64_t v) { return oracle::inv_mod(oracle::reduce(v, p), p); };
  const auto s1 = oracle::power_sum(3, inv(m), p, [&](unsigned k) { return mulm(mulm(C(2 * k, k), C(2 * k, k), p), C(2 * k, k), p); });
  auto c6 = [&](unsigned k) { return mulm(mulm(C(2 * k, k), C(3 * k, k), p), C(6 * k, 3 * k), p); };
  const auto x2 = mulm(oracle::reduce(m, p), inv((m - 16) * (m - 16) * (m - 16)), p);
  const auto s2 = oracle::reduce(oracle::legendre(m * (m - 16), p) * static_cast<std::int64_t>(oracle::power_sum(1, x2, p, c6)), p);
  const auto x3 = mulm(oracle::reduce(m * m, p), inv((256 - m) * (256 - m) * (256 - m)), p);
  const auto s3 = oracle::reduce(oracle::legendre(m * (m - 256), p) * static_cast<std::int64_t>(oracle::power_sum(1, x3, p, c6)), p);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1, s3);
  EXPECT_EQ(o.lhs, s1);
  EXPECT_EQ(o.rhs, s2);
}

TEST(Verify, ZeroCaseExample) {
  const auto o = check_statement(spec("T3.4"), 5, std::nullopt);
  EXPECT_EQ(o.status, Status::pass);
  EXPECT_EQ(o.rhs, Residue{0});
  EXPECT_FALSE(o.witness.has_value());

  const oracle::PascalExact C(10);
  std::uint64_t s = 0;
  const auto inv8 = oracle::inv_mod(8, 5);
  for (unsigned n = 0; n < 5; ++n) s += mulm(oracle::mpz_mod_u64(oracle::seq_A(n, C), 5), oracle::pow_mod(inv8, n, 5), 5);
  EXPECT_EQ(s % 5, 0u);
}

TEST(Verify, QuadFormExpectedExamples) {
  const auto& t32 = *spec("T3.2").congruences[0].cases;
  EXPECT_EQ(quadform_expected(t32, 19, 1).value, 16u);
  const auto& t34 = *spec("T3.4").congruences[0].cases;
  EXPECT_EQ(quadform_expected(t34, 5, 1).value, 0u);

  const auto& c43 = *spec("CJ4.3").congruences[0].cases;
  const auto e = quadform_expected(c43, 17, 2);
  EXPECT_EQ(e.value, 273u);
  EXPECT_EQ(e.witness, (QuadFormWitness{1, 9, 5, 1, 34}));
  EXPECT_THROW(quadform_expected(t32, 7, 1), SkippedHypothesis);
}

TEST(Verify, ParameterExclusion) {
  // m = 16 makes m(m-16)(m-256) vanish.
  const auto o = check_statement(spec("T2.1"), 11, 16 % 11);
  EXPECT_EQ(o.status, Status::skipped);
  EXPECT_NE(o.reason.find("parameter excluded"), std::string::npos);
  EXPECT_EQ(check_statement(spec("T3.1"), 11, 3).status, Status::skipped);  // 4*3 - 1 = 11
}

TEST(Verify, FastAndExactRoutesAgree) {
  std::mt19937_64 rng(17);
  for (const auto& s : statement_registry()) {
    for (std::uint32_t p : {5u, 11u, 13u, 19u, 23u, 37u, 41u}) {
      const std::int64_t m = static_cast<std::int64_t>(rng() % p);
      EXPECT_EQ(check_statement(s, p, m), check_statement_exact(s, p, m)) << s.id << " p=" << p << " param=" << m;
    }
  }
}

TEST(Verify, WorkspaceExponentTooSmall) {
  PrimeWorkspace ws(11, 1);
  EXPECT_THROW(check_statement(spec("CJ3.3"), ws, std::nullopt), std::invalid_argument);
}

TEST(Verify, DetectsFalseStatements) {
  // Two different sums that do not agree mod p in general.
  StatementSpec bad{"BAD", StatementKind::conjecture, "deliberately false"};
  const ParamExpr one("1", []<class R>(const R& x) -> R { return R(x * 0 + 1); });
  bad.congruences.push_back(Congruence{{SumTerm{Summand::central_cube, Truncation::half, one},
                                        SumTerm{Summand::central_sq_c3k, Truncation::half, one}},
                                       1, {}, {}});
  int failures = 0;
  for (std::uint32_t p : primes_in_range(5, 200)) {
    const auto o = check_statement(bad, p, std::nullopt);
    if (o.status == Status::fail) {
      ++failures;
      EXPECT_TRUE(o.lhs && o.rhs);
      EXPECT_NE(*o.lhs, *o.rhs);
    }
    EXPECT_EQ(o, check_statement_exact(bad, p, std::nullopt));
  }
  EXPECT_GT(failures, 30);

  // Right sum, wrong case value: T3.4's table with 8x^2 in place of 4x^2.
  StatementSpec wrong = spec("T3.4");
  wrong.congruences[0].cases->rows[0].value = CaseValue::eight_x2_minus_2p;
  EXPECT_EQ(check_statement(wrong, 11, std::nullopt).status, Status::fail);
}
