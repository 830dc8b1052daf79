#include <gtest/gtest.h>

#include "oracle.hpp"
#include "supercong/sweep.hpp"

using namespace supercong;

namespace {

const StatementSpec& spec(std::string_view id) { return *find_statement(id); }

StatementSpec false_statement() {
  StatementSpec bad{"BAD", StatementKind::conjecture, "deliberately false"};
  const ParamExpr one("1", []<class R>(const R& x) -> R { return R(x * 0 + 1); });
  bad.congruences.push_back(Congruence{{SumTerm{Summand::central_cube, Truncation::half, one},
                                        SumTerm{Summand::central_sq_c3k, Truncation::half, one}},
                                       1, {}, {}});
  return bad;
}

}  // namespace

TEST(Sweep, SinglePrimeAllParameters) {
  const Report r = sweep(spec("T2.1"), 5, 5, ParamStrategy::all(), {.jobs = 1});
  EXPECT_EQ(r.totals, (Totals{3, 0, 2}));
  ASSERT_EQ(r.results.size(), 5u);
  for (std::int64_t m = 0; m < 5; ++m) {
    EXPECT_EQ(r.results[m].params, std::vector<std::int64_t>{m});
    EXPECT_EQ(r.results[m].outcome.status, m <= 1 ? Status::skipped : Status::pass);
  }
}

TEST(Sweep, SkipAccountingMatchesParameterRoots) {
  const Report r = sweep(spec("T2.1"), 5, 60, ParamStrategy::all(), {.jobs = 2});
  for (std::uint32_t p : primes_in_range(5, 60)) {
    std::size_t roots = 0, skipped = 0;
    for (std::int64_t m = 0; m < p; ++m) {
      if (oracle::reduce(m * (m - 16) * (m - 256), p) == 0) ++roots;
    }
    for (const auto& x : r.results) {
      if (x.p == p && x.outcome.status == Status::skipped) ++skipped;
    }
    EXPECT_EQ(skipped, roots) << p;
  }
  EXPECT_EQ(r.totals.fail, 0u);
  EXPECT_EQ(r.totals.instances(), r.results.size());
}

TEST(Sweep, ResultsIndependentOfWorkerCount) {
  for (const char* id : {"T4.1i", "CJ4.3", "CJ2.1ii"}) {
    const Report a = sweep(spec(id), 5, 300, ParamStrategy::random(5), {.jobs = 1, .seed = 42});
    const Report b = sweep(spec(id), 5, 300, ParamStrategy::random(5), {.jobs = 4, .seed = 42});
    EXPECT_EQ(a.results, b.results) << id;
    EXPECT_EQ(a.totals, b.totals);
  }
}

TEST(Sweep, ResultsOrderedByPrimeThenParams) {
  const Report r = sweep(spec("T3.1"), 5, 120, ParamStrategy{}, {.jobs = 3, .seed = 1});
  for (std::size_t i = 1; i < r.results.size(); ++i) {
    const auto& a = r.results[i - 1];
    const auto& b = r.results[i];
    EXPECT_TRUE(a.p < b.p || (a.p == b.p && a.params < b.params));
  }
}

TEST(Sweep, ParamStrategies) {
  const auto random = ParamStrategy::random(10).params_for(101, 1, 7);
  EXPECT_EQ(random.size(), 10u);
  EXPECT_TRUE(std::is_sorted(random.begin(), random.end()));
  EXPECT_EQ(std::adjacent_find(random.begin(), random.end()), random.end());
  EXPECT_EQ(random, ParamStrategy::random(10).params_for(101, 1, 7));
  EXPECT_NE(random, ParamStrategy::random(10).params_for(101, 1, 8));
  EXPECT_EQ(ParamStrategy::random(50).params_for(7, 1, 0).size(), 7u);
  EXPECT_EQ(ParamStrategy{}.params_for(499, 1, 0).size(), 499u);
  EXPECT_EQ(ParamStrategy{}.params_for(503, 1, 0).size(), 32u);
  EXPECT_EQ(ParamStrategy{}.params_for(101, 3, 0).size(), 32u);
  EXPECT_EQ(ParamStrategy::fixed({5, 1, 5}).params_for(101, 1, 0), (std::vector<std::int64_t>{1, 5}));

  for (const char* text : {"auto", "all", "random:12", "fixed:1,-2,30"}) {
    const auto s = ParamStrategy::parse(text);
    ASSERT_TRUE(s.has_value()) << text;
    EXPECT_EQ(s->describe(), text);
  }
  EXPECT_FALSE(ParamStrategy::parse("random:0").has_value());
  EXPECT_FALSE(ParamStrategy::parse("fixed:").has_value());
  EXPECT_FALSE(ParamStrategy::parse("some").has_value());
}

TEST(Sweep, Budget) {
  EXPECT_EQ(estimate_instances(spec("T2.1"), 5, 13, ParamStrategy::all()), 5u + 7 + 11 + 13);
  EXPECT_EQ(estimate_instances(spec("T3.2"), 5, 13, ParamStrategy::all()), 4u);
  EXPECT_THROW(sweep(spec("T2.1"), 5, 100000, ParamStrategy::all(), {.budget = 1000}), RangeTooLarge);
  EXPECT_THROW(sweep(spec("T2.1"), 3, 10, ParamStrategy::all()), std::invalid_argument);
  EXPECT_THROW(sweep(spec("T2.1"), 10, 5, ParamStrategy::all()), std::invalid_argument);
}

TEST(Sweep, FailuresAreRecheckedExactly) {
  const StatementSpec bad = false_statement();
  const Report r = sweep(bad, 5, 300, ParamStrategy{}, {.jobs = 2, .recheck_limit = 100});
  ASSERT_GT(r.totals.fail, 0u);
  for (const auto& x : r.results) {
    if (x.outcome.status != Status::fail) continue;
    if (x.p <= 100) {
      EXPECT_EQ(x.outcome.reason.rfind("counterexample-candidate, confirmed by exact recomputation", 0), 0u)
          << x.outcome.reason;
    } else {
      EXPECT_NE(x.outcome.reason.find("unconfirmed"), std::string::npos) << x.outcome.reason;
    }
  }
  StatementSpec bad_theorem = bad;
  bad_theorem.kind = StatementKind::theorem;
  const Report t = sweep(bad_theorem, 5, 50, ParamStrategy{}, {.jobs = 1});
  for (const auto& x : t.results) {
    if (x.outcome.status == Status::fail) EXPECT_EQ(x.outcome.reason.rfind("theorem violated, confirmed", 0), 0u);
  }
}

TEST(Sweep, ReportMetadata) {
  const Report r = sweep(spec("T3.3"), 5, 50, ParamStrategy::all(), {.jobs = 1, .seed = 9});
  EXPECT_EQ(r.statement, "T3.3");
  EXPECT_EQ(r.lo, 5u);
  EXPECT_EQ(r.hi, 50u);
  EXPECT_EQ(r.strategy, "all");
  EXPECT_EQ(r.seed, 9u);
  EXPECT_EQ(r.version, library_version());
  EXPECT_EQ(r.totals, tally(r.results));
}
