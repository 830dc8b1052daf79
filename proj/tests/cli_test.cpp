#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "supercong/cli/commands.hpp"
#include "supercong/cli/report_io.hpp"

using namespace supercong;
using namespace supercong::cli;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

StatementSpec false_statement() {
  StatementSpec bad{"BAD", StatementKind::conjecture, "deliberately false"};
  const ParamExpr one("1", []<class R>(const R& x) -> R { return R(x * 0 + 1); });
  bad.congruences.push_back(Congruence{{SumTerm{Summand::central_cube, Truncation::half, one},
                                        SumTerm{Summand::central_sq_c3k, Truncation::half, one}},
                                       1, {}, {}});
  return bad;
}

}  // namespace

TEST(Cli, SeqCommand) {
  EXPECT_EQ(run({"seq", "--name", "A", "--count", "3"}).out, "1\n4\n28\n");
  EXPECT_EQ(run({"seq", "--name", "b", "--count", "2"}).out, "1\n-3\n");
  EXPECT_EQ(run({"seq", "--name", "a", "--count", "3", "--format", "json"}).out, "[1,3,15]\n");
  EXPECT_EQ(run({"seq", "--name", "Z"}).code, kUsage);
  EXPECT_EQ(run({"seq", "--name", "A", "--count", "10001"}).code, kUsage);
}

TEST(Cli, UsageErrors) {
  const CliResult r = run({"verify", "--statement", "NOPE"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("T3.2"), std::string::npos);
  EXPECT_EQ(run({"series", "--order", "2"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--statement", "T3.2", "--primes", "2..10"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--statement", "T3.2", "--primes", "10"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--statement", "T3.2", "--params", "many"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--statement", "T3.2", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--statement", "T2.1", "--primes", "5..100000", "--params", "all", "--budget", "100"}).code,
            kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, VerifyPasses) {
  const CliResult r = run({"verify", "--statement", "T3.2,T3.4", "--primes", "5..500", "--jobs", "2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("T3.2 primes 5..500"), std::string::npos);
  EXPECT_NE(r.out.find("T3.4 primes 5..500"), std::string::npos);

  const CliResult v = run({"verify", "-s", "T3.2", "--primes", "19..19", "-v"});
  EXPECT_NE(v.out.find("p=19 pass lhs=16 rhs=16 witness=19=1*2^2+15*1^2"), std::string::npos) << v.out;
}

TEST(Cli, SeriesAndIdentities) {
  EXPECT_EQ(run({"series", "--order", "12"}).code, kOk);
  EXPECT_EQ(run({"identities", "--max-n", "40", "--max-m", "8", "--max-rec", "60"}).code, kOk);
  EXPECT_EQ(run({"bridge", "--primes", "5..60", "--samples", "8"}).code, kOk);
}

TEST(Cli, JsonReportShapeAndRoundTrip) {
  const CliResult r = run({"verify", "--statement", "T3.2", "--primes", "5..200", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["statement"], "T3.2");
  EXPECT_EQ(j["range"], nlohmann::json::array({5, 200}));
  EXPECT_EQ(j["strategy"], "auto");
  EXPECT_EQ(j["seed"], 0);
  EXPECT_TRUE(j["duration_ms"].is_number());
  EXPECT_TRUE(j["version"].is_string());
  bool saw_witness = false;
  for (const auto& item : j["results"]) {
    EXPECT_TRUE(item["p"].is_number());
    EXPECT_TRUE(item["params"].is_array());
    if (item.contains("lhs")) EXPECT_TRUE(item["lhs"].is_string());
    if (item.contains("witness")) {
      saw_witness = true;
      EXPECT_EQ(item["witness"]["form"], nlohmann::json::array({1, 15}));
    }
  }
  EXPECT_TRUE(saw_witness);
  const Report back = report_from_json(j);
  EXPECT_EQ(report_to_json(back), j);
}

TEST(Cli, JsonRoundTripProperty) {
  std::mt19937_64 rng(123);
  const auto ids = statement_ids();
  for (int i = 0; i < 12; ++i) {
    const StatementSpec& s = *find_statement(ids[rng() % ids.size()]);
    const std::uint32_t lo = 5 + rng() % 100;
    const Report rep = sweep(s, lo, lo + rng() % 150, ParamStrategy::random(1 + rng() % 6),
                             {.jobs = 1, .seed = rng() % 1000});
    EXPECT_EQ(report_from_json(nlohmann::json::parse(report_to_json(rep).dump())), rep) << s.id;
  }
}

TEST(Cli, CsvOutput) {
  const CliResult r = run({"verify", "--statement", "CJ4.3", "--primes", "17..17", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "statement,p,params,status,reason,lhs,rhs,x,y,form_a,form_b\nCJ4.3,17,,pass,,273,273,5,1,1,9\n");
}

TEST(Cli, ExitCodeContract) {
  // Any failing statement in the selection gives exit 1; otherwise 0.
  const StatementSpec bad = false_statement();
  std::mt19937_64 rng(77);
  const auto& reg = statement_registry();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<const StatementSpec*> specs;
    const bool include_bad = rng() % 2;
    for (int i = 0; i < 3; ++i) specs.push_back(&reg[rng() % reg.size()]);
    if (include_bad) specs.insert(specs.begin() + rng() % 4, &bad);
    VerifyConfig config;
    config.lo = 5;
    config.hi = 60;
    config.sweep.jobs = 1;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify(specs, config, out, err), include_bad ? kFailures : kOk);
  }
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "supercong_report.json";
  const CliResult r = run({"verify", "--statement", "T3.3", "--primes", "5..100", "--format", "json", "-o", path});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["statement"], "T3.3");
  EXPECT_EQ(run({"verify", "--statement", "T3.3", "-o", "/nonexistent/dir/x.json"}).code, kUsage);
}

TEST(Cli, JobsFromEnvironment) {
  ::setenv("SUPERCONG_JOBS", "3", 1);
  EXPECT_EQ(resolve_jobs(7), 3u);
  ::setenv("SUPERCONG_JOBS", "zero", 1);
  EXPECT_EQ(resolve_jobs(7), 7u);
  ::unsetenv("SUPERCONG_JOBS");
  EXPECT_EQ(resolve_jobs(5), 5u);
  EXPECT_GE(resolve_jobs(0), 1u);
}

TEST(Cli, PrimeRangeParsing) {
  EXPECT_EQ(parse_prime_range("5..10000"), (std::pair<std::uint32_t, std::uint32_t>{5, 10000}));
  EXPECT_FALSE(parse_prime_range("3..10").has_value());
  EXPECT_FALSE(parse_prime_range("11..10").has_value());
  EXPECT_FALSE(parse_prime_range("5..1048576").has_value());
  EXPECT_FALSE(parse_prime_range("a..b").has_value());
}
