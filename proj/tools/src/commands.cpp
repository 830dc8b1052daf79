#include "supercong/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "supercong/charsums.hpp"
#include "supercong/cli/report_io.hpp"
#include "supercong/sequences.hpp"
#include "supercong/series.hpp"

namespace supercong::cli {

namespace {

std::optional<std::uint32_t> parse_u32(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

void list_ids(std::ostream& err) {
  err << "valid statements: all-theorems all-conjectures";
  for (const auto& id : statement_ids()) err << ' ' << id;
  err << '\n';
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

/// Writes to the file at `path` or to `out` when path is empty.
template <class F>
bool with_output(const std::string& path, std::ostream& out, std::ostream& err, F write) {
  if (path.empty()) {
    write(out);
    return true;
  }
  std::ofstream file(path);
  if (!file) {
    err << "cannot open " << path << '\n';
    return false;
  }
  write(file);
  return true;
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> parse_prime_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  const auto lo = parse_u32(text.substr(0, dots));
  const auto hi = parse_u32(text.substr(dots + 2));
  if (!lo || !hi || *lo <= 3 || *lo > *hi || *hi >= kPrimeLimit) return std::nullopt;
  return std::pair{*lo, *hi};
}

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("SUPERCONG_JOBS")) {
    if (auto v = parse_u32(env); v && *v > 0) return *v;
  }
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_verify(const std::vector<const StatementSpec*>& specs, const VerifyConfig& config, std::ostream& out,
               std::ostream& err) {
  std::vector<Report> reports;
  for (const StatementSpec* spec : specs) {
    try {
      reports.push_back(sweep(*spec, config.lo, config.hi, config.strategy, config.sweep));
    } catch (const RangeTooLarge& e) {
      err << e.what() << '\n';
      return kUsage;
    }
  }

  switch (config.format) {
    case Format::text: write_text(reports, config.verbosity, out); break;
    case Format::csv: write_csv(reports, out); break;
    case Format::json: {
      nlohmann::json j;
      if (reports.size() == 1) {
        j = report_to_json(reports.front());
      } else {
        j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(report_to_json(r));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }

  for (const auto& r : reports) {
    if (r.totals.fail) return kFailures;
  }
  return kOk;
}

namespace {

int run_seq(const std::string& name, unsigned count, const std::string& format, std::ostream& out,
            std::ostream& err) {
  const auto id = parse_seq_id(name);
  if (!id) {
    err << "unknown sequence '" << name << "'; expected one of A, a, b, D\n";
    return kUsage;
  }
  if (count > kExactIndexLimit) {
    err << "--count must be at most " << kExactIndexLimit << '\n';
    return kUsage;
  }
  const auto values = seq_exact_prefix(*id, count);
  if (format == "json") {
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].get_str();
    out << "]\n";
  } else {
    for (const auto& v : values) out << v.get_str() << '\n';
  }
  return kOk;
}

int run_series(unsigned order, std::ostream& out) {
  const bool checks[] = {
      pochhammer_check(order),
      bailey_check(order),
      rogers_check(RogersIdentity::A_generating, order),
      rogers_check(RogersIdentity::a_generating, order),
  };
  const char* names[] = {"pochhammer", "bailey", "rogers A_n", "rogers a_n"};
  bool ok = true;
  for (int i = 0; i < 4; ++i) {
    out << names[i] << " to order " << order << ": " << verdict(checks[i]) << '\n';
    ok = ok && checks[i];
  }
  return ok ? kOk : kFailures;
}

int run_identities(unsigned max_n, unsigned max_m, unsigned max_rec, std::ostream& out) {
  bool ok = true;
  auto report = [&](const std::string& what, std::optional<unsigned> first_bad) {
    out << what << ": " << verdict(!first_bad);
    if (first_bad) out << " (first failure at " << *first_bad << ")";
    out << '\n';
    ok = ok && !first_bad;
  };
  report("A_n as a sum over C(n+k,3k) for n <= " + std::to_string(max_n), A_sum_form_check_range(max_n));
  report("b_n dual sum forms for n <= " + std::to_string(max_n), b_dual_sums_check_range(max_n));
  report("b_n closed forms for n <= " + std::to_string(max_n), b_forms_check_range(max_n));
  report("A_n recurrence for n <= " + std::to_string(max_rec), recurrence_check_range(SeqId::A, max_rec));
  report("a_n recurrence for n <= " + std::to_string(max_rec), recurrence_check_range(SeqId::a, max_rec));
  for (CertSide side : {CertSide::first, CertSide::second}) {
    std::optional<unsigned> bad;
    for (unsigned m = 0; m <= max_m && !bad; ++m) {
      for (unsigned k = 0; k <= m; ++k) {
        if (!wz_certificate_check(side, m, k)) {
          bad = m;
          break;
        }
      }
    }
    report("WZ certificate side " + std::to_string(static_cast<int>(side)) + " for k <= m <= " + std::to_string(max_m), bad);
  }
  return ok ? kOk : kFailures;
}

int run_bridges(std::uint32_t lo, std::uint32_t hi, unsigned samples, std::uint64_t seed, std::ostream& out) {
  struct Count {
    std::size_t pass = 0, fail = 0, skipped = 0;
  };
  Count counts[5];
  std::vector<std::string> failures;
  for (std::uint32_t p : primes_in_range(lo, hi)) {
    const FactTable table(PrimeCtx(p, 1));
    const QuadraticCharacter chi(p);
    auto record = [&](Bridge b, const CheckOutcome& o, Residue a, Residue c) {
      Count& n = counts[static_cast<int>(b)];
      if (o.status == Status::pass) ++n.pass;
      if (o.status == Status::skipped) ++n.skipped;
      if (o.status == Status::fail) {
        ++n.fail;
        std::ostringstream s;
        s << "  " << bridge_name(b) << " p=" << p << " param=" << a << "," << c << " lhs=" << o.lhs.value_or(0)
          << " rhs=" << o.rhs.value_or(0);
        failures.push_back(s.str());
      }
    };
    for (Bridge b : {Bridge::p3_charsum, Bridge::p3_square, Bridge::p4_charsum, Bridge::p4_square}) {
      for (Residue t = 0; t < p; ++t) record(b, bridge_check(b, table, chi, t), t, 0);
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), p};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<Residue> nonzero(1, p - 1), any(0, p - 1);
    for (unsigned i = 0; i < samples; ++i) {
      const Residue m = nonzero(rng), n = any(rng);
      record(Bridge::cubic_square, bridge_check(Bridge::cubic_square, table, chi, m, n), m, n);
    }
  }
  bool ok = true;
  for (int b = 0; b < 5; ++b) {
    out << bridge_name(static_cast<Bridge>(b)) << ": pass " << counts[b].pass << ", fail " << counts[b].fail
        << ", skipped " << counts[b].skipped << '\n';
    ok = ok && counts[b].fail == 0;
  }
  for (const auto& f : failures) out << f << '\n';
  return ok ? kOk : kFailures;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for truncated binomial-sum supercongruences", "supercong"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  std::vector<std::string> statements;
  std::string primes = "5..1000", params = "auto", format = "text", output;
  std::uint64_t seed = 0, budget = SweepOptions{}.budget;
  unsigned jobs = 0;
  int verbosity = 1;
  std::uint32_t recheck_limit = SweepOptions{}.recheck_limit;

  auto* verify = app.add_subcommand("verify", "Sweep statements over a prime range");
  verify->add_option("-s,--statement", statements, "Statement id, all-theorems or all-conjectures")
      ->required()
      ->delimiter(',');
  verify->add_option("--primes", primes, "Prime range lo..hi")->capture_default_str();
  verify->add_option("--params", params, "auto, all, random:N or fixed:v1,v2,...")->capture_default_str();
  verify->add_option("--seed", seed, "Seed for random parameters")->capture_default_str();
  verify->add_option("-j,--jobs", jobs, "Worker threads (default: available parallelism)");
  verify->add_option("--format", format, "text, json or csv")->capture_default_str();
  verify->add_option("-o,--output", output, "Write the report to this file");
  verify->add_option("--budget", budget, "Maximum estimated instance count")->capture_default_str();
  verify->add_option("--recheck-limit", recheck_limit, "Recompute failures exactly up to this prime")
      ->capture_default_str();
  verify->add_flag("-v,--verbose", [&](std::int64_t n) { verbosity = 1 + static_cast<int>(n); }, "More output");

  std::string seq_name_arg;
  unsigned count = 10;
  std::string seq_format = "text";
  auto* seq = app.add_subcommand("seq", "Print exact sequence values");
  seq->add_option("-n,--name", seq_name_arg, "A, a, b or D")->required();
  seq->add_option("-c,--count", count, "Number of terms")->capture_default_str();
  seq->add_option("--format", seq_format, "text or json")->capture_default_str();

  unsigned order = 40;
  auto* series = app.add_subcommand("series", "Check the power-series identities");
  series->add_option("-N,--order", order, "Truncation order (at least 4)")->capture_default_str();

  unsigned max_n = 300, max_m = 40, max_rec = 1000;
  auto* identities = app.add_subcommand("identities", "Check the exact binomial identities");
  identities->add_option("--max-n", max_n, "Bound for the sum identities")->capture_default_str();
  identities->add_option("--max-m", max_m, "Bound for the certificate")->capture_default_str();
  identities->add_option("--max-rec", max_rec, "Bound for the recurrences")->capture_default_str();

  std::string bridge_primes = "5..499";
  unsigned samples = 64;
  std::uint64_t bridge_seed = 0;
  auto* bridge = app.add_subcommand("bridge", "Check the Legendre polynomial and character sum congruences");
  bridge->add_option("--primes", bridge_primes, "Prime range lo..hi")->capture_default_str();
  bridge->add_option("--samples", samples, "Random (m, n) pairs per prime")->capture_default_str();
  bridge->add_option("--seed", bridge_seed, "Seed for the samples")->capture_default_str();

  std::vector<std::string> argv_store{"supercong"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*verify) {
    VerifyConfig config;
    const auto range = parse_prime_range(primes);
    if (!range) {
      err << "bad --primes '" << primes << "'; expected lo..hi with 3 < lo <= hi < 2^20\n";
      return kUsage;
    }
    std::tie(config.lo, config.hi) = *range;
    const auto strategy = ParamStrategy::parse(params);
    if (!strategy) {
      err << "bad --params '" << params << "'\n";
      return kUsage;
    }
    config.strategy = *strategy;
    const auto fmt = parse_format(format);
    if (!fmt) {
      err << "bad --format '" << format << "'\n";
      return kUsage;
    }
    config.format = *fmt;
    config.verbosity = verbosity;
    config.sweep = {resolve_jobs(jobs), seed, budget, recheck_limit};

    std::vector<const StatementSpec*> specs;
    for (const auto& name : statements) {
      const auto selected = select_statements(name);
      if (selected.empty()) {
        err << "unknown statement '" << name << "'\n";
        list_ids(err);
        return kUsage;
      }
      specs.insert(specs.end(), selected.begin(), selected.end());
    }
    int code = kOk;
    if (!with_output(output, out, err, [&](std::ostream& os) { code = cmd_verify(specs, config, os, err); })) {
      return kUsage;
    }
    return code;
  }
  if (*seq) return run_seq(seq_name_arg, count, seq_format, out, err);
  if (*series) {
    if (order < 4) {
      err << "--order must be at least 4\n";
      return kUsage;
    }
    return run_series(order, out);
  }
  if (*identities) return run_identities(max_n, max_m, max_rec, out);
  if (*bridge) {
    const auto range = parse_prime_range(bridge_primes);
    if (!range) {
      err << "bad --primes '" << bridge_primes << "'\n";
      return kUsage;
    }
    return run_bridges(range->first, range->second, samples, bridge_seed, out);
  }
  return kUsage;
}

}  // namespace supercong::cli
