#include "supercong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "supercong/verify.hpp"
#include "supercong/version.hpp"

namespace supercong {

namespace {

constexpr std::uint32_t kEnumerateLimit = 500;
constexpr std::size_t kAutoRandomCount = 32;

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::int64_t> all_residues(std::uint32_t p) {
  std::vector<std::int64_t> v(p);
  for (std::uint32_t i = 0; i < p; ++i) v[i] = i;
  return v;
}

}  // namespace

std::optional<ParamStrategy> ParamStrategy::parse(std::string_view text) {
  if (text == "auto") return ParamStrategy{};
  if (text == "all") return all();
  if (text.starts_with("random:")) {
    const auto n = parse_int(text.substr(7));
    if (!n || *n <= 0) return std::nullopt;
    return random(static_cast<std::size_t>(*n));
  }
  if (text.starts_with("fixed:")) {
    std::vector<std::int64_t> values;
    std::string_view rest = text.substr(6);
    while (true) {
      const auto comma = rest.find(',');
      const auto v = parse_int(rest.substr(0, comma));
      if (!v) return std::nullopt;
      values.push_back(*v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return fixed(std::move(values));
  }
  return std::nullopt;
}

std::string ParamStrategy::describe() const {
  switch (kind) {
    case Kind::automatic: return "auto";
    case Kind::all: return "all";
    case Kind::random: return "random:" + std::to_string(count);
    case Kind::fixed: {
      std::string s = "fixed:";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
      }
      return s;
    }
  }
  return "auto";
}

std::vector<std::int64_t> ParamStrategy::params_for(std::uint32_t p, unsigned power, std::uint64_t seed) const {
  Kind k = kind;
  std::size_t n = count;
  if (k == Kind::automatic) {
    k = (power == 1 && p <= kEnumerateLimit) ? Kind::all : Kind::random;
    n = kAutoRandomCount;
  }
  switch (k) {
    case Kind::all: return all_residues(p);
    case Kind::fixed: {
      std::vector<std::int64_t> v = values;
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }
    case Kind::random:
    case Kind::automatic: break;
  }
  if (n >= p) return all_residues(p);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), p};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  std::set<std::int64_t> chosen;
  while (chosen.size() < n) chosen.insert(dist(rng));
  return {chosen.begin(), chosen.end()};
}

Totals tally(const std::vector<InstanceResult>& results) {
  Totals t;
  for (const auto& r : results) {
    switch (r.outcome.status) {
      case Status::pass: ++t.pass; break;
      case Status::fail: ++t.fail; break;
      case Status::skipped: ++t.skipped; break;
    }
  }
  return t;
}

std::uint64_t estimate_instances(const StatementSpec& spec, std::uint32_t lo, std::uint32_t hi,
                                 const ParamStrategy& strategy) {
  std::uint64_t total = 0;
  for (std::uint32_t p : primes_in_range(lo, hi)) {
    if (!spec.param) {
      total += 1;
      continue;
    }
    switch (strategy.kind) {
      case ParamStrategy::Kind::all: total += p; break;
      case ParamStrategy::Kind::fixed: total += strategy.values.size(); break;
      case ParamStrategy::Kind::random: total += std::min<std::uint64_t>(strategy.count, p); break;
      case ParamStrategy::Kind::automatic:
        total += (spec.power() == 1 && p <= kEnumerateLimit) ? p : std::min<std::uint64_t>(kAutoRandomCount, p);
        break;
    }
  }
  return total;
}

namespace {

void recheck(const StatementSpec& spec, InstanceResult& r, std::uint32_t limit) {
  const bool theorem = spec.kind == StatementKind::theorem;
  const std::string what = theorem ? "theorem violated" : "counterexample-candidate";
  if (r.p > limit) {
    r.outcome.reason = what + ", unconfirmed (p above recheck limit): " + r.outcome.reason;
    return;
  }
  std::optional<std::int64_t> param;
  if (!r.params.empty()) param = r.params.front();
  const CheckOutcome exact = check_statement_exact(spec, r.p, param);
  if (exact == r.outcome) {
    r.outcome.reason = what + ", confirmed by exact recomputation: " + r.outcome.reason;
  } else {
    r.outcome.reason = "fast path disagrees with exact recomputation: " + r.outcome.reason;
  }
}

}  // namespace

Report sweep(const StatementSpec& spec, std::uint32_t lo, std::uint32_t hi, const ParamStrategy& strategy,
             const SweepOptions& options) {
  if (lo <= 3 || lo > hi || hi >= kPrimeLimit) throw std::invalid_argument("sweep: need 3 < lo <= hi < 2^20");
  const std::uint64_t estimate = estimate_instances(spec, lo, hi, strategy);
  if (estimate > options.budget) {
    throw RangeTooLarge("sweep of " + spec.id + " needs about " + std::to_string(estimate) +
                        " instances, budget is " + std::to_string(options.budget));
  }

  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::uint32_t> primes = primes_in_range(lo, hi);
  std::vector<std::vector<InstanceResult>> per_prime(primes.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < primes.size(); i = next++) {
        const std::uint32_t p = primes[i];
        auto& out = per_prime[i];
        if (auto why = hypothesis_failure(spec, p)) {
          out.push_back({p, {}, CheckOutcome::skipped(*why)});
          continue;
        }
        PrimeWorkspace ws(p, spec.power());
        if (spec.param) {
          for (std::int64_t m : strategy.params_for(p, spec.power(), options.seed)) {
            out.push_back({p, {m}, check_statement(spec, ws, m)});
          }
        } else {
          out.push_back({p, {}, check_statement(spec, ws, std::nullopt)});
        }
        for (auto& r : out) {
          if (r.outcome.status == Status::fail) recheck(spec, r, options.recheck_limit);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = primes.size();
    }
  };

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, primes.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  Report report;
  report.statement = spec.id;
  report.lo = lo;
  report.hi = hi;
  report.strategy = strategy.describe();
  report.seed = options.seed;
  for (auto& v : per_prime) {
    for (auto& r : v) report.results.push_back(std::move(r));
  }
  report.totals = tally(report.results);
  report.duration_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  report.version = library_version();
  return report;
}

std::string library_version() { return SUPERCONG_VERSION; }

}  // namespace supercong
