#include "supercong/verify.hpp"

#include <algorithm>
#include <string>

namespace supercong {

PrimeWorkspace::PrimeWorkspace(std::uint32_t p, unsigned e) : table_(PrimeCtx(p, e)) {}

const std::vector<Residue>& PrimeWorkspace::sequence(SeqId id) {
  auto& slot = sequences_[static_cast<std::size_t>(id)];
  if (!slot) slot = seq_table(id, table_);
  return *slot;
}

ExpectedValue quadform_expected(const CaseTable& cases, std::uint32_t p, unsigned e) {
  for (const auto& row : cases.rows) {
    if (!row.when.contains(p)) continue;
    Residue modulus = 1;
    for (unsigned i = 0; i < e; ++i) modulus *= p;
    if (row.value == CaseValue::zero) return {0, std::nullopt};

    const std::uint64_t target = row.twice_p ? 2ull * p : p;
    const auto w = represent(target, row.form_a, row.form_b);
    if (!w) {
      throw NoRepresentation(std::to_string(target) + " has no representation by " + std::to_string(row.form_a) +
                             "x^2+" + std::to_string(row.form_b) + "y^2");
    }
    const std::int64_t x2 = static_cast<std::int64_t>(w->x * w->x);
    const std::int64_t two_p = 2 * static_cast<std::int64_t>(p);
    std::int64_t v = 0;
    switch (row.value) {
      case CaseValue::zero: break;
      case CaseValue::four_x2: v = 4 * x2; break;
      case CaseValue::four_x2_minus_2p: v = 4 * x2 - two_p; break;
      case CaseValue::eight_x2_minus_2p: v = 8 * x2 - two_p; break;
      case CaseValue::two_p_minus_12x2: v = two_p - 12 * x2; break;
      case CaseValue::two_p_minus_8x2: v = two_p - 8 * x2; break;
      case CaseValue::two_p_minus_2x2: v = two_p - 2 * x2; break;
    }
    return {reduce(v, modulus), w};
  }
  throw SkippedHypothesis("no case row covers p = " + std::to_string(p));
}

std::optional<std::string> hypothesis_failure(const StatementSpec& spec, std::uint32_t p) {
  if (p <= spec.prime_above) return "requires p > " + std::to_string(spec.prime_above);
  if (std::find(spec.excluded_primes.begin(), spec.excluded_primes.end(), p) != spec.excluded_primes.end()) {
    return "p = " + std::to_string(p) + " is excluded";
  }
  if (spec.prime_classes && !spec.prime_classes->contains(p)) {
    return "p = " + std::to_string(p % spec.prime_classes->modulus) + " mod " +
           std::to_string(spec.prime_classes->modulus) + ", requires " + spec.prime_classes->describe();
  }
  return std::nullopt;
}

namespace {

/// Shared control flow of both evaluation routes. `Eval` supplies
/// vanishes(guard) and side(term, power).
template <class Eval>
CheckOutcome run_check(const StatementSpec& spec, std::uint32_t p, Eval& eval) {
  if (auto why = hypothesis_failure(spec, p)) return CheckOutcome::skipped(*why);
  try {
    if (spec.param && eval.vanishes(spec.param->guard)) {
      return CheckOutcome::skipped("parameter excluded: " + spec.param->guard.text() + " = 0 mod p");
    }
    std::optional<CheckOutcome> first;
    for (std::size_t ci = 0; ci < spec.congruences.size(); ++ci) {
      const Congruence& c = spec.congruences[ci];
      if (c.when && !c.when->contains(p)) continue;

      std::vector<Residue> values;
      values.reserve(c.sides.size());
      for (const auto& side : c.sides) values.push_back(eval.side(side, c.power));

      CheckOutcome o;
      o.status = Status::pass;
      o.lhs = values[0];
      if (values.size() > 1) o.rhs = values[1];
      if (c.cases) {
        const ExpectedValue expected = quadform_expected(*c.cases, p, c.power);
        o.witness = expected.witness;
        o.rhs = expected.value;
        if (values[0] != expected.value) {
          o.status = Status::fail;
          o.reason = "congruence " + std::to_string(ci + 1) + ": sum differs from case value";
        }
      }
      for (std::size_t j = 1; j < values.size() && o.status == Status::pass; ++j) {
        if (values[j] != values[0]) {
          o.status = Status::fail;
          o.rhs = values[j];
          o.reason = "congruence " + std::to_string(ci + 1) + ": side 1 differs from side " + std::to_string(j + 1);
        }
      }
      if (o.status == Status::fail) return o;
      if (!first) first = std::move(o);
    }
    if (!first) return CheckOutcome::skipped("no congruence applies to p = " + std::to_string(p));
    return *first;
  } catch (const NotInvertible& e) {
    return CheckOutcome::skipped(std::string("not invertible mod p: ") + e.what());
  } catch (const SkippedHypothesis& e) {
    return CheckOutcome::skipped(e.what());
  }
}

class FastEval {
 public:
  FastEval(PrimeWorkspace& ws, Residue param) : ws_(ws), param_(ws.ctx(), param) {}

  bool vanishes(const ParamExpr& guard) const { return guard(param_).value() % ws_.ctx().p() == 0; }

  Residue side(const SumTerm& term, unsigned power) {
    const PrimeCtx& ctx = ws_.ctx();
    const FactTable& table = ws_.table();
    const std::uint32_t p = ctx.p();
    const Residue x = term.argument(param_).value();
    const std::size_t bound = truncation_bound(term.bound, p);

    Residue s = 0;
    auto weighted = [&](const std::vector<Residue>& seq, bool with_central) {
      Residue xk = 1 % ctx.modulus();
      for (std::size_t k = 0; k <= bound; ++k) {
        Residue t = ctx.mul(seq[k], xk);
        if (with_central) t = ctx.mul(t, table.binom_residue(2 * k, k));
        s = ctx.add(s, t);
        xk = ctx.mul(xk, x);
      }
    };
    switch (term.summand) {
      case Summand::central_cube: s = truncated_sum(Kernel::central_cube, bound, x, table); break;
      case Summand::central_sq_c3k: s = truncated_sum(Kernel::central_sq_c3k, bound, x, table); break;
      case Summand::central_sq_c4k: s = truncated_sum(Kernel::central_sq_c4k, bound, x, table); break;
      case Summand::central_c3k_c6k: s = truncated_sum(Kernel::central_c3k_c6k, bound, x, table); break;
      case Summand::central_times_a: weighted(ws_.sequence(SeqId::a), true); break;
      case Summand::seq_A: weighted(ws_.sequence(SeqId::A), false); break;
      case Summand::seq_b: weighted(ws_.sequence(SeqId::b), false); break;
      case Summand::seq_D: weighted(ws_.sequence(SeqId::D), false); break;
    }

    int sign = 1;
    if (term.sign == SignKind::p_over_3) sign = legendre_symbol(p, 3);
    if (term.sign == SignKind::legendre) {
      sign = legendre_symbol(static_cast<std::int64_t>((*term.character)(param_).value() % p), p);
    }
    if (sign == 0) s = 0;
    if (sign < 0) s = ctx.neg(s);
    return s % ctx.power(power);
  }

 private:
  PrimeWorkspace& ws_;
  ModInt param_;
};

class ExactEval {
 public:
  ExactEval(std::uint32_t p, unsigned e, std::int64_t param) : p_(p), param_(param % static_cast<std::int64_t>(p)) {
    if (param_ < 0) param_ += p;
    mpz_ui_pow_ui(modulus_.get_mpz_t(), p, e);
  }

  bool vanishes(const ParamExpr& guard) const {
    const mpq_class g = guard(param_);
    check_denominator(g);
    return mpz_divisible_ui_p(g.get_num_mpz_t(), p_) != 0;
  }

  Residue side(const SumTerm& term, unsigned power) {
    const mpq_class x = term.argument(param_);
    check_denominator(x);
    const std::size_t bound = truncation_bound(term.bound, p_);

    // sum v_k (num/den)^k = (sum v_k num^k den^(bound-k)) / den^bound
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    std::vector<mpz_class> den_pow(bound + 1);
    den_pow[0] = 1;
    for (std::size_t k = 1; k <= bound; ++k) den_pow[k] = den_pow[k - 1] * den;

    mpz_class total;
    mpz_class num_pow = 1;
    for (std::size_t k = 0; k <= bound; ++k) {
      total += value(term.summand, k) * num_pow * den_pow[bound - k];
      num_pow *= num;
    }

    mpz_class r, inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(den_pow[bound] % modulus_).get_mpz_t(), modulus_.get_mpz_t());
    mpz_mod(r.get_mpz_t(), mpz_class(total * inv).get_mpz_t(), modulus_.get_mpz_t());

    int sign = 1;
    if (term.sign == SignKind::p_over_3) sign = (p_ % 3 == 1) ? 1 : -1;
    if (term.sign == SignKind::legendre) {
      const mpq_class c = (*term.character)(param_);
      check_denominator(c);
      const mpz_class cn = c.get_num() * c.get_den();
      mpz_class cp;
      mpz_mod(cp.get_mpz_t(), cn.get_mpz_t(), mpz_class(p_).get_mpz_t());
      sign = mpz_legendre(cp.get_mpz_t(), mpz_class(p_).get_mpz_t());
    }
    if (sign == 0) r = 0;
    if (sign < 0 && r != 0) r = modulus_ - r;

    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p_, power);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pe.get_mpz_t());
    return r.get_ui();
  }

 private:
  void check_denominator(const mpq_class& q) const {
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), p_)) throw NotInvertible(0, p_);
  }

  mpz_class value(Summand s, std::size_t k) {
    switch (s) {
      case Summand::central_cube: return kernel_exact(Kernel::central_cube, k);
      case Summand::central_sq_c3k: return kernel_exact(Kernel::central_sq_c3k, k);
      case Summand::central_sq_c4k: return kernel_exact(Kernel::central_sq_c4k, k);
      case Summand::central_c3k_c6k: return kernel_exact(Kernel::central_c3k_c6k, k);
      case Summand::central_times_a: {
        const long K = static_cast<long>(k);
        return binom_exact(2 * K, K) * prefix(SeqId::a)[k];
      }
      case Summand::seq_A: return prefix(SeqId::A)[k];
      case Summand::seq_b: return prefix(SeqId::b)[k];
      case Summand::seq_D: return prefix(SeqId::D)[k];
    }
    return 0;
  }

  const std::vector<mpz_class>& prefix(SeqId id) {
    auto& slot = prefixes_[static_cast<std::size_t>(id)];
    if (slot.empty()) slot = seq_exact_prefix(id, p_);
    return slot;
  }

  std::uint32_t p_;
  mpq_class param_;
  mpz_class modulus_;
  std::array<std::vector<mpz_class>, 4> prefixes_;
};

}  // namespace

CheckOutcome check_statement(const StatementSpec& spec, PrimeWorkspace& ws, std::optional<std::int64_t> param) {
  if (ws.ctx().e() < spec.power()) throw std::invalid_argument("check_statement: workspace exponent too small");
  const std::uint32_t p = ws.ctx().p();
  FastEval eval(ws, reduce(param.value_or(0), p));
  return run_check(spec, p, eval);
}

CheckOutcome check_statement(const StatementSpec& spec, std::uint32_t p, std::optional<std::int64_t> param) {
  PrimeWorkspace ws(p, spec.power());
  return check_statement(spec, ws, param);
}

CheckOutcome check_statement_exact(const StatementSpec& spec, std::uint32_t p, std::optional<std::int64_t> param) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("check_statement_exact: p must be a prime > 3");
  ExactEval eval(p, spec.power(), param.value_or(0));
  return run_check(spec, p, eval);
}

}  // namespace supercong
