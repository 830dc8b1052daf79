#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/kernels.hpp"
#include "supercong/modarith.hpp"

namespace supercong {

enum class StatementKind { theorem, conjecture };

std::string_view kind_name(StatementKind kind);

/// Upper summation index as a function of p.
enum class Truncation {
  sixth,  // floor(p/6)
  half,   // (p-1)/2
  full,   // p-1
};

std::size_t truncation_bound(Truncation t, std::uint32_t p);

/// A rational expression in (at most) one parameter. The same generic
/// callable is instantiated for residues mod p^e and for exact rationals so
/// the fast and exact evaluation routes share only the formula.
class ParamExpr {
 public:
  template <class F>
  ParamExpr(std::string text, F f)
      : text_(std::move(text)),
        fast_([f](const ModInt& x) -> ModInt { return f(x); }),
        exact_([f](const mpq_class& x) -> mpq_class { return f(x); }) {}

  ModInt operator()(const ModInt& x) const { return fast_(x); }
  mpq_class operator()(const mpq_class& x) const { return exact_(x); }
  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
  std::function<ModInt(const ModInt&)> fast_;
  std::function<mpq_class(const mpq_class&)> exact_;
};

/// What is summed against x^k.
enum class Summand {
  central_cube,        // C(2k,k)^3
  central_sq_c3k,      // C(2k,k)^2 C(3k,k)
  central_sq_c4k,      // C(2k,k)^2 C(4k,2k)
  central_c3k_c6k,     // C(2k,k) C(3k,k) C(6k,3k)
  central_times_a,     // C(2k,k) a_k
  seq_A,               // A_n
  seq_b,               // b_n
  seq_D,               // D_n = sum_k C(n,k)^4
};

std::string_view summand_name(Summand s);

/// Optional character factor in front of a sum.
enum class SignKind {
  none,
  legendre,    // (expr / p)
  p_over_3,    // (p / 3)
};

/// sign * sum_{k=0}^{bound} summand(k) * argument^k
struct SumTerm {
  Summand summand;
  Truncation bound;
  ParamExpr argument;
  SignKind sign = SignKind::none;
  std::optional<ParamExpr> character;

  std::string describe() const;
};

struct ResidueClass {
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> residues;

  bool contains(std::uint32_t p) const;
  std::string describe() const;
};

/// Closed-form right-hand side in terms of p and x (or p only).
enum class CaseValue {
  zero,
  four_x2,                // 4x^2
  four_x2_minus_2p,       // 4x^2 - 2p
  eight_x2_minus_2p,      // 8x^2 - 2p
  two_p_minus_12x2,       // 2p - 12x^2
  two_p_minus_8x2,        // 2p - 8x^2
  two_p_minus_2x2,        // 2p - 2x^2
};

std::string_view case_value_name(CaseValue v);

struct CaseRow {
  ResidueClass when;
  CaseValue value = CaseValue::zero;
  /// Form a x^2 + b y^2 representing p (or 2p when twice_p); unused for zero.
  std::uint32_t form_a = 1;
  std::uint32_t form_b = 1;
  bool twice_p = false;
};

struct CaseTable {
  std::vector<CaseRow> rows;
};

/// sides[0] == sides[1] == ... (mod p^power), and sides[0] equals the case
/// table value when one is present. `when` restricts the congruence to
/// primes in extra residue classes.
struct Congruence {
  std::vector<SumTerm> sides;
  unsigned power = 1;
  std::optional<ResidueClass> when;
  std::optional<CaseTable> cases;
};

struct ParamSpec {
  std::string name;
  /// The instance is skipped when this expression vanishes mod p.
  ParamExpr guard;
};

struct StatementSpec {
  std::string id;
  StatementKind kind = StatementKind::theorem;
  std::string summary;
  /// Primes must exceed this.
  std::uint32_t prime_above = 3;
  std::optional<ResidueClass> prime_classes;
  std::vector<std::uint32_t> excluded_primes;
  std::optional<ParamSpec> param;
  std::vector<Congruence> congruences;

  /// Largest modulus exponent over all congruences.
  unsigned power() const;
};

const std::vector<StatementSpec>& statement_registry();
const StatementSpec* find_statement(std::string_view id);
std::vector<std::string> statement_ids();

/// Expands "all-theorems", "all-conjectures" or a single id. Returns an
/// empty vector for an unknown name.
std::vector<const StatementSpec*> select_statements(std::string_view name);

}  // namespace supercong
