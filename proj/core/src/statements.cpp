#include <algorithm>
#include <sstream>

#include "supercong/statement.hpp"

namespace supercong {

std::string_view kind_name(StatementKind kind) {
  return kind == StatementKind::theorem ? "theorem" : "conjecture";
}

std::size_t truncation_bound(Truncation t, std::uint32_t p) {
  switch (t) {
    case Truncation::sixth: return p / 6;
    case Truncation::half: return (p - 1) / 2;
    case Truncation::full: return p - 1;
  }
  return 0;
}

std::string_view summand_name(Summand s) {
  switch (s) {
    case Summand::central_cube: return "C(2k,k)^3";
    case Summand::central_sq_c3k: return "C(2k,k)^2 C(3k,k)";
    case Summand::central_sq_c4k: return "C(2k,k)^2 C(4k,2k)";
    case Summand::central_c3k_c6k: return "C(2k,k) C(3k,k) C(6k,3k)";
    case Summand::central_times_a: return "C(2k,k) a_k";
    case Summand::seq_A: return "A_k";
    case Summand::seq_b: return "b_k";
    case Summand::seq_D: return "D_k";
  }
  return "?";
}

std::string SumTerm::describe() const {
  std::ostringstream os;
  if (sign == SignKind::p_over_3) os << "(p/3) ";
  if (sign == SignKind::legendre && character) os << "((" << character->text() << ")/p) ";
  os << "sum_{k<=";
  switch (bound) {
    case Truncation::sixth: os << "[p/6]"; break;
    case Truncation::half: os << "(p-1)/2"; break;
    case Truncation::full: os << "p-1"; break;
  }
  os << "} " << summand_name(summand) << " (" << argument.text() << ")^k";
  return os.str();
}

bool ResidueClass::contains(std::uint32_t p) const {
  return std::find(residues.begin(), residues.end(), p % modulus) != residues.end();
}

std::string ResidueClass::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  os << " mod " << modulus;
  return os.str();
}

std::string_view case_value_name(CaseValue v) {
  switch (v) {
    case CaseValue::zero: return "0";
    case CaseValue::four_x2: return "4x^2";
    case CaseValue::four_x2_minus_2p: return "4x^2-2p";
    case CaseValue::eight_x2_minus_2p: return "8x^2-2p";
    case CaseValue::two_p_minus_12x2: return "2p-12x^2";
    case CaseValue::two_p_minus_8x2: return "2p-8x^2";
    case CaseValue::two_p_minus_2x2: return "2p-2x^2";
  }
  return "?";
}

unsigned StatementSpec::power() const {
  unsigned e = 1;
  for (const auto& c : congruences) e = std::max(e, c.power);
  return e;
}

namespace {

template <class R>
R lift(const R& x, long v) {
  return R(x * 0 + v);
}

template <class R>
R cube(const R& x) {
  return R(x * x * x);
}

template <class R>
R fourth(const R& x) {
  const R sq = x * x;
  return R(sq * sq);
}

/// 1/d as a constant expression.
ParamExpr reciprocal(long d) {
  return ParamExpr("1/" + (d < 0 ? "(" + std::to_string(d) + ")" : std::to_string(d)),
                   [d]<class R>(const R& x) -> R { return R(lift(x, 1) / d); });
}

ParamExpr constant(long c) {
  return ParamExpr(std::to_string(c), [c]<class R>(const R& x) -> R { return lift(x, c); });
}

SumTerm sum(Summand s, Truncation t, ParamExpr arg) { return SumTerm{s, t, std::move(arg), SignKind::none, {}}; }

SumTerm sum(Summand s, Truncation t, ParamExpr arg, ParamExpr character) {
  return SumTerm{s, t, std::move(arg), SignKind::legendre, std::move(character)};
}

SumTerm sum_p3(Summand s, Truncation t, ParamExpr arg) {
  return SumTerm{s, t, std::move(arg), SignKind::p_over_3, {}};
}

ResidueClass classes(std::uint32_t modulus, std::vector<std::uint32_t> residues) {
  return ResidueClass{modulus, std::move(residues)};
}

CaseRow row(ResidueClass when, CaseValue value, std::uint32_t a = 1, std::uint32_t b = 1, bool twice_p = false) {
  return CaseRow{std::move(when), value, a, b, twice_p};
}

CaseRow zero_row(ResidueClass when) { return row(std::move(when), CaseValue::zero); }

Congruence chain(unsigned power, std::vector<SumTerm> sides) { return Congruence{std::move(sides), power, {}, {}}; }

Congruence chain(unsigned power, std::vector<SumTerm> sides, CaseTable cases) {
  return Congruence{std::move(sides), power, {}, std::move(cases)};
}

Congruence restricted(Congruence c, ResidueClass when) {
  c.when = std::move(when);
  return c;
}

using enum Summand;
using enum Truncation;
using enum CaseValue;

// Case tables shared by several statements.
CaseTable x2_plus_2y2(CaseValue nonzero) {
  return {{row(classes(8, {1, 3}), nonzero, 1, 2), zero_row(classes(8, {5, 7}))}};
}

CaseTable x2_plus_6y2_full(CaseValue second) {
  return {{row(classes(24, {1, 7}), four_x2_minus_2p, 1, 6), row(classes(24, {5, 11}), second, 2, 3),
           zero_row(classes(24, {13, 17, 19, 23}))}};
}

CaseTable x2_plus_9y2_full() {
  return {{row(classes(12, {1}), four_x2_minus_2p, 1, 9), row(classes(12, {5}), two_p_minus_2x2, 1, 9, true),
           zero_row(classes(4, {3}))}};
}

CaseTable x2_plus_3y2_full() {
  return {{row(classes(3, {1}), four_x2_minus_2p, 1, 3), zero_row(classes(3, {2}))}};
}

std::vector<StatementSpec> build_registry() {
  std::vector<StatementSpec> r;
  const ParamExpr one = constant(1);

  // --- transformation theorems with a free parameter, mod p ---------------
  {
    StatementSpec s{"T2.1", StatementKind::theorem,
                    "sum C(2k,k)^3/m^k equals both C(2k,k)C(3k,k)C(6k,3k) transforms mod p"};
    s.param = ParamSpec{"m", ParamExpr("m(m-16)(m-256)", []<class R>(const R& m) -> R {
                          return R(m * (m - 16) * (m - 256));
                        })};
    s.congruences.push_back(chain(
        1, {sum(central_cube, half, ParamExpr("1/m", []<class R>(const R& m) -> R { return R(1 / m); })),
            sum(central_c3k_c6k, sixth,
                ParamExpr("m/(m-16)^3", []<class R>(const R& m) -> R { return R(m / cube(R(m - 16))); }),
                ParamExpr("m(m-16)", []<class R>(const R& m) -> R { return R(m * (m - 16)); })),
            sum(central_c3k_c6k, sixth,
                ParamExpr("m^2/(256-m)^3", []<class R>(const R& m) -> R { return R(m * m / cube(R(256 - m))); }),
                ParamExpr("m(m-256)", []<class R>(const R& m) -> R { return R(m * (m - 256)); }))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"T2.2", StatementKind::theorem,
                    "sum C(2k,k)^2C(3k,k)((1-t^2)/108)^k equals both [p/6]-transforms mod p"};
    s.param = ParamSpec{"t", ParamExpr("(4t-5)(4t+5)", []<class R>(const R& t) -> R {
                          return R((4 * t - 5) * (4 * t + 5));
                        })};
    s.congruences.push_back(chain(
        1, {sum(central_sq_c3k, half,
                ParamExpr("(1-t^2)/108", []<class R>(const R& t) -> R { return R((1 - t * t) / 108); })),
            sum(central_c3k_c6k, sixth, ParamExpr("(t-1)(t+1)^3/(432(4t-5)^3)", []<class R>(const R& t) -> R {
                  return R((t - 1) * cube(R(t + 1)) / (432 * cube(R(4 * t - 5))));
                }),
                ParamExpr("5-4t", []<class R>(const R& t) -> R { return R(5 - 4 * t); })),
            sum(central_c3k_c6k, sixth, ParamExpr("(t+1)(1-t)^3/(432(4t+5)^3)", []<class R>(const R& t) -> R {
                  return R((t + 1) * cube(R(1 - t)) / (432 * cube(R(4 * t + 5))));
                }),
                ParamExpr("5+4t", []<class R>(const R& t) -> R { return R(5 + 4 * t); }))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"T2.3", StatementKind::theorem,
                    "sum C(2k,k)^2C(4k,2k)((1-t^2)/256)^k equals both [p/6]-transforms mod p"};
    s.param = ParamSpec{"t", ParamExpr("(3t-5)(3t+5)", []<class R>(const R& t) -> R {
                          return R((3 * t - 5) * (3 * t + 5));
                        })};
    s.congruences.push_back(chain(
        1, {sum(central_sq_c4k, half,
                ParamExpr("(1-t^2)/256", []<class R>(const R& t) -> R { return R((1 - t * t) / 256); })),
            sum(central_c3k_c6k, sixth, ParamExpr("(t-1)^2(t+1)/(64(3t+5)^3)", []<class R>(const R& t) -> R {
                  return R((t - 1) * (t - 1) * (t + 1) / (64 * cube(R(3 * t + 5))));
                }),
                ParamExpr("10+6t", []<class R>(const R& t) -> R { return R(10 + 6 * t); })),
            sum(central_c3k_c6k, sixth, ParamExpr("(t+1)^2(t-1)/(64(3t-5)^3)", []<class R>(const R& t) -> R {
                  return R((t + 1) * (t + 1) * (t - 1) / (64 * cube(R(3 * t - 5))));
                }),
                ParamExpr("10-6t", []<class R>(const R& t) -> R { return R(10 - 6 * t); }))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"T3.1", StatementKind::theorem, "sum A_n u^n == sum C(2k,k)^2C(3k,k)(u^2/(1-4u)^3)^k mod p"};
    s.param = ParamSpec{"u", ParamExpr("4u-1", []<class R>(const R& u) -> R { return R(4 * u - 1); })};
    s.congruences.push_back(
        chain(1, {sum(seq_A, full, ParamExpr("u", []<class R>(const R& u) -> R { return u; })),
                  sum(central_sq_c3k, full, ParamExpr("u^2/(1-4u)^3", []<class R>(const R& u) -> R {
                        return R(u * u / cube(R(1 - 4 * u)));
                      }))}));
    r.push_back(std::move(s));
  }

  // --- A_n evaluations with quadratic-form right-hand sides, mod p ---------
  {
    StatementSpec s{"T3.2", StatementKind::theorem, "sum A_n mod p via p = x^2 + 15y^2"};
    s.prime_classes = classes(5, {1, 4});
    s.congruences.push_back(chain(1, {sum(seq_A, full, one)},
                                  CaseTable{{row(classes(15, {1, 4}), four_x2, 1, 15),
                                             zero_row(classes(15, {11, 14}))}}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"T3.3", StatementKind::theorem, "sum A_n/(-8)^n mod p via p = x^2 + 6y^2"};
    s.prime_classes = classes(24, {1, 7, 17, 23});
    s.congruences.push_back(chain(1, {sum(seq_A, full, reciprocal(-8))},
                                  CaseTable{{row(classes(24, {1, 7}), four_x2, 1, 6),
                                             zero_row(classes(24, {17, 23}))}}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"T3.4", StatementKind::theorem, "sum A_n/8^n mod p via p = x^2 + 2y^2"};
    s.congruences.push_back(chain(1, {sum(seq_A, full, reciprocal(8))}, x2_plus_2y2(four_x2)));
    r.push_back(std::move(s));
  }

  // --- a_n transformation ---------------------------------------------------
  const ParamExpr a_arg("u/(9(1+u)^2)", []<class R>(const R& u) -> R { return R(u / (9 * R((1 + u) * (1 + u)))); });
  const ParamExpr c4_arg("u/(9(1+3u)^4)", []<class R>(const R& u) -> R { return R(u / (9 * fourth(R(1 + 3 * u)))); });
  const ParamExpr c4_dual_arg("u^3/(9(3+u)^4)",
                              []<class R>(const R& u) -> R { return R(cube(u) / (9 * fourth(R(3 + u)))); });
  {
    StatementSpec s{"T4.1i", StatementKind::theorem,
                    "sum C(2k,k)a_k(u/(9(1+u)^2))^k == sum C(2k,k)^2C(4k,2k)(u/(9(1+3u)^4))^k mod p"};
    s.param = ParamSpec{"u", ParamExpr("u(u+1)(3u+1)", []<class R>(const R& u) -> R {
                          return R(u * (u + 1) * (3 * u + 1));
                        })};
    s.congruences.push_back(chain(1, {sum(central_times_a, full, a_arg), sum(central_sq_c4k, full, c4_arg)}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"T4.1ii", StatementKind::theorem,
                    "sum C(2k,k)^2C(4k,2k)(u/(9(1+3u)^4))^k == same sum at u^3/(9(3+u)^4) mod p"};
    s.param = ParamSpec{"u", ParamExpr("u(u+1)(3u+1)(u+3)", []<class R>(const R& u) -> R {
                          return R(u * (u + 1) * (3 * u + 1) * (u + 3));
                        })};
    s.congruences.push_back(chain(1, {sum(central_sq_c4k, full, c4_arg), sum(central_sq_c4k, full, c4_dual_arg)}));
    // The first transformation evaluated at 1/u must land on the dual sum.
    s.congruences.push_back(chain(
        1, {sum(central_times_a, full, ParamExpr("(1/u)/(9(1+1/u)^2)", []<class R>(const R& u) -> R {
                  const R v = 1 / u;
                  return R(v / (9 * R((1 + v) * (1 + v))));
                })),
            sum(central_sq_c4k, full, ParamExpr("(1/u)/(9(1+3/u)^4)", []<class R>(const R& u) -> R {
                  const R v = 1 / u;
                  return R(v / (9 * fourth(R(1 + 3 * v))));
                })),
            sum(central_sq_c4k, full, c4_dual_arg)}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"COR4.1", StatementKind::theorem, "sum C(2k,k)a_k/36^k mod p via p = x^2 + 6y^2"};
    s.prime_classes = classes(8, {1, 7});
    s.congruences.push_back(chain(1, {sum(central_times_a, full, reciprocal(36))},
                                  CaseTable{{row(classes(24, {1, 7}), four_x2, 1, 6),
                                             zero_row(classes(24, {17, 23}))}}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"COR4.2", StatementKind::theorem,
                    "sum C(2k,k)a_k/100^k == sum C(2k,k)^2C(4k,2k)/28^(4k) mod p via p = x^2 + 2y^2"};
    s.prime_above = 7;
    s.congruences.push_back(chain(
        1, {sum(central_times_a, full, reciprocal(100)), sum(central_sq_c4k, full, reciprocal(28L * 28 * 28 * 28))},
        x2_plus_2y2(four_x2)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"COR4.3", StatementKind::theorem, "sum C(2k,k)a_k/(-12)^k mod p via p = x^2 + 9y^2"};
    s.prime_classes = classes(12, {1, 11});
    s.congruences.push_back(chain(1, {sum(central_times_a, full, reciprocal(-12))},
                                  CaseTable{{row(classes(12, {1}), four_x2, 1, 9), zero_row(classes(12, {11}))}}));
    r.push_back(std::move(s));
  }

  // --- conjectures mod p^3 ----------------------------------------------------
  {
    StatementSpec s{"CJ2.1i", StatementKind::conjecture,
                    "sum C(2k,k)^3/64^k == (3/p) sum .../12^(3k) == (33/p) sum .../66^(3k) mod p^3"};
    s.prime_classes = classes(4, {1});
    s.congruences.push_back(chain(3, {sum(central_cube, half, reciprocal(64)),
                                      sum(central_c3k_c6k, full, reciprocal(12L * 12 * 12), constant(3)),
                                      sum(central_c3k_c6k, full, reciprocal(66L * 66 * 66), constant(33))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ2.1ii", StatementKind::conjecture,
                    "sum C(2k,k)^3 == (-15/p) sum .../(-15)^(3k) == (-255/p) sum .../255^(3k) mod p^3"};
    s.prime_classes = classes(7, {1, 2, 4});
    s.congruences.push_back(chain(3, {sum(central_cube, half, one),
                                      sum(central_c3k_c6k, full, reciprocal(-15L * 15 * 15), constant(-15)),
                                      sum(central_c3k_c6k, full, reciprocal(255L * 255 * 255), constant(-255))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ2.1iii", StatementKind::conjecture,
                    "sum C(2k,k)^3/(-64)^k == (5/p) sum .../20^(3k) mod p^3"};
    s.prime_classes = classes(8, {1, 3});
    s.congruences.push_back(chain(3, {sum(central_cube, half, reciprocal(-64)),
                                      sum(central_c3k_c6k, full, reciprocal(20L * 20 * 20), constant(5))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ2.1iv", StatementKind::conjecture, "sum C(2k,k)^3/256^k == (-5/p) sum .../54000^k mod p^3"};
    s.prime_classes = classes(3, {1});
    s.congruences.push_back(chain(3, {sum(central_cube, half, reciprocal(256)),
                                      sum(central_c3k_c6k, full, reciprocal(54000), constant(-5))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ3.1", StatementKind::conjecture,
                    "sum D_n == (p/3) sum C(2k,k)^2C(3k,k)/(-27)^k mod p^3; A_n sums too for p = 1,17,19,23 mod 30"};
    s.congruences.push_back(chain(3, {sum(seq_D, full, one), sum_p3(central_sq_c3k, full, reciprocal(-27))}));
    s.congruences.push_back(restricted(
        chain(3, {sum(seq_A, full, one), sum(seq_A, full, reciprocal(64)), sum(central_sq_c3k, full, reciprocal(-27))}),
        classes(30, {1, 17, 19, 23})));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ3.2", StatementKind::conjecture, "sum A_n/(-8)^n == sum C(2k,k)^2C(3k,k)/216^k mod p^3"};
    s.prime_classes = classes(24, {1, 5, 7, 11});
    s.congruences.push_back(chain(3, {sum(seq_A, full, reciprocal(-8)), sum(central_sq_c3k, full, reciprocal(216))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ3.3", StatementKind::conjecture, "sum A_n/8^n == sum C(2k,k)^2C(3k,k)/8^k mod p^3"};
    s.prime_classes = classes(8, {1, 3});
    s.congruences.push_back(chain(3, {sum(seq_A, full, reciprocal(8)), sum(central_sq_c3k, full, reciprocal(8))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ3.4i", StatementKind::conjecture, "sum C(2k,k)^2C(3k,k)/1458^k == 0 mod p^3"};
    s.prime_classes = classes(3, {2});
    s.congruences.push_back(
        chain(3, {sum(central_sq_c3k, full, reciprocal(1458))}, CaseTable{{zero_row(classes(3, {2}))}}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ3.4ii", StatementKind::conjecture,
                    "sum A_n/4^n == sum A_n/(-32)^n == (p/3) sum C(2k,k)^2C(3k,k)/108^k mod p^3"};
    s.congruences.push_back(chain(3, {sum(seq_A, full, reciprocal(4)), sum(seq_A, full, reciprocal(-32)),
                                      sum_p3(central_sq_c3k, full, reciprocal(108))}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ3.4iii", StatementKind::conjecture,
                    "five sums agree mod p^3 for p = 1 mod 3 (A_n/(-2)^n, A_n/16^n, /108^k, /1458^k, C(2k,k)^3/16^k)"};
    s.prime_classes = classes(3, {1});
    s.congruences.push_back(chain(3, {sum(seq_A, full, reciprocal(-2)), sum(seq_A, full, reciprocal(16)),
                                      sum(central_sq_c3k, full, reciprocal(108)),
                                      sum(central_sq_c3k, full, reciprocal(1458)),
                                      sum(central_cube, full, reciprocal(16))}));
    r.push_back(std::move(s));
  }

  // --- conjectures mod p^2 with quadratic-form right-hand sides -------------
  {
    StatementSpec s{"R3.2", StatementKind::conjecture,
                    "(p/3) sum D_n == sum A_n == sum A_n/64^n mod p^2 via x^2+15y^2 / 3x^2+5y^2"};
    s.prime_above = 5;
    s.congruences.push_back(chain(
        2, {sum_p3(seq_D, full, one), sum(seq_A, full, one), sum(seq_A, full, reciprocal(64))},
        CaseTable{{row(classes(15, {1, 4}), four_x2_minus_2p, 1, 15), row(classes(15, {2, 8}), two_p_minus_12x2, 3, 5),
                   zero_row(classes(15, {7, 11, 13, 14}))}}));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"R3.3", StatementKind::conjecture, "sum A_n/(-8)^n mod p^2 via x^2+6y^2 / 2x^2+3y^2"};
    s.congruences.push_back(chain(2, {sum(seq_A, full, reciprocal(-8))}, x2_plus_6y2_full(eight_x2_minus_2p)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"R3.4", StatementKind::conjecture, "sum A_n/8^n mod p^2 via x^2+2y^2"};
    s.congruences.push_back(chain(2, {sum(seq_A, full, reciprocal(8))}, x2_plus_2y2(four_x2_minus_2p)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"R3.5", StatementKind::conjecture,
                    "C(2k,k)^3/16^k, /256^k and C(2k,k)^2C(4k,2k)/(-144)^k sums mod p^3; four A_n sums mod p^2"};
    s.congruences.push_back(restricted(
        chain(3, {sum(central_cube, full, reciprocal(16)), sum(central_cube, full, reciprocal(256), constant(-1)),
                  sum(central_sq_c4k, full, reciprocal(-144))}),
        classes(3, {1})));
    s.congruences.push_back(chain(2,
                                  {sum(seq_A, full, reciprocal(-2)), sum(seq_A, full, reciprocal(4)),
                                   sum(seq_A, full, reciprocal(16)), sum(seq_A, full, reciprocal(-32))},
                                  x2_plus_3y2_full()));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.1", StatementKind::conjecture, "sum C(2k,k)a_k/36^k mod p^2 via x^2+6y^2 / 2x^2+3y^2"};
    s.congruences.push_back(chain(2, {sum(central_times_a, full, reciprocal(36))}, x2_plus_6y2_full(two_p_minus_8x2)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.2", StatementKind::conjecture, "sum C(2k,k)a_k/100^k mod p^2 via x^2+2y^2"};
    s.prime_above = 5;
    s.congruences.push_back(chain(2, {sum(central_times_a, full, reciprocal(100))}, x2_plus_2y2(four_x2_minus_2p)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"R4.2", StatementKind::conjecture, "sum C(2k,k)^2C(4k,2k)/28^(4k) mod p^2 via x^2+2y^2"};
    s.excluded_primes = {7};
    s.congruences.push_back(
        chain(2, {sum(central_sq_c4k, full, reciprocal(28L * 28 * 28 * 28))}, x2_plus_2y2(four_x2_minus_2p)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.3", StatementKind::conjecture, "sum C(2k,k)a_k/(-12)^k mod p^2 via x^2+9y^2 (p or 2p)"};
    s.congruences.push_back(chain(2, {sum(central_times_a, full, reciprocal(-12))}, x2_plus_9y2_full()));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.4", StatementKind::conjecture, "sum b_n == sum b_n/81^n mod p^2 via x^2+2y^2"};
    s.congruences.push_back(
        chain(2, {sum(seq_b, full, one), sum(seq_b, full, reciprocal(81))}, x2_plus_2y2(four_x2_minus_2p)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.5", StatementKind::conjecture, "sum b_n/9^n mod p^2 via x^2+6y^2 / 2x^2+3y^2"};
    s.congruences.push_back(chain(2, {sum(seq_b, full, reciprocal(9))}, x2_plus_6y2_full(two_p_minus_8x2)));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.6", StatementKind::conjecture, "sum b_n/(-9)^n mod p^2 via x^2+3y^2"};
    s.congruences.push_back(chain(2, {sum(seq_b, full, reciprocal(-9))}, x2_plus_3y2_full()));
    r.push_back(std::move(s));
  }
  {
    StatementSpec s{"CJ4.7", StatementKind::conjecture,
                    "sum b_n/(-3)^n == sum b_n/(-27)^n mod p^2 via x^2+9y^2 (p or 2p)"};
    s.congruences.push_back(
        chain(2, {sum(seq_b, full, reciprocal(-3)), sum(seq_b, full, reciprocal(-27))}, x2_plus_9y2_full()));
    r.push_back(std::move(s));
  }
  return r;
}

}  // namespace

const std::vector<StatementSpec>& statement_registry() {
  static const std::vector<StatementSpec> registry = build_registry();
  return registry;
}

const StatementSpec* find_statement(std::string_view id) {
  for (const auto& s : statement_registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<std::string> statement_ids() {
  std::vector<std::string> ids;
  for (const auto& s : statement_registry()) ids.push_back(s.id);
  return ids;
}

std::vector<const StatementSpec*> select_statements(std::string_view name) {
  std::vector<const StatementSpec*> out;
  if (name == "all-theorems" || name == "all-conjectures") {
    const auto kind = name == "all-theorems" ? StatementKind::theorem : StatementKind::conjecture;
    for (const auto& s : statement_registry()) {
      if (s.kind == kind) out.push_back(&s);
    }
  } else if (const auto* s = find_statement(name)) {
    out.push_back(s);
  }
  return out;
}

}  // namespace supercong
