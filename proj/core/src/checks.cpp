#include <array>
#include <random>

#include "hfub/transforms.hpp"
#include "hfub/verify.hpp"

namespace hfub::verify {

namespace {

using Outcome = std::optional<Mismatch>;

const Rational kMinusHalf(-1, 2);

Outcome expect_eq(const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Mismatch{lhs.str(), rhs.str()};
}

Outcome expect_eq(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Mismatch{lhs.str(), rhs.str()};
}

Outcome expect(bool ok, std::string lhs, std::string rhs) {
  if (ok) return std::nullopt;
  return Mismatch{std::move(lhs), std::move(rhs)};
}

std::string lambda_name(int n, int nu) {
  return "lambda(" + std::to_string(n) + "," + std::to_string(nu) + ")";
}

/// Per-case generator: the stream depends only on (seed, n).
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, int n) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n)};
    engine_.seed(seq);
  }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here and
  /// keeps the stream identical across standard libraries.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_abs_num, long max_den) {
    return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
  }

  Polynomial polynomial(int max_degree) {
    const int degree = static_cast<int>(uniform(-1, max_degree));  // -1 gives the zero polynomial
    std::vector<Rational> coeffs;
    for (int i = 0; i <= degree; ++i) coeffs.push_back(rational(20, 9));
    return Polynomial(std::move(coeffs));
  }

 private:
  std::mt19937_64 engine_;
};

/// Random member of the reflection class around alpha = -m/2, built from
/// q = x^2 + m x (even) and l = 2x + m or x + m/2 (odd).
Polynomial random_reflection_member(CaseRng& rng, int m, bool odd) {
  const Polynomial q{Rational(0), Rational(m), Rational(1)};
  const Polynomial l = (m % 2 == 0) ? Polynomial{Rational(m / 2), Rational(1)} : Polynomial{Rational(m), Rational(2)};
  const int top = static_cast<int>(rng.uniform(0, 4));
  Polynomial even;
  Polynomial q_power = Polynomial::constant(1);
  for (int i = 0; i <= top; ++i) {
    const long c = (i == top) ? rng.uniform(1, 3) : rng.uniform(0, 3);
    even += q_power * Rational(c);
    q_power *= q;
  }
  return odd ? l * even : even;
}

Outcome semiring_case(const CheckContext& ctx, int n) {
  CaseRng rng(ctx.seed, n);
  const int m = static_cast<int>(rng.uniform(0, 3));
  const Rational alpha(-m, 2);
  const bool f_odd = rng.uniform(0, 1) == 1;
  const Polynomial f = random_reflection_member(rng, m, f_odd);
  const Polynomial g = random_reflection_member(rng, m, rng.uniform(0, 1) == 1);
  const Polynomial same_parity = random_reflection_member(rng, m, f_odd);
  const std::string where = " (alpha=" + alpha.str() + ", f=" + f.str() + ", g=" + g.str() + ")";

  for (const auto& [name, p] : std::array<std::pair<const char*, Polynomial>, 5>{{
           {"f", f},
           {"g", g},
           {"f*g", f * g},
           {"f+h", f + same_parity},
           {"f'", derivative(f)},
       }}) {
    if (!in_S_alpha(p, alpha)) return Mismatch{std::string(name) + " = " + p.str() + " not in S_alpha" + where, "member"};
    if (p.degree() && *p.degree() % 2 == 1) {
      const Rational at_alpha = eval(p, alpha);
      if (!at_alpha.is_zero()) return Mismatch{std::string(name) + "(alpha) = " + at_alpha.str() + where, "0"};
    }
  }
  return std::nullopt;
}

Registry make_builtin() {
  Registry r;
  const auto all = Applicability::at_least(1);

  r.add({"fs-at-minus-one", "F_n(-1) = (-1)^n", all, false, [](const CheckContext& c, int n) {
           return expect_eq(eval(fubini_direct(n, c.tables), -1), Rational(minus_one_pow(n)));
         }});
  r.add({"fh-at-minus-one", "Fh_n(-1) = (-1)^n n", all, false, [](const CheckContext& c, int n) {
           return expect_eq(eval(hfubini_direct(n, c.tables), -1), Rational(minus_one_pow(n) * n));
         }});
  r.add({"fs-recurrence", "F_{n} from (x^2+x) F_{n-1}' + x F_{n-1} equals the SF-sum definition", all, false,
         [](const CheckContext& c, int n) { return expect_eq(fubini_rec(n), fubini_direct(n, c.tables)); }});
  r.add({"fh-recurrence", "Fh_{n} from (x^2+x) Fh_{n-1}' + x Fh_{n-1} + x F_{n-1} equals the definition", all,
         false,
         [](const CheckContext& c, int n) { return expect_eq(hfubini_rec(n), hfubini_direct(n, c.tables)); }});
  r.add({"worpitzky-integral", "integral of F_n over [-1,0] = B_n", all, false,
         [](const CheckContext& c, int n) {
           return expect_eq(definite_integral(fubini_direct(n, c.tables), -1, 0), c.tables.bernoulli(n));
         }});
  r.add({"fs-central-value", "F_n(-1/2) = -2 (2^(n+1) - 1) B_(n+1) / (n+1)", all, false,
         [](const CheckContext& c, int n) {
           const Rational rhs = Rational(-2) * (pow(Rational(2), static_cast<unsigned>(n + 1)) - 1) *
                                c.tables.bernoulli(n + 1) / Rational(n + 1);
           return expect_eq(eval(fubini_direct(n, c.tables), kMinusHalf), rhs);
         }});
  r.add({"thm-main-integral", "integral of Fh_n over [-1,0] = -(n/2) B_(n-1)", all, false,
         [](const CheckContext& c, int n) {
           return expect_eq(definite_integral(hfubini_direct(n, c.tables), -1, 0),
                            Rational(-n, 2) * c.tables.bernoulli(n - 1));
         }});
  r.add({"thm-main-central", "Fh_n(-1/2) = -((n-1)/2) F_(n-1)(-1/2) for even n", Applicability::at_least(2, Parity::even),
         false, [](const CheckContext& c, int n) {
           return expect_eq(eval(hfubini_direct(n, c.tables), kMinusHalf),
                            Rational(-(n - 1), 2) * eval(fubini_direct(n - 1, c.tables), kMinusHalf));
         }});
  r.add({"cor-psi-odd", "psi_n(-1/2) = 0 for odd n", Applicability::at_least(1, Parity::odd), false,
         [](const CheckContext& c, int n) { return expect_eq(eval(psi_poly(n, c.tables), kMinusHalf), 0); }});
  r.add({"lambda-expansion", "Fh_n = sum_v lambda(n,v) F_v", all, false, [](const CheckContext& c, int n) {
           Polynomial sum;
           for (int v = 1; v <= n; ++v) sum += c.lambdas.at(n, v) * fubini_direct(v, c.tables);
           return expect_eq(sum, hfubini_direct(n, c.tables));
         }});
  r.add({"lambda-degree-P", "deg lambda(n,v) = n - v with nonnegative integer coefficients", all, false,
         [](const CheckContext& c, int n) -> Outcome {
           for (int v = 1; v <= n; ++v) {
             const Polynomial p = c.lambdas.at(n, v);
             if (!in_semiring_P(p)) return Mismatch{lambda_name(n, v) + " = " + p.str(), "nonnegative integer coefficients"};
             const auto d = p.degree();
             if (!d || static_cast<int>(*d) != n - v) {
               return Mismatch{"deg " + lambda_name(n, v) + " = " + (d ? std::to_string(*d) : "none"),
                               std::to_string(n - v)};
             }
           }
           return std::nullopt;
         }});
  r.add({"lambda-top", "lambda(n,n) = 1 and lambda(n,n-1) = (n-1) x", all, false,
         [](const CheckContext& c, int n) -> Outcome {
           if (auto m = expect_eq(c.lambdas.at(n, n), Polynomial::constant(1))) return m;
           if (n >= 2) return expect_eq(c.lambdas.at(n, n - 1), Polynomial::monomial(1, n - 1));
           return std::nullopt;
         }});
  r.add({"lambda-reflection", "lambda(n,v) in S_(-1/2) for n >= 3, 1 <= v <= n-2", Applicability::at_least(3), false,
         [](const CheckContext& c, int n) -> Outcome {
           for (int v = 1; v <= n - 2; ++v) {
             const Polynomial p = c.lambdas.at(n, v);
             if (!in_S_alpha(p, kMinusHalf)) {
               return Mismatch{lambda_name(n, v) + " = " + p.str(), "reflection-symmetric about -1/2"};
             }
           }
           return std::nullopt;
         }});
  r.add({"semiring-closure",
         "S_alpha closed under product, same-parity sum and derivative; odd members vanish at alpha "
         "(one seeded case per n)",
         all, true, semiring_case});
  r.add({"table-fh-fs", "lambda rows n <= 4 match the published expansion table", Applicability::between(1, 4), false,
         [](const CheckContext& c, int n) -> Outcome {
           // Row n lists lambda(n, n), lambda(n, n-1), ..., lambda(n, 1).
           static const std::array<std::vector<Polynomial>, 4> golden{{
               {Polynomial{1}},
               {Polynomial{1}, Polynomial{0, 1}},
               {Polynomial{1}, Polynomial{0, 2}, Polynomial{0, 1, 1}},
               {Polynomial{1}, Polynomial{0, 3}, Polynomial{0, 3, 3}, Polynomial{0, 1, 3, 2}},
           }};
           const auto& row = golden[static_cast<std::size_t>(n - 1)];
           for (int i = 0; i < n; ++i) {
             const int v = n - i;
             const Polynomial got = c.lambdas.at(n, v);
             if (got != row[static_cast<std::size_t>(i)]) {
               return Mismatch{lambda_name(n, v) + " = " + got.str(), row[static_cast<std::size_t>(i)].str()};
             }
           }
           return std::nullopt;
         }});
  r.add({"remainder-vanishes", "R_n(-1/2) = 0 for even n", Applicability::at_least(2, Parity::even), false,
         [](const CheckContext& c, int n) {
           return expect_eq(eval(remainder_R(n, c.tables, c.lambdas), kMinusHalf), 0);
         }});
  r.add({"drv-fh-bn", "sum_v SF(n,v) H_v (-1)^v / (v+1) = -(n/2) B_(n-1)", all, false,
         [](const CheckContext& c, int n) {
           const auto row = c.tables.sf_row(n);
           Rational sum;
           for (int v = 1; v <= n; ++v) {
             sum += Rational(BigInt(row[v] * minus_one_pow(v))) * c.tables.harmonic(v) / Rational(v + 1);
           }
           return expect_eq(sum, Rational(-n, 2) * c.tables.bernoulli(n - 1));
         }});
  r.add({"gregory-newton", "x^n = sum_k SF(n,k) C(x,k) as polynomials", Applicability::at_least(0), false,
         [](const CheckContext& c, int n) {
           const auto row = c.tables.sf_row(n);
           Polynomial sum;
           Polynomial choose = Polynomial::constant(1);  // C(x, k)
           for (int k = 0; k <= n; ++k) {
             if (k > 0) choose = choose * Polynomial{Rational(-(k - 1)), Rational(1)} * Rational(1, k);
             sum += choose * Rational(row[k]);
           }
           return expect_eq(sum, Polynomial::monomial(static_cast<std::size_t>(n)));
         }});
  r.add({"power-sum-agree",
         "Bernoulli-polynomial and Gregory-Newton power sums agree with each other and with direct "
         "summation at m <= 10, plus 20 seeded rational points",
         Applicability::at_least(0), true, [](const CheckContext& c, int n) -> Outcome {
           const Polynomial s = power_sum_poly(n, c.tables);
           BigInt direct = 0;
           for (int m = 0; m <= 10; ++m) {
             if (m > 0) {
               BigInt term;
               mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(n));
               direct += term;
             }
             if (auto mm = expect_eq(eval(s, m), Rational(direct))) return mm;
             if (auto mm = expect_eq(power_sum_gn(n, m, c.tables), Rational(direct))) return mm;
           }
           CaseRng rng(c.seed, n);
           for (int i = 0; i < 20; ++i) {
             const Rational x = rng.rational(50, 12);
             if (auto mm = expect_eq(eval(s, x), power_sum_gn(n, x, c.tables))) return mm;
           }
           return std::nullopt;
         }});
  r.add({"bt-involution", "binomial transform applied twice is the identity (one seeded sequence per n)", all,
         true, [](const CheckContext& c, int n) {
           CaseRng rng(c.seed, n);
           std::vector<Rational> terms(static_cast<std::size_t>(rng.uniform(1, 32)));
           for (auto& t : terms) t = rng.rational(1000, 60);
           const RationalSeq s(std::move(terms));
           const RationalSeq back = binomial_transform(binomial_transform(s, c.tables), c.tables);
           return expect(back == s, "s** differs from s (length " + std::to_string(s.size()) + ")", "s");
         }});
  r.add({"bt-harmonic", "sum_{k=1}^n C(n,k) (-1)^k H_k = -1/n", all, false, [](const CheckContext& c, int n) {
           std::vector<Rational> terms{Rational(0)};
           for (int k = 1; k <= n; ++k) terms.push_back(c.tables.harmonic(k));
           const RationalSeq t = binomial_transform(RationalSeq(std::move(terms)), c.tables);
           return expect_eq(t[static_cast<std::size_t>(n)], Rational(-1, n));
         }});
  r.add({"euler-hadamard", "Euler-transform form of the Hadamard product equals the coefficient-wise product "
         "(one seeded pair, degree <= 12, per n)",
         all, true, [](const CheckContext& c, int n) -> Outcome {
           CaseRng rng(c.seed, n);
           const Polynomial f = rng.polynomial(12);
           const Polynomial g = rng.polynomial(12);
           const Polynomial lhs = euler_hadamard(f, g, c.tables);
           const Polynomial rhs = hadamard(f, g);
           if (lhs == rhs) return std::nullopt;
           return Mismatch{lhs.str() + " (f=" + f.str() + ", g=" + g.str() + ")", rhs.str()};
         }});
  r.add({"fh-derivative-form", "Fh_n = sum_v (-1)^(v+1) F_n^(v) / v! * x^v / v", all, false,
         [](const CheckContext& c, int n) {
           return expect_eq(hfubini_via_derivatives(n, c.tables), hfubini_direct(n, c.tables));
         }});
  r.add({"fubini-numbers", "F_n(1) equals the enumerated count of ordered set partitions", Applicability::between(1, 8), false,
         [](const CheckContext& c, int n) {
           const auto count = count_ordered_partitions_brute_force(n);
           return expect_eq(eval(fubini_direct(n, c.tables), 1), Rational(BigInt(static_cast<unsigned long>(count))));
         }});
  return r;
}

}  // namespace

const Registry& builtin_registry() {
  static const Registry registry = make_builtin();
  return registry;
}

}  // namespace hfub::verify
