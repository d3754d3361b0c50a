#include "hfub/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfub/families.hpp"

namespace hfub {

RationalSeq binomial_transform(const RationalSeq& s, const Tables& tables) {
  const int len = static_cast<int>(s.size());
  std::vector<Rational> out(s.size());
  for (int n = 0; n < len; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) {
      if (s[k].is_zero()) continue;
      acc += Rational(BigInt(tables.binomial(n, k) * minus_one_pow(k))) * s[k];
    }
    out[n] = std::move(acc);
  }
  return RationalSeq(std::move(out));
}

Polynomial hadamard(const Polynomial& f, const Polynomial& g) {
  const std::size_t len = std::min(f.size(), g.size());
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = f.coefficients()[i] * g.coefficients()[i];
  return Polynomial(std::move(out));
}

Polynomial euler_hadamard(const Polynomial& f, const Polynomial& g, const Tables& tables) {
  if (f.is_zero() || g.is_zero()) return {};
  const std::size_t top = *g.degree();
  std::vector<Rational> a(top + 1);
  for (std::size_t i = 0; i <= top; ++i) a[i] = f.coefficient(i);
  const RationalSeq a_star = binomial_transform(RationalSeq(std::move(a)), tables);

  Polynomial sum;
  Polynomial g_deriv = g;  // g^(v)
  BigInt v_factorial = 1;
  for (std::size_t v = 0; v <= top; ++v) {
    if (v > 0) {
      g_deriv = derivative(g_deriv);
      v_factorial *= static_cast<unsigned long>(v);
    }
    if (a_star[v].is_zero()) continue;
    const Rational scale = Rational(minus_one_pow(static_cast<long>(v))) * a_star[v] / Rational(v_factorial);
    sum += Polynomial::monomial(v, scale) * g_deriv;
  }
  return sum;
}

Polynomial hfubini_via_derivatives(int n, const Tables& tables) {
  if (n < 1) throw std::invalid_argument("hfubini_via_derivatives: requires n >= 1");
  const Polynomial f = fubini_direct(n, tables);
  Polynomial sum;
  Polynomial f_deriv = f;
  BigInt v_factorial = 1;
  for (int v = 1; v <= n; ++v) {
    f_deriv = derivative(f_deriv);
    v_factorial *= static_cast<unsigned long>(v);
    // (-1)^(v+1) / v! applied to F_n^(v), and x^v / v on the monomial.
    const Rational scale = Rational(minus_one_pow(v + 1)) / Rational(v_factorial);
    sum += Polynomial::monomial(static_cast<std::size_t>(v), Rational(1, v)) * (f_deriv * scale);
  }
  return sum;
}

}  // namespace hfub
