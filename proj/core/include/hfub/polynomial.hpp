#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hfub/rational.hpp"

namespace hfub {

/// Dense univariate polynomial over Rational. Coefficient i multiplies x^i.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c);
  /// c * x^power
  static Polynomial monomial(std::size_t power, const Rational& c = Rational(1));
  /// The identity polynomial x.
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  /// Coefficient of x^i; zero past the stored range.
  Rational coefficient(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "[c0, c1, ...]" with constant term first.
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial derivative(const Polynomial& f);
/// Antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& f);
/// Horner evaluation.
Rational eval(const Polynomial& f, const Rational& x);
/// Exact value of the integral of f over [a, b].
Rational definite_integral(const Polynomial& f, const Rational& a, const Rational& b);

/// g(x) = f(2*alpha - x), expanded exactly.
Polynomial reflect_about(const Polynomial& f, const Rational& alpha);

/// True iff every coefficient is a nonnegative integer (the zero polynomial
/// qualifies).
bool in_semiring_P(const Polynomial& f);

/// Membership in the reflection class around alpha: f = 0, or f has
/// nonnegative integer coefficients and f(2*alpha - x) = (-1)^deg f * f(x)
/// holds coefficient for coefficient.
bool in_S_alpha(const Polynomial& f, const Rational& alpha);

}  // namespace hfub
