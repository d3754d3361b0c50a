#include "hfub/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hfub {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Rational> out(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string Polynomial::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial derivative(const Polynomial& f) {
  const auto& c = f.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& f) {
  const auto& c = f.coefficients();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(out));
}

Rational eval(const Polynomial& f, const Rational& x) {
  const auto& c = f.coefficients();
  Rational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational definite_integral(const Polynomial& f, const Rational& a, const Rational& b) {
  const Polynomial F = antiderivative(f);
  return eval(F, b) - eval(F, a);
}

Polynomial reflect_about(const Polynomial& f, const Rational& alpha) {
  const auto& c = f.coefficients();
  if (c.empty()) return {};
  const Rational shift = Rational(2) * alpha;
  // (shift - x)^i = sum_j C(i,j) shift^(i-j) (-x)^j, accumulated row by row.
  std::vector<Rational> out(c.size());
  std::vector<Rational> power{Rational(1)};  // coefficients of (shift - x)^i
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) {
      for (std::size_t j = 0; j < power.size(); ++j) out[j] += c[i] * power[j];
    }
    std::vector<Rational> next(power.size() + 1);
    for (std::size_t j = 0; j < power.size(); ++j) {
      next[j] += power[j] * shift;
      next[j + 1] -= power[j];
    }
    power = std::move(next);
  }
  return Polynomial(std::move(out));
}

bool in_semiring_P(const Polynomial& f) {
  return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                     [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

bool in_S_alpha(const Polynomial& f, const Rational& alpha) {
  if (f.is_zero()) return true;
  if (!in_semiring_P(f)) return false;
  const Polynomial reflected = reflect_about(f, alpha);
  return (*f.degree() % 2 == 0) ? reflected == f : reflected == -f;
}

}  // namespace hfub
