#include "hfub/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hfub {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  // Denominator carries no sign of its own.
  if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace hfub
