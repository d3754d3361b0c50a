#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hfub {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p/q" or "p" (optional leading sign on p). Decimal and
  /// exponent forms are rejected. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or the bare integer when q = 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_{0};
};

/// Integer power with a nonnegative exponent. pow(0, 0) = 1.
Rational pow(const Rational& base, unsigned exponent);

/// (-1)^k as an integer.
inline int minus_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace hfub
