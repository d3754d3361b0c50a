#include "hfub/families.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace hfub {
namespace {

const Rational kMinusHalf(-1, 2);

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(c); }

TEST(Fubini, Direct) {
  EXPECT_EQ(fubini_direct(1), Polynomial::x());
  EXPECT_EQ(fubini_direct(2), P({0, 1, 2}));
  EXPECT_EQ(fubini_direct(3), P({0, 1, 6, 6}));
  EXPECT_THROW(fubini_direct(0), std::invalid_argument);
}

TEST(Fubini, RecurrenceMatchesDefinition) {
  EXPECT_EQ(fubini_rec(2), P({0, 1, 2}));
  for (int n = 1; n <= 64; ++n) {
    const Polynomial f = fubini_rec(n);
    EXPECT_EQ(f, fubini_direct(n)) << n;
    EXPECT_EQ(eval(f, -1), Rational(minus_one_pow(n)));
  }
  EXPECT_THROW(fubini_rec(0), std::invalid_argument);
}

TEST(HFubini, Direct) {
  EXPECT_EQ(hfubini_direct(1), Polynomial::x());
  EXPECT_EQ(hfubini_direct(2), P({0, 1, 3}));
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(eval(hfubini_direct(n), -1), Rational(minus_one_pow(n) * n));
  EXPECT_THROW(hfubini_direct(0), std::invalid_argument);
}

TEST(HFubini, RecurrenceMatchesDefinition) {
  EXPECT_EQ(hfubini_rec(2), P({0, 1, 3}));
  for (int n = 1; n <= 64; ++n) EXPECT_EQ(hfubini_rec(n), hfubini_direct(n)) << n;
  EXPECT_THROW(hfubini_rec(0), std::invalid_argument);
}

TEST(HFubini, FourthRowOfExpansionTable) {
  // Fh_4 = F_4 + 3x F_3 + 3(x^2+x) F_2 + (2x^3+3x^2+x) F_1, with F from the recurrence.
  const Polynomial expected = fubini_rec(4) + P({0, 3}) * fubini_rec(3) + P({0, 3, 3}) * fubini_rec(2) +
                              P({0, 1, 3, 2}) * fubini_rec(1);
  EXPECT_EQ(hfubini_rec(4), expected);
}

TEST(Lambda, TopEntries) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(lambda_poly(n, n), Polynomial::constant(1));
    if (n >= 2) EXPECT_EQ(lambda_poly(n, n - 1), Polynomial::monomial(1, n - 1));
  }
  EXPECT_EQ(lambda_poly(4, 1), P({0, 1, 3, 2}));
}

TEST(Lambda, OutOfRangeIsZero) {
  EXPECT_TRUE(lambda_poly(3, 0).is_zero());
  EXPECT_TRUE(lambda_poly(3, 4).is_zero());
  EXPECT_TRUE(lambda_poly(3, -2).is_zero());
  EXPECT_THROW(lambda_poly(0, 0), std::invalid_argument);
}

TEST(Lambda, ExpansionTable) {
  EXPECT_EQ(lambda_poly(1, 1), P({1}));
  EXPECT_EQ(lambda_poly(2, 1), P({0, 1}));
  EXPECT_EQ(lambda_poly(3, 2), P({0, 2}));
  EXPECT_EQ(lambda_poly(3, 1), P({0, 1, 1}));
  EXPECT_EQ(lambda_poly(4, 3), P({0, 3}));
  EXPECT_EQ(lambda_poly(4, 2), P({0, 3, 3}));
}

TEST(Lambda, ExpansionDegreeAndReflection) {
  for (int n = 1; n <= 40; ++n) {
    Polynomial sum;
    for (int v = 1; v <= n; ++v) {
      const Polynomial l = lambda_poly(n, v);
      sum += l * fubini_direct(v);
      EXPECT_TRUE(in_semiring_P(l));
      EXPECT_EQ(l.degree(), static_cast<std::size_t>(n - v));
      if (n >= 3 && v <= n - 2) EXPECT_TRUE(in_S_alpha(l, kMinusHalf)) << n << "," << v;
    }
    EXPECT_EQ(sum, hfubini_direct(n)) << n;
  }
}

TEST(Psi, Values) {
  EXPECT_TRUE(psi_poly(1).is_zero());
  EXPECT_EQ(psi_poly(2), P({0, 1, 5}));
  EXPECT_EQ(eval(psi_poly(2), kMinusHalf), Rational(3, 4));
  EXPECT_EQ(eval(psi_poly(3), kMinusHalf), Rational(0));
  for (int n = 1; n <= 41; n += 2) EXPECT_TRUE(eval(psi_poly(n), kMinusHalf).is_zero()) << n;
  EXPECT_THROW(psi_poly(0), std::invalid_argument);
}

TEST(Remainder, Values) {
  EXPECT_TRUE(remainder_R(2).is_zero());
  EXPECT_EQ(remainder_R(4), lambda_poly(4, 1) * fubini_direct(1) + lambda_poly(4, 2) * fubini_direct(2));
  EXPECT_EQ(eval(remainder_R(4), kMinusHalf), Rational(0));
  for (int n = 2; n <= 30; n += 2) EXPECT_TRUE(eval(remainder_R(n), kMinusHalf).is_zero());
  EXPECT_THROW(remainder_R(1), std::invalid_argument);
}

TEST(PowerSum, Polynomial) {
  EXPECT_EQ(power_sum_poly(0), Polynomial::x());
  EXPECT_EQ(power_sum_poly(1), P({0, Rational(-1, 2), Rational(1, 2)}));
  for (int n = 0; n <= 8; ++n) {
    const Polynomial s = power_sum_poly(n);
    EXPECT_EQ(s.degree(), static_cast<std::size_t>(n + 1));
    EXPECT_TRUE(s.coefficient(0).is_zero());
    for (int m = 0; m <= 10; ++m) EXPECT_EQ(eval(s, m), Rational(testing::brute_power_sum(n, m)));
  }
}

TEST(PowerSum, GregoryNewtonForm) {
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(power_sum_gn(n, 0).is_zero());
  EXPECT_EQ(power_sum_gn(2, 4), Rational(14));
  testing::Gen gen(17);
  for (int n = 0; n <= 12; ++n) {
    for (int i = 0; i < 20; ++i) {
      const Rational x = gen.rational();
      EXPECT_EQ(power_sum_gn(n, x), eval(power_sum_poly(n), x));
    }
  }
}

}  // namespace
}  // namespace hfub
