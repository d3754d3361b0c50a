#include "hfub/combinat.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "oracles.hpp"

namespace hfub {
namespace {

TEST(Stirling2, Values) {
  EXPECT_EQ(stirling2(1, 1), 1);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(5, 0), 0);
  EXPECT_THROW(stirling2(2, 3), std::invalid_argument);
  EXPECT_THROW(stirling2(-1, 0), std::invalid_argument);
}

TEST(Stirling2, MatchesSetPartitionEnumeration) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling2(n, k), BigInt(static_cast<unsigned long>(testing::enumerate_set_partitions(n, k))))
          << n << "," << k;
    }
  }
  EXPECT_EQ(testing::enumerate_set_partitions(4, 2), 7u);
}

TEST(SF, Values) {
  EXPECT_EQ(sf(4, 2), 14);
  EXPECT_EQ(sf(3, 0), 0);
  EXPECT_EQ(sf(0, 0), 1);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(sf(n, n), factorial(n));
  EXPECT_THROW(sf(3, 4), std::invalid_argument);
}

TEST(SF, EqualsFactorialTimesStirling) {
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(sf(n, k), factorial(k) * stirling2(n, k));
  }
}

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(1), Rational(1));
  EXPECT_EQ(harmonic(2), Rational(3, 2));
  EXPECT_EQ(harmonic(4), Rational(25, 12));
  EXPECT_THROW(harmonic(0), std::invalid_argument);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(binomial(n, 0), 1);
}

TEST(BinomialRat, Values) {
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(binomial_rat(-1, k), Rational(minus_one_pow(k)));
  EXPECT_EQ(binomial_rat(Rational(7, 3), 0), Rational(1));
  EXPECT_EQ(binomial_rat(Rational(1, 2), 2), Rational(-1, 8));
  for (int m = 0; m <= 15; ++m) {
    for (int k = 0; k <= 18; ++k) EXPECT_EQ(binomial_rat(m, k), Rational(binomial(m, k)));
  }
}

TEST(BinomialPoly, AgreesWithBinomialRat) {
  testing::Gen gen(9);
  for (int k = 0; k <= 10; ++k) {
    const Rational x = gen.rational();
    EXPECT_EQ(eval(binomial_poly(k), x), binomial_rat(x, k));
  }
}

TEST(Bernoulli, Values) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), Rational(0));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, WorpitzkyAgreesWithBothOracles) {
  const auto at = bernoulli_akiyama_tanigawa(80);
  const auto rec = testing::bernoulli_by_recurrence(80);
  for (int n = 0; n <= 80; ++n) {
    EXPECT_EQ(bernoulli(n), at[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(at[static_cast<std::size_t>(n)], rec[static_cast<std::size_t>(n)]) << n;
  }
  EXPECT_EQ(at[12], Rational(-691, 2730));
}

TEST(Bernoulli, OddValuesVanish) {
  for (int k = 1; 2 * k + 1 <= 101; ++k) EXPECT_TRUE(bernoulli(2 * k + 1).is_zero());
}

TEST(BernoulliPoly, Values) {
  EXPECT_EQ(bernoulli_poly(0), Polynomial::constant(1));
  EXPECT_EQ(bernoulli_poly(1), Polynomial({Rational(-1, 2), 1}));
  EXPECT_EQ(bernoulli_poly(2), Polynomial({Rational(1, 6), -1, 1}));
}

TEST(BernoulliPoly, DerivativeAndConstantTerm) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(derivative(bernoulli_poly(n)), bernoulli_poly(n - 1) * Rational(n));
    EXPECT_EQ(eval(bernoulli_poly(n), 0), bernoulli(n));
  }
}

TEST(GregoryNewton, MonomialExpansion) {
  for (int n = 0; n <= 12; ++n) {
    Polynomial sum;
    for (int k = 0; k <= n; ++k) sum += binomial_poly(k) * Rational(sf(n, k));
    EXPECT_EQ(sum, Polynomial::monomial(static_cast<std::size_t>(n))) << n;
  }
}

TEST(Tables, IndependentInstancesAndOverwrite) {
  Tables t;
  EXPECT_EQ(t.sf(4, 2), 14);
  t.overwrite_sf(4, 2, 15);
  EXPECT_EQ(t.sf(4, 2), 15);
  EXPECT_EQ(sf(4, 2), 14);
  t.overwrite_bernoulli(6, Rational(0));
  EXPECT_EQ(t.bernoulli(6), Rational(0));
  EXPECT_EQ(bernoulli(6), Rational(1, 42));
}

TEST(Tables, ConcurrentExtensionIsConsistent) {
  Tables t;
  std::vector<std::vector<BigInt>> seen(4);
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < 4; ++w) {
      workers.emplace_back([&, w] {
        for (int n = (w * 7) % 40; n <= 90; n += 3) seen[static_cast<std::size_t>(w)].push_back(t.sf(n, n / 2));
        (void)t.bernoulli(70);
      });
    }
  }
  Tables reference;
  for (int w = 0; w < 4; ++w) {
    std::size_t i = 0;
    for (int n = (w * 7) % 40; n <= 90; n += 3) EXPECT_EQ(seen[static_cast<std::size_t>(w)][i++], reference.sf(n, n / 2));
  }
  EXPECT_EQ(t.bernoulli(70), reference.bernoulli(70));
}

}  // namespace
}  // namespace hfub
