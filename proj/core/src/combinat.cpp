#include "hfub/combinat.hpp"

#include <stdexcept>
#include <string>

namespace hfub {

namespace {

void require_triangle_index(const char* what, int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument(std::string(what) + ": negative index");
  if (k > n) {
    throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  }
}

std::vector<BigInt> stirling2_row(std::size_t n, const std::vector<BigInt>* prev) {
  std::vector<BigInt> row(n + 1, BigInt(0));
  if (n == 0) {
    row[0] = 1;
    return row;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt v = (k < n) ? BigInt((*prev)[k] * static_cast<unsigned long>(k)) : BigInt(0);
    v += (*prev)[k - 1];
    row[k] = std::move(v);
  }
  return row;
}

std::vector<BigInt> sf_row_gen(std::size_t n, const std::vector<BigInt>* prev) {
  std::vector<BigInt> row(n + 1, BigInt(0));
  if (n == 0) {
    row[0] = 1;
    return row;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt v = (k < n) ? (*prev)[k] : BigInt(0);
    v += (*prev)[k - 1];
    v *= static_cast<unsigned long>(k);
    row[k] = std::move(v);
  }
  return row;
}

std::vector<BigInt> pascal_row(std::size_t n, const std::vector<BigInt>* prev) {
  std::vector<BigInt> row(n + 1, BigInt(1));
  for (std::size_t k = 1; k < n; ++k) row[k] = (*prev)[k - 1] + (*prev)[k];
  return row;
}

}  // namespace

Tables::Tables()
    : stirling2_(stirling2_row),
      sf_(sf_row_gen),
      binomial_(pascal_row),
      harmonic_([](std::size_t n, const std::vector<Rational>* prev) {
        if (n == 0) return std::vector<Rational>{Rational(0)};
        return std::vector<Rational>{(*prev)[0] + Rational(1, static_cast<long>(n))};
      }),
      bernoulli_([this](std::size_t n, const std::vector<Rational>*) {
        if (n == 0) return std::vector<Rational>{Rational(1)};
        const auto row = sf_.row(n);
        Rational sum;
        for (std::size_t v = 1; v <= n; ++v) {
          sum += Rational(row[v] * minus_one_pow(static_cast<long>(v)),
                          BigInt(static_cast<unsigned long>(v + 1)));
        }
        return std::vector<Rational>{sum};
      }) {}

BigInt Tables::stirling2(int n, int k) const {
  require_triangle_index("stirling2", n, k);
  return stirling2_.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

BigInt Tables::sf(int n, int k) const {
  require_triangle_index("sf", n, k);
  return sf_.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

std::vector<BigInt> Tables::sf_row(int n) const {
  if (n < 0) throw std::invalid_argument("sf_row: negative index");
  return sf_.row(static_cast<std::size_t>(n));
}

BigInt Tables::binomial(int n, int k) const {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative index");
  if (k > n) return 0;
  return binomial_.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

Rational Tables::harmonic(int n) const {
  if (n < 1) throw std::invalid_argument("harmonic: H_n requires n >= 1");
  return harmonic_.at(static_cast<std::size_t>(n), 0);
}

Rational Tables::bernoulli(int n) const {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  return bernoulli_.at(static_cast<std::size_t>(n), 0);
}

void Tables::overwrite_sf(int n, int k, const BigInt& value) {
  require_triangle_index("overwrite_sf", n, k);
  sf_.overwrite(static_cast<std::size_t>(n), static_cast<std::size_t>(k), value);
}

void Tables::overwrite_bernoulli(int n, const Rational& value) {
  if (n < 0) throw std::invalid_argument("overwrite_bernoulli: negative index");
  bernoulli_.overwrite(static_cast<std::size_t>(n), 0, value);
}

Tables& shared_tables() {
  static Tables tables;
  return tables;
}

BigInt stirling2(int n, int k) { return shared_tables().stirling2(n, k); }
BigInt sf(int n, int k) { return shared_tables().sf(n, k); }
Rational harmonic(int n) { return shared_tables().harmonic(n); }
BigInt binomial(int n, int k) { return shared_tables().binomial(n, k); }
Rational bernoulli(int n) { return shared_tables().bernoulli(n); }

Rational binomial_rat(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("binomial_rat: negative k");
  Rational out(1);
  for (int i = 0; i < k; ++i) {
    out *= x - Rational(i);
    out /= Rational(i + 1);
  }
  return out;
}

Polynomial binomial_poly(int k) {
  if (k < 0) throw std::invalid_argument("binomial_poly: negative k");
  Polynomial out = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) {
    out *= Polynomial{Rational(-i), Rational(1)};
    out *= Rational(1, i + 1);
  }
  return out;
}

Polynomial bernoulli_poly(int n, const Tables& tables) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: negative index");
  Polynomial b = Polynomial::constant(1);
  for (int m = 1; m <= n; ++m) {
    // B_m(x) = m * integral of B_{m-1} plus the constant B_m.
    b = antiderivative(b) * Rational(m) + Polynomial::constant(tables.bernoulli(m));
  }
  return b;
}

std::vector<Rational> bernoulli_akiyama_tanigawa(int max_n) {
  if (max_n < 0) throw std::invalid_argument("bernoulli_akiyama_tanigawa: negative bound");
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<std::size_t>(max_n) + 1);
  out.reserve(a.size());
  for (int m = 0; m <= max_n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  // The algorithm yields B_1 = +1/2.
  if (max_n >= 1) out[1] = -out[1];
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace hfub
