#include "hfub/families.hpp"

#include <stdexcept>
#include <string>

namespace hfub {

namespace {

void require_positive(const char* what, int n) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": requires n >= 1, got " + std::to_string(n));
}

const Polynomial& x_squared_plus_x() {
  static const Polynomial p{Rational(0), Rational(1), Rational(1)};
  return p;
}

std::vector<Polynomial> lambda_row_gen(std::size_t n, const std::vector<Polynomial>* prev) {
  std::vector<Polynomial> row(n + 1);
  if (n == 0) return row;
  if (n == 1) {
    row[1] = Polynomial::constant(1);
    return row;
  }
  const std::size_t m = n - 1;  // previous row index
  for (std::size_t nu = 1; nu <= n; ++nu) {
    Polynomial p;
    if (nu <= m) p += x_squared_plus_x() * derivative((*prev)[nu]);
    p += (*prev)[nu - 1];
    if (nu == m) p += Polynomial::x();
    row[nu] = std::move(p);
  }
  return row;
}

}  // namespace

LambdaTable::LambdaTable() : rows_(lambda_row_gen) {}

Polynomial LambdaTable::at(int n, int nu) const {
  require_positive("lambda_poly", n);
  if (nu < 1 || nu > n) return {};
  return rows_.at(static_cast<std::size_t>(n), static_cast<std::size_t>(nu));
}

std::vector<Polynomial> LambdaTable::row(int n) const {
  require_positive("lambda_row", n);
  return rows_.row(static_cast<std::size_t>(n));
}

void LambdaTable::overwrite(int n, int nu, const Polynomial& value) {
  require_positive("LambdaTable::overwrite", n);
  if (nu < 1 || nu > n) throw std::invalid_argument("LambdaTable::overwrite: nu out of range");
  rows_.overwrite(static_cast<std::size_t>(n), static_cast<std::size_t>(nu), value);
}

LambdaTable& shared_lambda_table() {
  static LambdaTable table;
  return table;
}

Polynomial fubini_direct(int n, const Tables& tables) {
  require_positive("fubini_direct", n);
  const auto row = tables.sf_row(n);
  std::vector<Rational> coeffs(row.size());
  for (std::size_t v = 1; v < row.size(); ++v) coeffs[v] = Rational(row[v]);
  return Polynomial(std::move(coeffs));
}

Polynomial fubini_rec(int n) {
  require_positive("fubini_rec", n);
  Polynomial f = Polynomial::x();
  for (int m = 1; m < n; ++m) f = x_squared_plus_x() * derivative(f) + Polynomial::x() * f;
  return f;
}

Polynomial hfubini_direct(int n, const Tables& tables) {
  require_positive("hfubini_direct", n);
  const auto row = tables.sf_row(n);
  std::vector<Rational> coeffs(row.size());
  for (int v = 1; v <= n; ++v) coeffs[v] = Rational(row[v]) * tables.harmonic(v);
  return Polynomial(std::move(coeffs));
}

Polynomial hfubini_rec(int n) {
  require_positive("hfubini_rec", n);
  Polynomial f = Polynomial::x();
  Polynomial fh = Polynomial::x();
  for (int m = 1; m < n; ++m) {
    Polynomial next_fh = x_squared_plus_x() * derivative(fh) + Polynomial::x() * fh + Polynomial::x() * f;
    f = x_squared_plus_x() * derivative(f) + Polynomial::x() * f;
    fh = std::move(next_fh);
  }
  return fh;
}

Polynomial lambda_poly(int n, int nu, const LambdaTable& lambdas) { return lambdas.at(n, nu); }

Polynomial psi_poly(int n, const Tables& tables) {
  require_positive("psi_poly", n);
  const auto row = tables.sf_row(n);
  std::vector<Rational> coeffs(row.size());
  for (int v = 1; v <= n; ++v) {
    coeffs[v] = Rational(row[v]) * (Rational(v - 1) * tables.harmonic(v) + Rational(n - 1));
  }
  return Polynomial(std::move(coeffs));
}

Polynomial remainder_R(int n, const Tables& tables, const LambdaTable& lambdas) {
  if (n < 2) throw std::invalid_argument("remainder_R: requires n >= 2, got " + std::to_string(n));
  Polynomial r;
  for (int v = 1; v <= n - 2; ++v) r += lambdas.at(n, v) * fubini_direct(v, tables);
  return r;
}

Polynomial power_sum_poly(int n, const Tables& tables) {
  if (n < 0) throw std::invalid_argument("power_sum_poly: negative n");
  Polynomial b = bernoulli_poly(n + 1, tables);
  b -= Polynomial::constant(tables.bernoulli(n + 1));
  return b * Rational(1, n + 1);
}

Rational power_sum_gn(int n, const Rational& x, const Tables& tables) {
  if (n < 0) throw std::invalid_argument("power_sum_gn: negative n");
  const auto row = tables.sf_row(n);
  Rational sum;
  for (int k = 0; k <= n; ++k) {
    if (row[k] == 0) continue;
    sum += Rational(row[k]) * binomial_rat(x, k + 1);
  }
  return sum;
}

}  // namespace hfub
