#pragma once

#include <vector>

#include "hfub/combinat.hpp"
#include "hfub/memo.hpp"
#include "hfub/polynomial.hpp"

namespace hfub {

/// Connection polynomials lambda(n, v) with  Fh_n = sum_v lambda(n, v) F_v.
///
/// lambda(1, 1) = 1, lambda(n, v) = 0 outside 1 <= v <= n, and
///   lambda(n+1, v) = (x^2 + x) lambda'(n, v) + lambda(n, v-1) + x [n == v].
/// Row n is derived from row n - 1 in one pass.
class LambdaTable {
 public:
  LambdaTable();
  LambdaTable(const LambdaTable&) = delete;
  LambdaTable& operator=(const LambdaTable&) = delete;

  /// Zero polynomial for v < 1 or v > n. Requires n >= 1.
  Polynomial at(int n, int nu) const;
  /// lambda(n, 0) .. lambda(n, n); entry 0 is the zero polynomial.
  std::vector<Polynomial> row(int n) const;

  /// Fault injection: replace a cached entry.
  void overwrite(int n, int nu, const Polynomial& value);

 private:
  MemoRows<Polynomial> rows_;
};

LambdaTable& shared_lambda_table();

/// F_n(x) = sum_{v=1}^n SF(n, v) x^v, n >= 1.
Polynomial fubini_direct(int n, const Tables& tables = shared_tables());
/// F_n from F_1 = x and F_{n+1} = (x^2 + x) F_n' + x F_n.
Polynomial fubini_rec(int n);
/// Fh_n(x) = sum_{v=1}^n SF(n, v) H_v x^v, n >= 1.
Polynomial hfubini_direct(int n, const Tables& tables = shared_tables());
/// Fh_n from Fh_1 = x and Fh_{n+1} = (x^2 + x) Fh_n' + x Fh_n + x F_n.
Polynomial hfubini_rec(int n);

Polynomial lambda_poly(int n, int nu, const LambdaTable& lambdas = shared_lambda_table());

/// psi_n(x) = sum_v SF(n, v) ((v - 1) H_v + (n - 1)) x^v, n >= 1.
Polynomial psi_poly(int n, const Tables& tables = shared_tables());

/// R_n(x) = sum_{v=1}^{n-2} lambda(n, v) F_v(x), n >= 2.
Polynomial remainder_R(int n, const Tables& tables = shared_tables(),
                       const LambdaTable& lambdas = shared_lambda_table());

/// S_n(x) = (B_{n+1}(x) - B_{n+1}) / (n + 1), so S_n(m) = sum_{v<m} v^n.
Polynomial power_sum_poly(int n, const Tables& tables = shared_tables());
/// S_n(x) = sum_{k=0}^n SF(n, k) C(x, k+1), evaluated at x.
Rational power_sum_gn(int n, const Rational& x, const Tables& tables = shared_tables());

}  // namespace hfub
