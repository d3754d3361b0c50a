#pragma once

#include <vector>

#include "hfub/memo.hpp"
#include "hfub/polynomial.hpp"
#include "hfub/rational.hpp"

namespace hfub {

/// Memoized combinatorial tables. Each triangle grows row by row on demand
/// and is safe to share between threads.
///
/// Bernoulli numbers follow the convention of z/(e^z - 1), so B_1 = -1/2.
class Tables {
 public:
  Tables();
  Tables(const Tables&) = delete;
  Tables& operator=(const Tables&) = delete;

  /// Stirling numbers of the second kind, from
  /// S2(n+1, k) = k S2(n, k) + S2(n, k-1). Requires 0 <= k <= n.
  BigInt stirling2(int n, int k) const;
  /// SF(n, k) = k! S2(n, k), from SF(n+1, k) = k (SF(n, k) + SF(n, k-1)).
  /// Computed independently of stirling2. Requires 0 <= k <= n.
  BigInt sf(int n, int k) const;
  std::vector<BigInt> sf_row(int n) const;
  /// Pascal triangle; 0 when k > n.
  BigInt binomial(int n, int k) const;
  /// H_n for n >= 1.
  Rational harmonic(int n) const;
  /// B_n via Worpitzky: B_n = sum_{v=1}^n SF(n, v) (-1)^v / (v + 1), B_0 = 1.
  Rational bernoulli(int n) const;

  /// Fault injection: replace a cached value.
  void overwrite_sf(int n, int k, const BigInt& value);
  void overwrite_bernoulli(int n, const Rational& value);

 private:
  MemoRows<BigInt> stirling2_;
  MemoRows<BigInt> sf_;
  MemoRows<BigInt> binomial_;
  MemoRows<Rational> harmonic_;   // row n holds the single value H_n (row 0 unused)
  MemoRows<Rational> bernoulli_;  // row n holds the single value B_n
};

/// Process-wide tables used by the free functions below.
Tables& shared_tables();

BigInt stirling2(int n, int k);
BigInt sf(int n, int k);
Rational harmonic(int n);
BigInt binomial(int n, int k);
Rational bernoulli(int n);

/// Generalized binomial x (x-1) ... (x-k+1) / k!.
Rational binomial_rat(const Rational& x, int k);
/// C(x, k) as a polynomial in x.
Polynomial binomial_poly(int k);

/// Bernoulli polynomial B_n(x): B_0 = 1, B_n' = n B_{n-1}, B_n(0) = B_n.
Polynomial bernoulli_poly(int n, const Tables& tables = shared_tables());

/// B_0 .. B_max_n by the Akiyama-Tanigawa algorithm, sign-adjusted to B_1 = -1/2.
/// Shares no code with the Worpitzky route and serves as its oracle.
std::vector<Rational> bernoulli_akiyama_tanigawa(int max_n);

BigInt factorial(int n);

}  // namespace hfub
