#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hfub/combinat.hpp"
#include "hfub/polynomial.hpp"

namespace hfub {

/// Finite sequence s_0, s_1, ..., s_{N-1}. Kept distinct from Polynomial: no
/// trimming, and the length is part of the value.
class RationalSeq {
 public:
  RationalSeq() = default;
  explicit RationalSeq(std::vector<Rational> terms) : terms_(std::move(terms)) {}
  RationalSeq(std::initializer_list<Rational> terms) : terms_(terms) {}

  std::size_t size() const { return terms_.size(); }
  const Rational& operator[](std::size_t i) const { return terms_.at(i); }
  const std::vector<Rational>& terms() const { return terms_; }

  friend bool operator==(const RationalSeq&, const RationalSeq&) = default;

 private:
  std::vector<Rational> terms_;
};

/// s*_n = sum_{k=0}^n C(n, k) (-1)^k s_k. An involution.
RationalSeq binomial_transform(const RationalSeq& s, const Tables& tables = shared_tables());

/// Coefficient-wise product.
Polynomial hadamard(const Polynomial& f, const Polynomial& g);

/// Hadamard product through the finite Euler transform:
///   (f . g)(x) = sum_v (-1)^v a*_v g^(v)(x) / v! x^v
/// where a* is the binomial transform of the coefficients of f.
Polynomial euler_hadamard(const Polynomial& f, const Polynomial& g,
                          const Tables& tables = shared_tables());

/// Fh_n(x) = sum_{v=1}^n (-1)^(v+1) F_n^(v)(x) / v! * x^v / v.
Polynomial hfubini_via_derivatives(int n, const Tables& tables = shared_tables());

}  // namespace hfub
