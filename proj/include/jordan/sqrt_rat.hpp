#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>

#include "jordan/rational.hpp"

namespace jordan {

// Finite Q-linear combination sum_r q_r * sqrt(r) over distinct squarefree
// positive integer radicands r. The radicand 1 carries the rational part.
// Closed under + and *: sqrt(r)*sqrt(s) reduces via gcd(r,s), which keeps
// every stored radicand squarefree without factoring products.
class SqrtRat {
 public:
  SqrtRat() = default;
  SqrtRat(int n) : SqrtRat(Rational(n)) {}
  SqrtRat(const Rational& q) {
    if (q != 0) terms_.emplace(Int(1), q);
  }

  // Single term coeff * sqrt(radicand); the radicand must be squarefree.
  static SqrtRat radical_term(const Rational& coeff, const Int& radicand);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Int, Rational>& terms() const { return terms_; }

  // Exact inverse, implemented for single-term values only.
  SqrtRat inverse() const;

  SqrtRat& operator+=(const SqrtRat& o);
  SqrtRat& operator-=(const SqrtRat& o);
  SqrtRat& operator*=(const SqrtRat& o) { return *this = *this * o; }

  friend SqrtRat operator+(SqrtRat a, const SqrtRat& b) { return a += b; }
  friend SqrtRat operator-(SqrtRat a, const SqrtRat& b) { return a -= b; }
  friend SqrtRat operator-(const SqrtRat& a);
  friend SqrtRat operator*(const SqrtRat& a, const SqrtRat& b);
  friend bool operator==(const SqrtRat& a, const SqrtRat& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Int, Rational> terms_;

  void add_term(const Int& r, const Rational& q);
};

// Canonical square root of a rational q >= 0 (single-term result).
SqrtRat sqrt_rat(const Rational& q);

}  // namespace jordan
