#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordan/core.hpp"
#include "jordan/report.hpp"

namespace jordan::identities {

// One exact summation identity instance; skipped marks a Pochhammer pole in
// the denominator parameter.
struct IdentityCase {
  std::string label;
  Rational lhs, rhs;
  bool pass = false;
  bool skipped = false;
};

// f(k) = sum_{n=1}^{k} (-1)^n (1/2)_n / n! binom(k-1, n-1)
//      = -(1/2^{2k-1}) (2k-2)!/(k!(k-1)!).
IdentityCase coshinv_coefficient_identity(int k);
Rational coshinv_coefficient_sum(int k);

// f_n(s) = sum_{k=1}^{s-1} t_k t_{s-k} k^n with closed forms for n = 0,1,2.
IdentityCase catalan_convolution_identity(int s, int n);
Rational catalan_convolution_sum(int s, int n);

// Indefinite hypergeometric summation: with
//   g(l) = ((a)_l (b)_l / ((l+1)! (c)_l)) ((c-a-b) l + c - 1 - a b),
//   sum_{l=0}^{n} g(l) = c - 1 - (a)_{n+1} (b)_{n+1} / ((n+1)! (c)_n).
// A vanishing (c)_l for some l <= n is a pole: the case is skipped.
IdentityCase hypergeometric_sum_identity(const Rational& a, const Rational& b, const Rational& c, int n);

std::vector<IdentityCase> hypergeometric_random_cases(std::uint64_t seed, int cases, int max_n);

// The parameter substitution a = 1-k-2m1, b = 1+2m2, c = 2-k+2m2 that turns
// the identity into the b-coefficient partial-sum identity.
std::vector<IdentityCase> hypergeometric_label_cases(std::uint64_t seed, int cases);

// Recurrences certifying the closed forms, checked against the direct sums:
//   2(k+1) f(k+1) = (2k-1) f(k)                      with f(1) = -1/2
//   4(s-1) f_0(s) - (s+1) f_0(s+1) + 2(2s-2)!/(s!(s-1)!) = 0
//   4(s-1) f_1(s) -     s f_1(s+1) +  (2s-2)!/(s-1)!^2   = 0
//   4      f_2(s) -       f_2(s+1) +  (2s-2)!/(s!(s-2)!) = 0,  f_n(2) = 1
CheckReport verify_recurrences(int max_index);

}  // namespace jordan::identities
