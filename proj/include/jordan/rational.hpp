#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace jordan {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

Int factorial(long n);

// Binomial coefficient; 0 outside the triangle.
Int binomial(long n, long k);

// Rising factorial a(a+1)...(a+n-1), with value 1 for n = 0.
Rational pochhammer(const Rational& a, unsigned n);
Int pochhammer(const Int& a, unsigned n);

Rational rational_pow(const Rational& base, unsigned exp);

// Writes n = s^2 * r with r squarefree; returns {s, r}. Requires n >= 1.
std::pair<Int, Int> squarefree_decompose(Int n);

bool is_perfect_square(const Int& n);

}  // namespace jordan
