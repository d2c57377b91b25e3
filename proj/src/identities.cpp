#include "jordan/identities.hpp"

#include <random>

#include "jordan/uh_rep.hpp"

namespace jordan::identities {

Rational coshinv_coefficient_sum(int k) {
  Rational sum = 0;
  for (int n = 1; n <= k; ++n) {
    Rational term = pochhammer(Rational(1, 2), static_cast<unsigned>(n)) *
                    binomial(k - 1, n - 1) / factorial(static_cast<long>(n));
    sum += n % 2 == 0 ? term : -term;
  }
  return sum;
}

IdentityCase coshinv_coefficient_identity(int k) {
  if (k < 1) throw std::domain_error("coshinv_coefficient_identity: k must be positive");
  IdentityCase c;
  c.label = "inverse-cosh coefficient sum k=" + std::to_string(k);
  c.lhs = coshinv_coefficient_sum(k);
  c.rhs = -Rational(factorial(2 * k - 2), factorial(k) * factorial(k - 1)) /
          rational_pow(Rational(2), static_cast<unsigned>(2 * k - 1));
  c.pass = c.lhs == c.rhs;
  return c;
}

Rational catalan_convolution_sum(int s, int n) {
  Rational sum = 0;
  for (int k = 1; k <= s - 1; ++k) {
    Rational kn = rational_pow(Rational(k), static_cast<unsigned>(n));
    sum += uh::catalan_t(k) * uh::catalan_t(s - k) * kn;
  }
  return sum;
}

IdentityCase catalan_convolution_identity(int s, int n) {
  if (s < 2 || n < 0 || n > 2) throw std::domain_error("catalan_convolution_identity: need s >= 2, n in {0,1,2}");
  IdentityCase c;
  c.label = "convolution sum s=" + std::to_string(s) + " n=" + std::to_string(n);
  c.lhs = catalan_convolution_sum(s, n);
  Int fs1 = factorial(s - 1);
  switch (n) {
    case 0: c.rhs = Rational(factorial(2 * s - 2), factorial(s) * fs1); break;
    case 1: c.rhs = Rational(factorial(2 * s - 2), 2 * fs1 * fs1); break;
    default:
      c.rhs = Rational(s * factorial(2 * s - 2), 2 * fs1 * fs1) -
              rational_pow(Rational(4), static_cast<unsigned>(s - 2));
      break;
  }
  c.pass = c.lhs == c.rhs;
  return c;
}

IdentityCase hypergeometric_sum_identity(const Rational& a, const Rational& b, const Rational& c, int n) {
  if (n < 0) throw std::domain_error("hypergeometric_sum_identity: n must be >= 0");
  IdentityCase out;
  out.label = "indefinite hypergeometric sum n=" + std::to_string(n);
  // (c)_l must stay nonzero through l = n
  for (int l = 0; l <= n; ++l)
    if (pochhammer(c, static_cast<unsigned>(l)) == 0) {
      out.skipped = true;
      out.label += " [pole in denominator parameter]";
      return out;
    }
  Rational lhs = 0;
  for (int l = 0; l <= n; ++l) {
    Rational g = pochhammer(a, static_cast<unsigned>(l)) *
                 pochhammer(b, static_cast<unsigned>(l)) /
                 (factorial(static_cast<long>(l + 1)) * pochhammer(c, static_cast<unsigned>(l)));
    lhs += g * ((c - a - b) * l + c - 1 - a * b);
  }
  out.lhs = lhs;
  out.rhs = c - 1 -
            pochhammer(a, static_cast<unsigned>(n + 1)) *
                pochhammer(b, static_cast<unsigned>(n + 1)) /
                (factorial(static_cast<long>(n + 1)) * pochhammer(c, static_cast<unsigned>(n)));
  out.pass = out.lhs == out.rhs;
  return out;
}

std::vector<IdentityCase> hypergeometric_random_cases(std::uint64_t seed, int cases, int max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 12), nd(0, max_n);
  std::vector<IdentityCase> out;
  out.reserve(static_cast<std::size_t>(cases));
  while (static_cast<int>(out.size()) < cases) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    IdentityCase id = hypergeometric_sum_identity(a, b, c, nd(rng));
    if (id.skipped) continue;
    out.push_back(std::move(id));
  }
  return out;
}

std::vector<IdentityCase> hypergeometric_label_cases(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> twice_m(-8, 8), kd(0, 6), nd(0, 12);
  std::vector<IdentityCase> out;
  out.reserve(static_cast<std::size_t>(cases));
  while (static_cast<int>(out.size()) < cases) {
    int twice_m1 = twice_m(rng), twice_m2 = twice_m(rng);
    int k = kd(rng);
    Rational a = Rational(1 - k) - twice_m1;
    Rational b = Rational(1) + twice_m2;
    Rational c = Rational(2 - k) + twice_m2;
    IdentityCase id = hypergeometric_sum_identity(a, b, c, nd(rng));
    if (id.skipped) continue;
    id.label += " [label substitution]";
    out.push_back(std::move(id));
  }
  return out;
}

CheckReport verify_recurrences(int max_index) {
  CheckReport rep{"closed-form recurrences up to " + std::to_string(max_index), true, ""};
  auto fail = [&rep](const std::string& what) {
    if (rep.pass) {
      rep.pass = false;
      rep.detail = what;
    }
  };

  if (coshinv_coefficient_sum(1) != Rational(-1, 2)) fail("seed f(1) != -1/2");
  for (int n = 0; n <= 2; ++n)
    if (catalan_convolution_sum(2, n) != 1) fail("seed f_n(2) != 1");

  for (int k = 1; k < max_index && rep.pass; ++k) {
    Rational lhs = Rational(2) * (k + 1) * coshinv_coefficient_sum(k + 1);
    Rational rhs = Rational(2 * k - 1) * coshinv_coefficient_sum(k);
    if (lhs != rhs) fail("f recurrence at k=" + std::to_string(k));
  }
  for (int s = 2; s < max_index && rep.pass; ++s) {
    Int f2s2 = factorial(2 * s - 2);
    Rational r0 = Rational(4) * (s - 1) * catalan_convolution_sum(s, 0) -
                  Rational(s + 1) * catalan_convolution_sum(s + 1, 0) +
                  Rational(2 * f2s2, factorial(s) * factorial(s - 1));
    Rational r1 = Rational(4) * (s - 1) * catalan_convolution_sum(s, 1) - Rational(s) * catalan_convolution_sum(s + 1, 1) +
                  Rational(f2s2, factorial(s - 1) * factorial(s - 1));
    Rational r2 = Rational(4) * catalan_convolution_sum(s, 2) - catalan_convolution_sum(s + 1, 2) +
                  Rational(f2s2, factorial(s) * factorial(s - 2));
    if (r0 != 0) fail("f_0 recurrence at s=" + std::to_string(s));
    if (r1 != 0) fail("f_1 recurrence at s=" + std::to_string(s));
    if (r2 != 0) fail("f_2 recurrence at s=" + std::to_string(s));
  }
  return rep;
}

}  // namespace jordan::identities
