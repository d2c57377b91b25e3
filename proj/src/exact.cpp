#include <utility>

#include "jordan/half_int.hpp"
#include "jordan/rational.hpp"
#include "jordan/sqrt_rat.hpp"

namespace jordan {

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is a binomial prefix
  }
  return r;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

Int pochhammer(const Int& a, unsigned n) {
  Int r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

std::pair<Int, Int> squarefree_decompose(Int n) {
  if (n < 1) throw std::domain_error("squarefree_decompose: argument must be positive");
  // All radicands in this library come from factorial ratios, so trial
  // division by small primes factors them completely; the perfect-square
  // fallback handles the rare large leftover.
  static constexpr long kTrialLimit = 100000;
  Int square = 1, free = 1;
  for (Int p = 2; p * p <= n && p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2) free *= p;
  }
  if (n > 1) {
    Int root = boost::multiprecision::sqrt(n);
    if (root * root == n)
      square *= root;
    else
      free *= n;
  }
  return {square, free};
}

std::string HalfInt::str() const {
  if (is_whole()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt x) { return os << x.str(); }

Int factorial(HalfInt x) {
  if (!x.is_whole() || x.twice() < 0)
    throw std::domain_error("factorial: argument must be a whole number >= 0");
  return factorial(static_cast<long>(x.whole_value()));
}

SqrtRat SqrtRat::radical_term(const Rational& coeff, const Int& radicand) {
  if (radicand < 1) throw std::domain_error("SqrtRat: radicand must be positive");
  SqrtRat x;
  x.add_term(radicand, coeff);
  return x;
}

Rational SqrtRat::rational_part() const {
  auto it = terms_.find(Int(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

void SqrtRat::add_term(const Int& r, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.emplace(r, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

SqrtRat& SqrtRat::operator+=(const SqrtRat& o) {
  for (const auto& [r, q] : o.terms_) add_term(r, q);
  return *this;
}

SqrtRat& SqrtRat::operator-=(const SqrtRat& o) {
  for (const auto& [r, q] : o.terms_) add_term(r, -q);
  return *this;
}

SqrtRat operator-(const SqrtRat& a) {
  SqrtRat r;
  for (const auto& [rad, q] : a.terms_) r.terms_.emplace(rad, -q);
  return r;
}

SqrtRat operator*(const SqrtRat& a, const SqrtRat& b) {
  SqrtRat r;
  for (const auto& [ra, qa] : a.terms_)
    for (const auto& [rb, qb] : b.terms_) {
      // sqrt(ra)*sqrt(rb) = g*sqrt((ra/g)(rb/g)) with g = gcd(ra, rb);
      // the reduced radicand stays squarefree because ra/g and rb/g are
      // coprime squarefree numbers.
      Int g = boost::multiprecision::gcd(ra, rb);
      Int rad = (ra / g) * (rb / g);
      r.add_term(rad, qa * qb * g);
    }
  return r;
}

SqrtRat SqrtRat::inverse() const {
  if (terms_.empty()) throw std::domain_error("SqrtRat: inverse of zero");
  if (terms_.size() != 1)
    throw std::domain_error("SqrtRat: inverse implemented for single-term values only");
  const auto& [r, q] = *terms_.begin();
  // 1/(q sqrt(r)) = (1/(q r)) sqrt(r)
  return radical_term(Rational(1) / (q * Rational(r)), r);
}

SqrtRat sqrt_rat(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt_rat: negative argument");
  if (q == 0) return SqrtRat();
  // sqrt(n/d) = sqrt(n*d)/d
  Int n = numerator(q), d = denominator(q);
  auto [square, free] = squarefree_decompose(n * d);
  return SqrtRat::radical_term(Rational(square, d), free);
}

}  // namespace jordan
