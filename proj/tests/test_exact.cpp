#include <doctest.h>

#include <random>

#include "jordan/core.hpp"
#include "jordan/uh_rep.hpp"

using namespace jordan;

namespace {

std::mt19937_64 rng(20240901);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 12);
  return Rational(num(rng), den(rng));
}

SqrtRat random_sqrt_rat() {
  static const int radicands[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15};
  std::uniform_int_distribution<int> count(1, 3), pick(0, 9);
  SqrtRat x;
  for (int i = 0, n = count(rng); i < n; ++i)
    x += SqrtRat::radical_term(random_rational(), radicands[pick(rng)]);
  return x;
}

HPoly<Rational> random_poly() {
  std::uniform_int_distribution<int> deg(0, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational();
  return HPoly<Rational>(std::move(c));
}

Mat<Rational> random_mat2() {
  Mat<Rational> m(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m.at(r, c) = random_rational();
  return m;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 3), 0) == 1);
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-3), 4) == 0);
  CHECK(pochhammer(Int(-3), 2) == 6);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0L) == 1);
  CHECK(factorial(6L) == 720);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(factorial(half(4)) == 2);
  CHECK_THROWS_AS(factorial(half(3)), std::domain_error);
}

TEST_CASE("rational canonical form") {
  Rational q(Int(4), Int(6));
  CHECK(numerator(q) == 2);
  CHECK(denominator(q) == 3);
  for (int i = 0; i < 100; ++i) {
    Rational a = random_rational(), b = random_rational();
    Rational c = a * b + a - b;
    CHECK(boost::multiprecision::gcd(numerator(c), denominator(c)) == 1);
    CHECK(denominator(c) >= 1);
  }
}

TEST_CASE("half integers") {
  HalfInt j = half(3);  // 3/2
  CHECK(!j.is_whole());
  CHECK((j + half(1)).whole_value() == 2);
  CHECK(abs(half(-5)) == half(5));
  CHECK(half(4).str() == "2");
  CHECK(half(-3).str() == "-3/2");
}

TEST_CASE("squarefree decomposition") {
  auto [s, r] = squarefree_decompose(Int(72));  // 72 = 6^2 * 2
  CHECK(s == 6);
  CHECK(r == 2);
  std::uniform_int_distribution<long> d(1, 100000);
  for (int i = 0; i < 200; ++i) {
    Int n = d(rng);
    auto [sq, free] = squarefree_decompose(n);
    CHECK(sq * sq * free == n);
    // independent squarefreeness oracle: no p^2 divides the free part
    for (Int p = 2; p * p <= free; ++p) CHECK(free % (p * p) != 0);
  }
}

TEST_CASE("sqrt_rat canonicalization") {
  CHECK(sqrt_rat(Rational(0)).is_zero());
  CHECK(sqrt_rat(Rational(4, 9)) == SqrtRat(Rational(2, 3)));
  CHECK(sqrt_rat(Rational(1, 2)) == SqrtRat::radical_term(Rational(1, 2), 2));
  CHECK(sqrt_rat(Rational(8)) == SqrtRat::radical_term(Rational(2), 2));
  CHECK_THROWS_AS(sqrt_rat(Rational(-1)), std::domain_error);
  // sqrt is multiplicative
  for (int i = 0; i < 100; ++i) {
    Rational a = random_rational(), b = random_rational();
    a *= a;  // force nonneg
    b *= b;
    CHECK(sqrt_rat(a) * sqrt_rat(b) == sqrt_rat(a * b));
  }
}

TEST_CASE("sqrt_rat field axioms") {
  for (int i = 0; i < 200; ++i) {
    SqrtRat a = random_sqrt_rat(), b = random_sqrt_rat(), c = random_sqrt_rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == SqrtRat(0));
    CHECK(a * SqrtRat(1) == a);
  }
  // single-term inverses
  for (int i = 0; i < 100; ++i) {
    Rational q = random_rational();
    if (q == 0) continue;
    SqrtRat x = SqrtRat::radical_term(q, 6);
    CHECK(x * x.inverse() == SqrtRat(1));
  }
  SqrtRat multi = SqrtRat(1) + SqrtRat::radical_term(Rational(1), 2);
  CHECK_THROWS_AS(multi.inverse(), std::domain_error);
  CHECK_THROWS_AS(SqrtRat(0).inverse(), std::domain_error);
}

TEST_CASE("sqrt_rat canonical invariants") {
  for (int i = 0; i < 200; ++i) {
    SqrtRat x = random_sqrt_rat() * random_sqrt_rat() + random_sqrt_rat();
    for (const auto& [rad, q] : x.terms()) {
      CHECK(q != 0);
      CHECK(rad >= 1);
      auto [s, r] = squarefree_decompose(rad);
      CHECK(s == 1);  // stored radicands are squarefree
    }
  }
}

TEST_CASE("hpoly ring and canonical form") {
  HPoly<Rational> x = HPoly<Rational>::monomial(Rational(1), 1);
  CHECK((x * x).degree() == 2);
  CHECK(HPoly<Rational>(0).is_zero());
  CHECK((x - x).is_zero());
  // trailing zeros trimmed on construction
  CHECK(HPoly<Rational>(std::vector<Rational>{1, 2, 0, 0}).degree() == 1);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    // evaluation at h = 0 is a ring homomorphism
    CHECK((p + q).at_zero() == p.at_zero() + q.at_zero());
    CHECK((p * q).at_zero() == p.at_zero() * q.at_zero());
  }
  CHECK(x.shifted_up(2).degree() == 3);
  CHECK(x.shifted_up(2).shifted_down(2) == x);
  CHECK_THROWS_AS((x + HPoly<Rational>(1)).shifted_down(1), std::domain_error);
}

TEST_CASE("kron basics") {
  using M = Mat<Rational>;
  CHECK(kron(M::identity(2), M::identity(3)) == M::identity(6));
  // index bookkeeping: kron acts on basis vectors as idx(i,j) = i*cols_B + j
  M a(2, 2), b(3, 3);
  a.at(1, 0) = 1;  // e0 -> e1
  b.at(2, 1) = 1;  // e1 -> e2
  M k = kron(a, b);
  CHECK(k.at(1 * 3 + 2, 0 * 3 + 1) == 1);
  // mixed product rule against direct multiplication
  for (int i = 0; i < 50; ++i) {
    M p = random_mat2(), q = random_mat2(), r = random_mat2(), s = random_mat2();
    CHECK(kron(p, q) * kron(r, s) == kron(p * r, q * s));
  }
}

TEST_CASE("matrix dimension errors") {
  Mat<Rational> a(2, 3), b(2, 2);
  CHECK_THROWS_AS(a * a, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("nilpotent series") {
  // exp-type series on the zero matrix gives the identity
  PolyMat zero(3, 3);
  std::vector<Rational> exp_coeffs{1, 1, Rational(1, 2), Rational(1, 6)};
  CHECK(nilpotent_series(zero, exp_coeffs) == PolyMat::identity(3));

  // log series recovers hX from e^{hX} on V^(1)
  HalfInt j1 = half(2);
  PolyMat e = uh::exp_hx_matrix(j1);
  PolyMat n1 = e - PolyMat::identity(e.rows());
  std::vector<Rational> log_coeffs{0, 1, Rational(-1, 2), Rational(1, 3)};
  CHECK(nilpotent_series(n1, log_coeffs) == shift_up(uh::x_matrix(j1), 1));

  // (1+N) * series((1+N)^{-1}) = 1 on V^(3/2)
  HalfInt j32 = half(3);
  PolyMat e32 = uh::exp_hx_matrix(j32);
  PolyMat n = e32 - PolyMat::identity(e32.rows());
  std::vector<Rational> inv_coeffs{1, -1, 1, -1, 1};
  CHECK(e32 * nilpotent_series(n, inv_coeffs) == PolyMat::identity(e32.rows()));

  // non-nilpotent input rejected
  CHECK_THROWS_AS(nilpotent_series(PolyMat::identity(2), inv_coeffs), std::domain_error);
  CHECK_THROWS_AS(unipotent_inverse(PolyMat(2, 2)), std::domain_error);
}

}  // TEST_SUITE
