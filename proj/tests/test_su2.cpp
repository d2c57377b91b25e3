#include <doctest.h>

#include "jordan/su2.hpp"

using namespace jordan;

TEST_SUITE("su2") {

TEST_CASE("h matrix") {
  CHECK(su2::h_matrix(half(0)) == Mat<Rational>(1, 1));
  Mat<Rational> h12 = su2::h_matrix(half(1));
  CHECK(h12.at(0, 0) == -1);
  CHECK(h12.at(1, 1) == 1);
  Mat<Rational> h1 = su2::h_matrix(half(2));
  CHECK(h1.at(0, 0) == -2);
  CHECK(h1.at(1, 1) == 0);
  CHECK(h1.at(2, 2) == 2);
}

TEST_CASE("ladder matrices") {
  // boundary: Z+ v_{1/2} = 0 on V^(1/2)
  Mat<Rational> zp = su2::zplus_matrix(half(1));
  CHECK(zp.at(1, 0) == 1);
  for (std::size_t r = 0; r < 2; ++r) CHECK(zp.at(r, 1) == 0);
  // Z- v_0 = (j+m)(j-m+1) v_{-1} = 2 v_{-1} on V^(1)
  Mat<Rational> zm = su2::zminus_matrix(half(2));
  CHECK(zm.at(0, 1) == 2);
}

TEST_CASE("commutation relations") {
  for (int tj = 0; tj <= 8; ++tj) {
    HalfInt j = half(tj);
    auto h = su2::h_matrix(j), zp = su2::zplus_matrix(j), zm = su2::zminus_matrix(j);
    CHECK(zp * zm - zm * zp == h);
    CHECK(h * zp - zp * h == zp * Rational(2));
    CHECK(h * zm - zm * h == zm * Rational(-2));
  }
}

TEST_CASE("nilpotency of ladders") {
  for (int tj = 0; tj <= 8; ++tj) {
    HalfInt j = half(tj);
    unsigned n = static_cast<unsigned>(tj) + 1;
    CHECK(su2::zplus_matrix(j).pow(n).is_zero());
    CHECK(su2::zminus_matrix(j).pow(n).is_zero());
  }
}

TEST_CASE("alpha") {
  // alpha(j,-j)^2 = 1/(2j)!
  for (int tj = 0; tj <= 6; ++tj) {
    HalfInt j = half(tj);
    SqrtRat a = su2::alpha(j, -j);
    CHECK(a * a == SqrtRat(Rational(1, factorial(static_cast<long>(tj)))));
  }
  CHECK(su2::alpha(half(2), half(2)) == sqrt_rat(Rational(2)));
}

TEST_CASE("e-basis matrices") {
  // V^(1/2): the single raising entry is 1
  Mat<SqrtRat> zp_e = su2::zplus_matrix_e(half(1));
  CHECK(zp_e.at(1, 0) == SqrtRat(1));

  for (int tj = 0; tj <= 6; ++tj) {
    HalfInt j = half(tj);
    RepSpace v{j};
    Mat<SqrtRat> zp = su2::zplus_matrix_e(j);
    Mat<SqrtRat> zm = su2::zminus_matrix_e(j);
    // Z+- e_m = sqrt((j-+m)(j+-m+1)) e_{m+-1}
    for (std::size_t i = 0; i + 1 < v.dim(); ++i) {
      HalfInt m = v.m_at(i);
      Rational prod = Rational(whole_of(j - m)) * whole_of(j + m + 1);
      CHECK(zp.at(i + 1, i) == sqrt_rat(prod));
      CHECK(zm.at(i, i + 1) == sqrt_rat(prod));
    }
    CHECK(zp.transpose() == zm);
    // conjugation preserves the algebra
    auto h = su2::h_matrix_e(j);
    CHECK(zp * zm - zm * zp == h);
  }
}

}  // TEST_SUITE
