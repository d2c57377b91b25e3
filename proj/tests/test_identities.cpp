#include <doctest.h>

#include "jordan/identities.hpp"

using namespace jordan;
using namespace jordan::identities;

TEST_SUITE("identities") {

TEST_CASE("coshinv_coefficient_identity") {
  auto k1 = coshinv_coefficient_identity(1);
  CHECK(k1.lhs == Rational(-1, 2));
  CHECK(k1.pass);
  auto k2 = coshinv_coefficient_identity(2);
  CHECK(k2.lhs == Rational(-1, 8));
  CHECK(k2.pass);
  for (int k = 1; k <= 40; ++k) {
    auto c = coshinv_coefficient_identity(k);
    INFO(c.label);
    CHECK(c.pass);
  }
}

TEST_CASE("catalan_convolution_identity") {
  for (int n = 0; n <= 2; ++n) {
    auto s2 = catalan_convolution_identity(2, n);
    CHECK(s2.lhs == 1);
    CHECK(s2.pass);
  }
  auto s3 = catalan_convolution_identity(3, 0);
  CHECK(s3.lhs == 2);
  CHECK(s3.rhs == 2);
  for (int s = 2; s <= 40; ++s)
    for (int n = 0; n <= 2; ++n) {
      auto c = catalan_convolution_identity(s, n);
      INFO(c.label);
      CHECK(c.pass);
    }
}

TEST_CASE("hypergeometric_sum_identity") {
  // n = 0: both sides reduce to c - 1 - a b
  auto base = hypergeometric_sum_identity(Rational(2, 3), Rational(-1, 5), Rational(7, 2), 0);
  CHECK(base.pass);
  CHECK(base.lhs == Rational(7, 2) - 1 - Rational(2, 3) * Rational(-1, 5));

  // poles are reported and skipped
  auto pole = hypergeometric_sum_identity(Rational(1), Rational(1), Rational(-3), 5);
  CHECK(pole.skipped);

  for (const auto& c : hypergeometric_random_cases(42, 500, 20)) {
    INFO(c.label);
    CHECK(c.pass);
  }
  for (const auto& c : hypergeometric_label_cases(43, 200)) {
    INFO(c.label);
    CHECK(c.pass);
  }
}

TEST_CASE("recurrences") {
  // one recurrence step from the seed: 2*2*f(2) = 1*f(1) = -1/2
  CHECK(coshinv_coefficient_sum(2) == Rational(-1, 8));
  // 4 f_0(2) - 3 f_0(3) + 2 = 0 forces f_0(3) = 2
  CHECK(catalan_convolution_sum(3, 0) == 2);
  auto rep = verify_recurrences(40);
  INFO(rep.detail);
  CHECK(rep.pass);
}

}  // TEST_SUITE
