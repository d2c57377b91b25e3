#include <doctest.h>

#include <random>

#include "jordan/json_io.hpp"
#include "jordan/render.hpp"
#include "jordan/uh_rep.hpp"

using namespace jordan;

namespace {

std::mt19937_64 rng(555);

SqrtRat random_sqrt_rat() {
  static const int radicands[] = {1, 2, 3, 5, 6, 7, 10};
  std::uniform_int_distribution<int> count(0, 3), pick(0, 6), num(-20, 20), den(1, 9);
  SqrtRat x;
  for (int i = 0, n = count(rng); i < n; ++i)
    x += SqrtRat::radical_term(Rational(num(rng), den(rng)), radicands[pick(rng)]);
  return x;
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("value round trips") {
  // big integers survive the string encoding
  Rational big(Int("123456789012345678901234567890"), Int("7"));
  CHECK(jsonio::decode_rational(jsonio::encode(big)) == big);

  for (int i = 0; i < 100; ++i) {
    SqrtRat x = random_sqrt_rat();
    CHECK(jsonio::decode_sqrt_rat(jsonio::encode(x)) == x);
  }
  for (int i = 0; i < 50; ++i) {
    std::vector<SqrtRat> coeffs(4);
    for (auto& c : coeffs) c = random_sqrt_rat();
    HPoly<SqrtRat> p(std::move(coeffs));
    CHECK(jsonio::decode_poly(jsonio::encode(p)) == p);
  }
}

TEST_CASE("matrix round trip") {
  SqrtPolyMat m = su2::to_e_basis(uh::y_matrix(half(3)), half(3));
  CHECK(jsonio::decode_matrix(jsonio::encode_matrix(m)) == m);
}

TEST_CASE("table round trip and determinism") {
  cgc::CgcTable t = cgc::deformed_cgc_table(half(2), half(1));
  jsonio::json enc = jsonio::encode_table(t);
  cgc::CgcTable back = jsonio::decode_table(enc);
  CHECK(back.j1 == t.j1);
  CHECK(back.j2 == t.j2);
  CHECK(back.entries == t.entries);
  CHECK(enc.dump() == jsonio::encode_table(back).dump());
}

TEST_CASE("output record shape") {
  jsonio::json rec = jsonio::output_record(
      "rep", jsonio::json{{"twice_j", 2}}, jsonio::json{{"type", "matrix"}});
  CHECK(rec.at("schema") == "jordan-cgc/1");
  CHECK(rec.at("command").at("name") == "rep");
  CHECK(rec.at("command").at("twice_j") == 2);
}

TEST_CASE("text rendering") {
  HPoly<Rational> p(std::vector<Rational>{2, 0, Rational(-1, 4)});
  CHECK(to_text(p) == "2 - (1/4)h^2");
  CHECK(to_text(HPoly<Rational>(0)) == "0");
  CHECK(to_text(HPoly<Rational>::monomial(Rational(1), 1)) == "h");
  CHECK(to_text(HPoly<Rational>::monomial(Rational(-1), 3)) == "-h^3");
  HPoly<SqrtRat> q = HPoly<SqrtRat>::monomial(SqrtRat::radical_term(Rational(-18, 5), 5), 3);
  CHECK(to_text(q) == "-(18/5)sqrt(5)h^3");
  CHECK(to_text(sqrt_rat(Rational(1, 2))) == "(1/2)sqrt(2)");
  CHECK(to_text(SqrtRat(Rational(3, 4))) == "3/4");
}

TEST_CASE("latex rendering") {
  HPoly<SqrtRat> q = HPoly<SqrtRat>::monomial(SqrtRat::radical_term(Rational(1, 2), 2), 2);
  CHECK(to_latex(q) == "\\frac{1}{2}\\sqrt{2}h^{2}");
  CHECK(to_latex(Rational(-3, 7)) == "-\\frac{3}{7}");
}

}  // TEST_SUITE
