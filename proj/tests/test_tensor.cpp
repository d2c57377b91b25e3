#include <doctest.h>

#include "jordan/tensor.hpp"

using namespace jordan;
using uh::Gen;

TEST_SUITE("tensor") {

TEST_CASE("trivial pair") {
  for (Gen g : {Gen::H, Gen::X, Gen::Y, Gen::Zplus, Gen::Zminus})
    CHECK(tensor::coprod(g, half(0), half(0)) == PolyMat(1, 1));
}

TEST_CASE("index bookkeeping") {
  TensorSpace t{half(2), half(1)};
  CHECK(t.dim() == 6);
  CHECK(t.index_of(half(-2), half(-1)) == 0);
  CHECK(t.index_of(half(2), half(1)) == 5);
  auto [m1, m2] = t.labels_at(3);
  CHECK(m1 == half(0));
  CHECK(m2 == half(1));
}

TEST_CASE("coproducts raise weight for X and Z+") {
  TensorSpace t{half(2), half(3)};
  for (Gen g : {Gen::X, Gen::Zplus}) {
    PolyMat d = tensor::coprod(g, t.j1, t.j2);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (d.at(r, c).is_zero()) continue;
        auto [rm1, rm2] = t.labels_at(r);
        auto [cm1, cm2] = t.labels_at(c);
        CHECK((rm1 + rm2).twice() > (cm1 + cm2).twice());
      }
  }
}

TEST_CASE("dual constructions agree") {
  // includes the (1, 1/2) case for the Z+ series vs map comparison
  for (auto [t1, t2] : {std::pair{2, 1}, {1, 1}, {2, 2}, {3, 2}}) {
    auto rep = tensor::verify_coprod_agreement(half(t1), half(t2));
    INFO(rep.name, ": ", rep.detail);
    CHECK(rep.pass);
  }
}

TEST_CASE("classical limit of coproducts") {
  auto primitive = [](const Mat<Rational>& a, const Mat<Rational>& b) {
    return kron(a, Mat<Rational>::identity(b.rows())) +
           kron(Mat<Rational>::identity(a.rows()), b);
  };
  for (auto [t1, t2] : {std::pair{1, 1}, {2, 1}, {2, 3}}) {
    HalfInt j1 = half(t1), j2 = half(t2);
    CHECK(at_zero(tensor::coprod(Gen::H, j1, j2)) ==
          primitive(su2::h_matrix(j1), su2::h_matrix(j2)));
    CHECK(at_zero(tensor::coprod(Gen::Y, j1, j2)) ==
          primitive(su2::zminus_matrix(j1), su2::zminus_matrix(j2)));
    CHECK(at_zero(tensor::coprod(Gen::Zplus, j1, j2)) ==
          primitive(su2::zplus_matrix(j1), su2::zplus_matrix(j2)));
  }
}

TEST_CASE("coproduct homomorphism") {
  for (auto [t1, t2] : {std::pair{0, 0}, {1, 1}, {2, 3}}) {
    auto rep = tensor::verify_coprod_homomorphism(half(t1), half(t2));
    INFO(rep.name, ": ", rep.detail);
    CHECK(rep.pass);
  }
}

TEST_CASE("coassociativity") {
  for (auto [t1, t2, t3] : {std::tuple{0, 0, 0}, {1, 1, 1}, {2, 1, 1}}) {
    auto rep = tensor::verify_coassociativity(half(t1), half(t2), half(t3));
    INFO(rep.name, ": ", rep.detail);
    CHECK(rep.pass);
  }
}

}  // TEST_SUITE
