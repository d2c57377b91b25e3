#pragma once

#include <cstddef>

#include "jordan/core.hpp"

namespace jordan {

// Irreducible representation space V^(j), dim 2j+1, basis ordered by
// ascending weight m = -j, -j+1, ..., j.
struct RepSpace {
  HalfInt j;

  std::size_t dim() const { return static_cast<std::size_t>(j.twice() + 1); }
  std::size_t index_of(HalfInt m) const {
    return static_cast<std::size_t>((m.twice() + j.twice()) / 2);
  }
  HalfInt m_at(std::size_t i) const {
    return HalfInt::from_twice(2 * static_cast<int>(i) - j.twice());
  }
  bool valid_label(HalfInt m) const {
    return (m + j).is_whole() && abs(m) <= j;
  }
};

namespace su2 {

// Classical generator matrices in the v-basis:
//   H v_m  = 2m v_m
//   Z+ v_m = v_{m+1}
//   Z- v_m = (j+m)(j-m+1) v_{m-1}
Mat<Rational> h_matrix(HalfInt j);
Mat<Rational> zplus_matrix(HalfInt j);
Mat<Rational> zminus_matrix(HalfInt j);

// Basis rescaling v_m = alpha(j,m) e_m with alpha = sqrt((j+m)!/(j-m)!).
SqrtRat alpha(HalfInt j, HalfInt m);
Mat<SqrtRat> v_to_e_change(HalfInt j);
Mat<SqrtRat> v_to_e_change_inverse(HalfInt j);

// Operator matrices in the e-basis (conjugation by the basis change).
Mat<SqrtRat> to_e_basis(const Mat<Rational>& v_matrix, HalfInt j);
SqrtPolyMat to_e_basis(const PolyMat& v_matrix, HalfInt j);
Mat<SqrtRat> h_matrix_e(HalfInt j);
Mat<SqrtRat> zplus_matrix_e(HalfInt j);
Mat<SqrtRat> zminus_matrix_e(HalfInt j);

}  // namespace su2
}  // namespace jordan
