#include "jordan/su2.hpp"

namespace jordan::su2 {

Mat<Rational> h_matrix(HalfInt j) {
  RepSpace v{j};
  Mat<Rational> m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) m.at(i, i) = v.m_at(i).twice();
  return m;
}

Mat<Rational> zplus_matrix(HalfInt j) {
  RepSpace v{j};
  Mat<Rational> m(v.dim(), v.dim());
  for (std::size_t i = 0; i + 1 < v.dim(); ++i) m.at(i + 1, i) = 1;
  return m;
}

Mat<Rational> zminus_matrix(HalfInt j) {
  RepSpace v{j};
  Mat<Rational> m(v.dim(), v.dim());
  for (std::size_t i = 1; i < v.dim(); ++i) {
    HalfInt mm = v.m_at(i);
    int jpm = whole_of(j + mm);
    int jmm1 = whole_of(j - mm) + 1;
    m.at(i - 1, i) = Rational(jpm) * jmm1;
  }
  return m;
}

SqrtRat alpha(HalfInt j, HalfInt m) {
  return sqrt_rat(Rational(factorial(j + m), factorial(j - m)));
}

Mat<SqrtRat> v_to_e_change(HalfInt j) {
  RepSpace v{j};
  Mat<SqrtRat> d(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) d.at(i, i) = alpha(j, v.m_at(i));
  return d;
}

Mat<SqrtRat> v_to_e_change_inverse(HalfInt j) {
  RepSpace v{j};
  Mat<SqrtRat> d(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) d.at(i, i) = alpha(j, v.m_at(i)).inverse();
  return d;
}

Mat<SqrtRat> to_e_basis(const Mat<Rational>& v_matrix, HalfInt j) {
  return v_to_e_change(j) * sqrt_lift(v_matrix) * v_to_e_change_inverse(j);
}

SqrtPolyMat to_e_basis(const PolyMat& v_matrix, HalfInt j) {
  return poly_lift(v_to_e_change(j)) * sqrt_lift(v_matrix) *
         poly_lift(v_to_e_change_inverse(j));
}

Mat<SqrtRat> h_matrix_e(HalfInt j) { return sqrt_lift(h_matrix(j)); }

Mat<SqrtRat> zplus_matrix_e(HalfInt j) { return to_e_basis(zplus_matrix(j), j); }

Mat<SqrtRat> zminus_matrix_e(HalfInt j) { return to_e_basis(zminus_matrix(j), j); }

}  // namespace jordan::su2
