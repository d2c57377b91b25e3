#pragma once

#include "jordan/half_int.hpp"
#include "jordan/hpoly.hpp"
#include "jordan/matrix.hpp"
#include "jordan/rational.hpp"
#include "jordan/sqrt_rat.hpp"

namespace jordan {

using PolyMat = Mat<HPoly<Rational>>;
using SqrtPolyMat = Mat<HPoly<SqrtRat>>;

inline HPoly<SqrtRat> sqrt_lift(const HPoly<Rational>& p) {
  return map_poly(p, [](const Rational& q) { return SqrtRat(q); });
}

inline Mat<SqrtRat> sqrt_lift(const Mat<Rational>& m) {
  return map_mat(m, [](const Rational& q) { return SqrtRat(q); });
}

inline SqrtPolyMat sqrt_lift(const PolyMat& m) {
  return map_mat(m, [](const HPoly<Rational>& p) { return sqrt_lift(p); });
}

template <class C>
Mat<HPoly<C>> poly_lift(const Mat<C>& m) {
  return map_mat(m, [](const C& c) { return HPoly<C>(c); });
}

// h = 0 slice.
template <class C>
Mat<C> at_zero(const Mat<HPoly<C>>& m) {
  return map_mat(m, [](const HPoly<C>& p) { return p.at_zero(); });
}

// Multiply every entry by h^k.
template <class C>
Mat<HPoly<C>> shift_up(const Mat<HPoly<C>>& m, std::size_t k) {
  return map_mat(m, [k](const HPoly<C>& p) { return p.shifted_up(k); });
}

// Divide every entry by h^k (entries must be divisible).
template <class C>
Mat<HPoly<C>> shift_down(const Mat<HPoly<C>>& m, std::size_t k) {
  return map_mat(m, [k](const HPoly<C>& p) { return p.shifted_down(k); });
}

}  // namespace jordan
