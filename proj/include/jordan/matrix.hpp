#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

// Dense row-major matrix over a commutative ring C. Operators act on
// column vectors: column index = source basis vector.
template <class C>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, C(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = C(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  C& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const C& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const {
    for (const C& x : e_)
      if (!(x == C(0))) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = -a.e_[i];
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const C& aik = a.at(i, k);
        if (aik == C(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const C& bkj = b.at(k, j);
          if (bkj == C(0)) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Mat operator*(const Mat& m, const C& s) {
    Mat r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = m.e_[i] * s;
    return r;
  }
  friend Mat operator*(const C& s, const Mat& m) { return m * s; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<C> apply(const std::vector<C>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat: dimension mismatch in apply");
    std::vector<C> r(rows_, C(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const C& x = at(i, j);
        if (x == C(0)) continue;
        r[i] += x * v[j];
      }
    return r;
  }

  Mat pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: pow of non-square matrix");
    Mat r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<C> e_;

  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: dimension mismatch");
  }
};

// Kronecker product with the first factor as the slow index, so that
// (A (x) B)(u (x) v) = (Au) (x) (Bv) and idx(i,j) = i*cols_B + j.
template <class C>
Mat<C> kron(const Mat<C>& a, const Mat<C>& b) {
  Mat<C> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const C& x = a.at(ra, ca);
      if (x == C(0)) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          const C& y = b.at(rb, cb);
          if (y == C(0)) continue;
          r.at(ra * b.rows() + rb, ca * b.cols() + cb) = x * y;
        }
    }
  return r;
}

template <class C, class F>
auto map_mat(const Mat<C>& m, F f) -> Mat<decltype(f(C(0)))> {
  Mat<decltype(f(C(0)))> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = f(m.at(i, j));
  return r;
}

// Smallest k with N^k = 0, or 0 if N is not nilpotent within dim steps.
template <class C>
std::size_t nilpotency_index(const Mat<C>& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("Mat: nilpotency of non-square matrix");
  Mat<C> p = Mat<C>::identity(n.rows());
  for (std::size_t k = 0; k <= n.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * n;
  }
  return 0;
}

// sum_k coeffs[k] * N^k for strictly nilpotent N; the sum terminates at the
// first vanishing power. Non-nilpotent input (N^dim != 0) is rejected.
template <class C>
Mat<C> nilpotent_series(const Mat<C>& n, const std::vector<Rational>& coeffs) {
  std::size_t idx = nilpotency_index(n);
  if (idx == 0 && !n.is_zero()) throw std::domain_error("nilpotent_series: matrix is not nilpotent");
  Mat<C> acc(n.rows(), n.rows());
  Mat<C> p = Mat<C>::identity(n.rows());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (p.is_zero()) break;
    if (coeffs[k] != 0) acc += p * C(coeffs[k]);
    p = p * n;
  }
  return acc;
}

// Exact inverse of U = I + N with N nilpotent, via the alternating
// Neumann sum; rejects input whose strictly non-unit part fails to nilpotate.
template <class C>
Mat<C> unipotent_inverse(const Mat<C>& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("Mat: inverse of non-square matrix");
  Mat<C> n = u - Mat<C>::identity(u.rows());
  std::size_t idx = nilpotency_index(n);
  if (idx == 0 && !n.is_zero()) throw std::domain_error("unipotent_inverse: matrix is not unipotent");
  Mat<C> acc = Mat<C>::identity(u.rows());
  Mat<C> p = n;
  bool negate = true;
  while (!p.is_zero()) {
    if (negate)
      acc -= p;
    else
      acc += p;
    p = p * n;
    negate = !negate;
  }
  return acc;
}

}  // namespace jordan
