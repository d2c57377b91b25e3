#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jordan {

// Univariate polynomial in the formal deformation parameter h over a
// commutative coefficient ring C. h is never evaluated numerically.
// Canonical form: no trailing zero coefficients; zero is the empty list.
template <class C>
class HPoly {
 public:
  HPoly() = default;
  HPoly(int n) : HPoly(C(n)) {}
  HPoly(const C& c) {
    if (!(c == C(0))) c_.push_back(c);
  }
  explicit HPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static HPoly monomial(const C& coeff, std::size_t deg) {
    HPoly p;
    if (coeff == C(0)) return p;
    p.c_.assign(deg + 1, C(0));
    p.c_[deg] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  C at_zero() const { return coeff(0); }
  const std::vector<C>& coeffs() const { return c_; }

  // Multiply by h^k.
  HPoly shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : HPoly();
    std::vector<C> v(c_.size() + k, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return HPoly(std::move(v));
  }

  // Divide by h^k; the k lowest coefficients must vanish.
  HPoly shifted_down(std::size_t k) const {
    if (is_zero()) return *this;
    if (c_.size() < k) throw std::domain_error("HPoly: not divisible by h^k");
    for (std::size_t i = 0; i < k; ++i)
      if (!(c_[i] == C(0))) throw std::domain_error("HPoly: not divisible by h^k");
    return HPoly(std::vector<C>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  HPoly& operator+=(const HPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator-(const HPoly& a) {
    std::vector<C> v;
    v.reserve(a.c_.size());
    for (const C& c : a.c_) v.push_back(-c);
    return HPoly(std::move(v));
  }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return HPoly();
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return HPoly(std::move(v));
  }
  friend HPoly operator*(const HPoly& p, const C& s) {
    std::vector<C> v;
    v.reserve(p.c_.size());
    for (const C& c : p.c_) v.push_back(c * s);
    return HPoly(std::move(v));
  }
  friend HPoly operator*(const C& s, const HPoly& p) { return p * s; }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;

  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }
};

template <class C, class F>
auto map_poly(const HPoly<C>& p, F f) -> HPoly<decltype(f(C(0)))> {
  using D = decltype(f(C(0)));
  std::vector<D> v;
  v.reserve(p.coeffs().size());
  for (const C& c : p.coeffs()) v.push_back(f(c));
  return HPoly<D>(std::move(v));
}

}  // namespace jordan
