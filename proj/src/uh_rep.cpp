#include "jordan/uh_rep.hpp"

#include <vector>

#include "jordan/render.hpp"

namespace jordan::uh {

namespace {

using Poly = HPoly<Rational>;

Poly mono(const Rational& c, std::size_t deg) { return Poly::monomial(c, deg); }

void check_square(const PolyMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix function: non-square input");
}

}  // namespace

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::H: return "H";
    case Gen::X: return "X";
    case Gen::Y: return "Y";
    case Gen::Zplus: return "Z+";
    case Gen::Zminus: return "Z-";
    case Gen::ExpHX: return "expHX";
    case Gen::ExpNegHX: return "expNegHX";
    case Gen::CoshHalfInv: return "coshHalfInv";
    case Gen::SinhOverH: return "sinhHX";
  }
  return "?";
}

Rational catalan_t(int k) {
  if (k < 1) throw std::domain_error("catalan_t: k must be >= 1");
  return Rational(factorial(2 * k - 2), factorial(k) * factorial(k - 1));
}

PolyMat h_matrix(HalfInt j) { return poly_lift(su2::h_matrix(j)); }

PolyMat exp_hx_matrix(HalfInt j) {
  RepSpace v{j};
  PolyMat m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    m.at(i, i) = Poly(1);
    // e^{hX} v_m = v_m + 2 sum_{k>=1} (h/2)^k v_{m+k}
    for (std::size_t k = 1; i + k < v.dim(); ++k)
      m.at(i + k, i) = mono(2 * rational_pow(Rational(1, 2), static_cast<unsigned>(k)), k);
  }
  return m;
}

PolyMat exp_neg_hx_matrix(HalfInt j) {
  PolyMat m = exp_hx_matrix(j);
  // h -> -h
  return map_mat(m, [](const Poly& p) {
    std::vector<Rational> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Poly(std::move(c));
  });
}

PolyMat x_matrix(HalfInt j) {
  RepSpace v{j};
  PolyMat m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    // X v_m = sum_{k>=0} (h/2)^{2k}/(2k+1) v_{m+1+2k}
    unsigned k = 0;
    for (std::size_t row = i + 1; row < v.dim(); row += 2, ++k)
      m.at(row, i) = mono(rational_pow(Rational(1, 4), k) / (2 * k + 1), 2 * k);
  }
  return m;
}

PolyMat cosh_half_inv_matrix(HalfInt j) {
  RepSpace v{j};
  PolyMat m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    m.at(i, i) = Poly(1);
    // cosh(hX/2)^{-1} v_m = v_m - 2 sum_{k>=1} t_k (h/4)^{2k} v_{m+2k}
    unsigned k = 1;
    for (std::size_t row = i + 2; row < v.dim(); row += 2, ++k)
      m.at(row, i) = mono(-2 * catalan_t(static_cast<int>(k)) * rational_pow(Rational(1, 16), k),
                          2 * k);
  }
  return m;
}

PolyMat y_matrix(HalfInt j) {
  RepSpace v{j};
  PolyMat m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    HalfInt mm = v.m_at(i);
    Rational jpm = whole_of(j + mm);
    Rational jmm = whole_of(j - mm);
    // Y v_m = (j+m)(j-m+1) v_{m-1} - (j-m)(j+m+1)(h/2)^2 v_{m+1}
    //         + sum_{s>=1} (h/2)^{2s} v_{m-1+2s};
    // the s = 1 summand lands on v_{m+1} as well, so contributions add.
    if (i >= 1) m.at(i - 1, i) += Poly(jpm * (jmm + 1));
    if (i + 1 < v.dim()) m.at(i + 1, i) += mono(-jmm * (jpm + 1) / 4, 2);
    unsigned s = 1;
    for (std::size_t row = i + 1; row < v.dim(); row += 2, ++s)
      m.at(row, i) += mono(rational_pow(Rational(1, 4), s), 2 * s);
  }
  return m;
}

PolyMat generator_matrix(Gen g, HalfInt j) {
  switch (g) {
    case Gen::H: return h_matrix(j);
    case Gen::X: return x_matrix(j);
    case Gen::Y: return y_matrix(j);
    case Gen::Zplus: return poly_lift(su2::zplus_matrix(j));
    case Gen::Zminus: return poly_lift(su2::zminus_matrix(j));
    case Gen::ExpHX: return exp_hx_matrix(j);
    case Gen::ExpNegHX: return exp_neg_hx_matrix(j);
    case Gen::CoshHalfInv: return cosh_half_inv_matrix(j);
    case Gen::SinhOverH: return sinh_over_h(x_matrix(j));
  }
  throw std::invalid_argument("generator_matrix: unknown generator");
}

PolyMat sinh_over_h(const PolyMat& x) {
  check_square(x);
  // sinh(hx)/h = sum_k h^{2k} x^{2k+1} / (2k+1)!
  PolyMat x2 = x * x;
  PolyMat acc(x.rows(), x.rows());
  PolyMat p = x;
  for (std::size_t k = 0; !p.is_zero(); ++k) {
    if (k > x.rows()) throw std::domain_error("sinh_over_h: input is not nilpotent");
    acc += p * Poly(Rational(1, factorial(static_cast<long>(2 * k + 1))));
    p = shift_up(p * x2, 2);
  }
  return acc;
}

PolyMat cosh_of(const PolyMat& x) {
  check_square(x);
  // cosh(hx) = sum_k h^{2k} x^{2k} / (2k)!
  PolyMat x2 = x * x;
  PolyMat acc(x.rows(), x.rows());
  PolyMat p = PolyMat::identity(x.rows());
  for (std::size_t k = 0; !p.is_zero(); ++k) {
    if (k > x.rows()) throw std::domain_error("cosh_of: input is not nilpotent");
    acc += p * Poly(Rational(1, factorial(static_cast<long>(2 * k))));
    p = shift_up(p * x2, 2);
  }
  return acc;
}

PolyMat two_over_h_sinh_half(const PolyMat& x) {
  check_square(x);
  // (2/h) sinh(hx/2) = sum_k h^{2k} x^{2k+1} / (4^k (2k+1)!); the overall
  // 1/h cancels against the leading h of sinh, so no formal division occurs.
  PolyMat x2 = x * x;
  PolyMat acc(x.rows(), x.rows());
  PolyMat p = x;
  Rational quarter_pow = 1;
  for (std::size_t k = 0; !p.is_zero(); ++k) {
    if (k > x.rows()) throw std::domain_error("two_over_h_sinh_half: input is not nilpotent");
    acc += p * Poly(quarter_pow / factorial(static_cast<long>(2 * k + 1)));
    p = shift_up(p * x2, 2);
    quarter_pow /= 4;
  }
  return acc;
}

PolyMat cosh_half(const PolyMat& x) {
  check_square(x);
  // cosh(hx/2) = sum_k h^{2k} x^{2k} / (4^k (2k)!)
  PolyMat x2 = x * x;
  PolyMat acc(x.rows(), x.rows());
  PolyMat p = PolyMat::identity(x.rows());
  Rational quarter_pow = 1;
  for (std::size_t k = 0; !p.is_zero(); ++k) {
    if (k > x.rows()) throw std::domain_error("cosh_half: input is not nilpotent");
    acc += p * Poly(quarter_pow / factorial(static_cast<long>(2 * k)));
    p = shift_up(p * x2, 2);
    quarter_pow /= 4;
  }
  return acc;
}

PolyMat exp_h(const PolyMat& m, int sign) {
  check_square(m);
  PolyMat acc(m.rows(), m.rows());
  PolyMat p = PolyMat::identity(m.rows());
  for (std::size_t k = 0; !p.is_zero(); ++k) {
    if (k > m.rows()) throw std::domain_error("exp_h: input is not nilpotent");
    Rational c(1, factorial(static_cast<long>(k)));
    if (sign < 0 && k % 2 == 1) c = -c;
    acc += p * Poly(c);
    p = shift_up(p * m, 1);
  }
  return acc;
}

PolyMat exp_hx_oracle(HalfInt j) {
  PolyMat zp = poly_lift(su2::zplus_matrix(j));
  PolyMat zh = shift_up(zp * Poly(Rational(1, 2)), 1);  // (h/2) Z+
  PolyMat one = PolyMat::identity(zp.rows());
  return (one + zh) * unipotent_inverse(one - zh);
}

PolyMat x_log_oracle(HalfInt j) {
  PolyMat e = exp_hx_matrix(j);
  PolyMat n1 = e - PolyMat::identity(e.rows());
  // log(1 + N1) = sum_{k>=1} (-1)^{k+1} N1^k / k, then divide by h
  std::vector<Rational> coeffs(e.rows() + 1, 0);
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    coeffs[k] = Rational(k % 2 == 1 ? 1 : -1, k);
  return shift_down(nilpotent_series(n1, coeffs), 1);
}

PolyMat n2_matrix(HalfInt j) {
  RepSpace v{j};
  PolyMat m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    // N2 v_m = sum_{k>=1} (h/2)^{2k} v_{m+2k}
    unsigned k = 1;
    for (std::size_t row = i + 2; row < v.dim(); row += 2, ++k)
      m.at(row, i) = mono(rational_pow(Rational(1, 4), k), 2 * k);
  }
  return m;
}

PolyMat cosh_half_inv_oracle(HalfInt j) {
  PolyMat n2 = n2_matrix(j);
  // (1 + N2)^{-1/2} = sum_n (-1)^n (1/2)_n N2^n / n!
  std::vector<Rational> coeffs(n2.rows() + 1, 0);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    Rational c = pochhammer(Rational(1, 2), static_cast<unsigned>(n)) /
                 factorial(static_cast<long>(n));
    coeffs[n] = n % 2 == 0 ? c : -c;
  }
  return nilpotent_series(n2, coeffs);
}

PolyMat y_oracle(HalfInt j) {
  PolyMat ci = cosh_half_inv_oracle(j);
  return ci * poly_lift(su2::zminus_matrix(j)) * ci;
}

namespace {

void append_check(CheckReport& rep, const std::string& what, const PolyMat& lhs,
                  const PolyMat& rhs) {
  if (rep.pass && !(lhs == rhs)) {
    rep.pass = false;
    rep.detail = what + " at " + first_mismatch(lhs, rhs);
  }
}

}  // namespace

CheckReport verify_defining_relations(HalfInt j) {
  CheckReport rep{"defining-relations 2j=" + std::to_string(j.twice()), true, ""};
  PolyMat x = x_matrix(j);
  PolyMat y = y_matrix(j);
  PolyMat hm = h_matrix(j);
  PolyMat ch = cosh_of(x);
  append_check(rep, "[X,Y]=H", x * y - y * x, hm);
  append_check(rep, "[H,X]=2sinh(hX)/h", hm * x - x * hm, sinh_over_h(x) * Poly(2));
  append_check(rep, "[H,Y]=-{Y,cosh(hX)}", hm * y - y * hm, -(y * ch + ch * y));
  return rep;
}

CheckReport verify_nonlinear_map(HalfInt j) {
  CheckReport rep{"nonlinear-map 2j=" + std::to_string(j.twice()), true, ""};
  PolyMat x = x_matrix(j);
  PolyMat y = y_matrix(j);
  PolyMat chalf = cosh_half(x);
  PolyMat zp_rec = two_over_h_sinh_half(x) * unipotent_inverse(chalf);
  PolyMat zm_rec = chalf * y * chalf;
  append_check(rep, "Z+=(2/h)tanh(hX/2)", zp_rec, poly_lift(su2::zplus_matrix(j)));
  append_check(rep, "Z-=cosh(hX/2)Ycosh(hX/2)", zm_rec, poly_lift(su2::zminus_matrix(j)));
  return rep;
}

}  // namespace jordan::uh
