#include "jordan/wbasis.hpp"

#include <random>
#include <string>

#include "jordan/render.hpp"
#include "jordan/su2.hpp"

namespace jordan::wbasis {

namespace {

using Poly = HPoly<Rational>;
using uh::Gen;

std::string pair_tag(HalfInt j1, HalfInt j2) {
  return "(2j1,2j2)=(" + std::to_string(j1.twice()) + "," + std::to_string(j2.twice()) + ")";
}

// delta(g) = g (x) 1 + 1 (x) g, the undeformed tensor action in the v-basis.
PolyMat classical_coprod(const Mat<Rational>& g1, const Mat<Rational>& g2) {
  return kron(poly_lift(g1), PolyMat::identity(g2.rows())) +
         kron(PolyMat::identity(g1.rows()), poly_lift(g2));
}

void check_w_identity(CheckReport& rep, const PolyMat& lhs, const PolyMat& rhs) {
  if (rep.pass && !(lhs == rhs)) {
    rep.pass = false;
    rep.detail = "first mismatch at " + first_mismatch(lhs, rhs);
  }
}

}  // namespace

Rational b_coeff(HalfInt m1, HalfInt m2, int k, int l) {
  if (k < 0 || l < 0) return 0;
  Int p1 = pochhammer(Int(-m1.twice() - k), static_cast<unsigned>(l));
  Int p2 = pochhammer(Int(-m2.twice() - l), static_cast<unsigned>(k));
  return Rational(p1 * p2, factorial(static_cast<long>(k)) * factorial(static_cast<long>(l)));
}

HPoly<Rational> a_coeff(HalfInt m1, HalfInt m2, int k, int l) {
  if (k < 0 || l < 0) return Poly();
  Rational diff = b_coeff(m1, m2, k, l) - b_coeff(m1, m2, k - 1, l - 1);
  Rational c = diff * rational_pow(Rational(1, 2), static_cast<unsigned>(k + l));
  if (k % 2 == 1) c = -c;
  return Poly::monomial(c, static_cast<std::size_t>(k + l));
}

std::vector<HPoly<Rational>> w_vector(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2) {
  RepSpace v1{j1}, v2{j2};
  if (!v1.valid_label(m1) || !v2.valid_label(m2))
    throw std::invalid_argument("w_vector: labels out of range");
  TensorSpace t{j1, j2};
  std::vector<Poly> coords(t.dim());
  for (int k = 0; k <= whole_of(j1 - m1); ++k)
    for (int l = 0; l <= whole_of(j2 - m2); ++l)
      coords[t.index_of(m1 + k, m2 + l)] = a_coeff(m1, m2, k, l);
  return coords;
}

PolyMat w_matrix(HalfInt j1, HalfInt j2) {
  TensorSpace t{j1, j2};
  PolyMat w(t.dim(), t.dim());
  for (std::size_t col = 0; col < t.dim(); ++col) {
    auto [m1, m2] = t.labels_at(col);
    std::vector<Poly> coords = w_vector(j1, j2, m1, m2);
    for (std::size_t row = 0; row < t.dim(); ++row) w.at(row, col) = coords[row];
  }
  return w;
}

PolyMat w_matrix_inverse(HalfInt j1, HalfInt j2) {
  return unipotent_inverse(w_matrix(j1, j2));
}

CheckReport verify_h_action(HalfInt j1, HalfInt j2) {
  CheckReport rep{"w-basis D(H) action " + pair_tag(j1, j2), true, ""};
  PolyMat w = w_matrix(j1, j2);
  check_w_identity(rep, tensor::coprod(Gen::H, j1, j2) * w,
                   w * classical_coprod(su2::h_matrix(j1), su2::h_matrix(j2)));
  return rep;
}

CheckReport verify_zplus_action(HalfInt j1, HalfInt j2) {
  CheckReport rep{"w-basis D(Z+) action " + pair_tag(j1, j2), true, ""};
  PolyMat w = w_matrix(j1, j2);
  check_w_identity(rep, tensor::coprod(Gen::Zplus, j1, j2) * w,
                   w * classical_coprod(su2::zplus_matrix(j1), su2::zplus_matrix(j2)));
  return rep;
}

CheckReport verify_zminus_action(HalfInt j1, HalfInt j2) {
  CheckReport rep{"w-basis D(Z-) action " + pair_tag(j1, j2), true, ""};
  PolyMat w = w_matrix(j1, j2);
  check_w_identity(rep, tensor::coprod(Gen::Zminus, j1, j2) * w,
                   w * classical_coprod(su2::zminus_matrix(j1), su2::zminus_matrix(j2)));
  return rep;
}

CheckReport check_b_symmetry(std::uint64_t seed, int cases) {
  CheckReport rep{"b-coefficient symmetry", true, ""};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> twice_m(-8, 8), kl(0, 6);
  for (int i = 0; i < cases && rep.pass; ++i) {
    HalfInt m1 = half(twice_m(rng)), m2 = half(twice_m(rng));
    int k = kl(rng), l = kl(rng);
    if (b_coeff(m1, m2, k, l) != b_coeff(m2, m1, l, k)) {
      rep.pass = false;
      rep.detail = "b(" + m1.str() + "," + m2.str() + "," + std::to_string(k) + "," +
                   std::to_string(l) + ")";
    }
  }
  return rep;
}

CheckReport check_resb_identity(std::uint64_t seed, int cases) {
  // sum_{n=1}^{l} (b_{k,l-n} - b_{k-1,l-n-1})
  //   = ((2m1+k-l+1)/(2m1+k)) b_{k,l-1}, for 2m1+k != 0.
  CheckReport rep{"b-coefficient partial-sum identity", true, ""};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> twice_m(-8, 8), kd(0, 6), ld(1, 6);
  int done = 0;
  while (done < cases && rep.pass) {
    HalfInt m1 = half(twice_m(rng)), m2 = half(twice_m(rng));
    int k = kd(rng), l = ld(rng);
    int denom = m1.twice() + k;
    if (denom == 0) continue;  // excluded case
    Rational lhs = 0;
    for (int n = 1; n <= l; ++n)
      lhs += b_coeff(m1, m2, k, l - n) - b_coeff(m1, m2, k - 1, l - n - 1);
    Rational rhs = Rational(m1.twice() + k - l + 1) / denom * b_coeff(m1, m2, k, l - 1);
    if (lhs != rhs) {
      rep.pass = false;
      rep.detail = "m1=" + m1.str() + " m2=" + m2.str() + " k=" + std::to_string(k) +
                   " l=" + std::to_string(l) + ": " + to_text(lhs) + " vs " + to_text(rhs);
    }
    ++done;
  }
  return rep;
}

CheckReport check_telescoping(std::uint64_t seed, int cases) {
  // sum_{n>=0} (b_{k-n,l-n} - b_{k-n-1,l-n-1}) = b_{k,l}
  CheckReport rep{"b-coefficient telescoping", true, ""};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> twice_m(-8, 8), kl(0, 8);
  for (int i = 0; i < cases && rep.pass; ++i) {
    HalfInt m1 = half(twice_m(rng)), m2 = half(twice_m(rng));
    int k = kl(rng), l = kl(rng);
    Rational lhs = 0;
    for (int n = 0; n <= std::max(k, l) + 1; ++n)
      lhs += b_coeff(m1, m2, k - n, l - n) - b_coeff(m1, m2, k - n - 1, l - n - 1);
    if (lhs != b_coeff(m1, m2, k, l)) {
      rep.pass = false;
      rep.detail = "m1=" + m1.str() + " m2=" + m2.str() + " k=" + std::to_string(k) +
                   " l=" + std::to_string(l);
    }
  }
  return rep;
}

}  // namespace jordan::wbasis
