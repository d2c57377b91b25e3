#include "jordan/tensor.hpp"

#include "jordan/render.hpp"

namespace jordan::tensor {

namespace {

using Poly = HPoly<Rational>;
using uh::Gen;

PolyMat ident(HalfInt j) { return PolyMat::identity(RepSpace{j}.dim()); }

// g(x)e^{hX} + e^{-hX}(x)g, the twisted-primitive shape shared by H and Y.
PolyMat twisted(Gen g, HalfInt j1, HalfInt j2) {
  return kron(uh::generator_matrix(g, j1), uh::exp_hx_matrix(j2)) +
         kron(uh::exp_neg_hx_matrix(j1), uh::generator_matrix(g, j2));
}

PolyMat coprod_zplus_series(HalfInt j1, HalfInt j2) {
  PolyMat zp1 = poly_lift(su2::zplus_matrix(j1));
  PolyMat zp2 = poly_lift(su2::zplus_matrix(j2));
  PolyMat p1 = ident(j1), p2 = ident(j2);
  PolyMat tail(p1.rows() * p2.rows(), p1.rows() * p2.rows());
  Rational c = 1;
  for (unsigned n = 0;; ++n) {
    if (p1.is_zero() || p2.is_zero()) break;
    tail += kron(p1, p2) * Poly::monomial(c, 2 * n);
    p1 = p1 * zp1;
    p2 = p2 * zp2;
    c *= Rational(-1, 4);
  }
  PolyMat prefactor = kron(ident(j1), zp2) + kron(zp1, ident(j2));
  return prefactor * tail;
}

}  // namespace

PolyMat coprod(Gen g, HalfInt j1, HalfInt j2) {
  switch (g) {
    case Gen::X:
      return kron(uh::x_matrix(j1), ident(j2)) + kron(ident(j1), uh::x_matrix(j2));
    case Gen::H:
    case Gen::Y:
      return twisted(g, j1, j2);
    case Gen::Zplus:
      return coprod_zplus_series(j1, j2);
    case Gen::Zminus: {
      PolyMat ch = uh::cosh_half(coprod(Gen::X, j1, j2));
      return ch * coprod(Gen::Y, j1, j2) * ch;
    }
    default:
      throw std::invalid_argument("coprod: unsupported generator");
  }
}

PolyMat coprod_h_series(HalfInt j1, HalfInt j2) {
  // D(H) = H(x)1 + 1(x)H + 2 H(x)G+ + 2 G-(x)H with G+- the geometric
  // tails sum_{n>=1} (+-(h/2) Z+)^n, which terminate by nilpotency.
  auto tail = [](HalfInt j, int sign) {
    PolyMat z = shift_up(poly_lift(su2::zplus_matrix(j)) * Poly(Rational(sign, 2)), 1);
    PolyMat acc(z.rows(), z.rows());
    PolyMat p = z;
    while (!p.is_zero()) {
      acc += p;
      p = p * z;
    }
    return acc;
  };
  PolyMat hm1 = uh::h_matrix(j1), hm2 = uh::h_matrix(j2);
  return kron(hm1, ident(j2)) + kron(ident(j1), hm2) +
         kron(hm1, tail(j2, 1)) * Poly(2) + kron(tail(j1, -1), hm2) * Poly(2);
}

PolyMat coprod_zplus_via_map(HalfInt j1, HalfInt j2) {
  PolyMat dx = coprod(Gen::X, j1, j2);
  return uh::two_over_h_sinh_half(dx) * unipotent_inverse(uh::cosh_half(dx));
}

namespace {

void append_check(CheckReport& rep, const std::string& what, const PolyMat& lhs,
                  const PolyMat& rhs) {
  if (rep.pass && !(lhs == rhs)) {
    rep.pass = false;
    rep.detail = what + " at " + first_mismatch(lhs, rhs);
  }
}

std::string pair_tag(HalfInt j1, HalfInt j2) {
  return "(2j1,2j2)=(" + std::to_string(j1.twice()) + "," + std::to_string(j2.twice()) + ")";
}

}  // namespace

CheckReport verify_coprod_agreement(HalfInt j1, HalfInt j2) {
  CheckReport rep{"coproduct-dual-construction " + pair_tag(j1, j2), true, ""};
  append_check(rep, "D(Z+) series vs map", coprod(Gen::Zplus, j1, j2),
               coprod_zplus_via_map(j1, j2));
  append_check(rep, "D(H) twisted vs series", coprod(Gen::H, j1, j2), coprod_h_series(j1, j2));
  return rep;
}

CheckReport verify_coprod_homomorphism(HalfInt j1, HalfInt j2) {
  CheckReport rep{"coproduct-homomorphism " + pair_tag(j1, j2), true, ""};
  PolyMat dx = coprod(Gen::X, j1, j2);
  PolyMat dy = coprod(Gen::Y, j1, j2);
  PolyMat dh = coprod(Gen::H, j1, j2);
  PolyMat dzp = coprod(Gen::Zplus, j1, j2);
  PolyMat dzm = coprod(Gen::Zminus, j1, j2);
  PolyMat ch = uh::cosh_of(dx);
  append_check(rep, "[D(X),D(Y)]=D(H)", dx * dy - dy * dx, dh);
  append_check(rep, "[D(H),D(X)]=2sinh(hD(X))/h", dh * dx - dx * dh,
               uh::sinh_over_h(dx) * Poly(2));
  append_check(rep, "[D(H),D(Y)]=-{D(Y),cosh}", dh * dy - dy * dh, -(dy * ch + ch * dy));
  append_check(rep, "[D(Z+),D(Z-)]=D(H)", dzp * dzm - dzm * dzp, dh);
  append_check(rep, "[D(H),D(Z+)]=2D(Z+)", dh * dzp - dzp * dh, dzp * Poly(2));
  append_check(rep, "[D(H),D(Z-)]=-2D(Z-)", dh * dzm - dzm * dh, dzm * Poly(-2));
  return rep;
}

CheckReport verify_coassociativity(HalfInt j1, HalfInt j2, HalfInt j3) {
  CheckReport rep{"coassociativity (2j)=(" + std::to_string(j1.twice()) + "," +
                      std::to_string(j2.twice()) + "," + std::to_string(j3.twice()) + ")",
                  true, ""};
  // (D (x) id)D(g) treats the first pair as one representation, so its
  // e^{+-hX} legs become exp(+-h D(X)) computed as a terminating series;
  // (id (x) D)D(g) does the same on the second pair.
  PolyMat dx12 = coprod(Gen::X, j1, j2);
  PolyMat dx23 = coprod(Gen::X, j2, j3);
  PolyMat e12p = uh::exp_h(dx12, +1), e12m = uh::exp_h(dx12, -1);
  PolyMat e23p = uh::exp_h(dx23, +1), e23m = uh::exp_h(dx23, -1);
  PolyMat i1 = ident(j1), i3 = ident(j3);
  PolyMat i12 = PolyMat::identity(dx12.rows()), i23 = PolyMat::identity(dx23.rows());

  append_check(rep, "X", kron(dx12, i3) + kron(i12, uh::x_matrix(j3)),
               kron(uh::x_matrix(j1), i23) + kron(i1, dx23));
  for (Gen g : {Gen::H, Gen::Y}) {
    PolyMat lhs = kron(coprod(g, j1, j2), uh::exp_hx_matrix(j3)) +
                  kron(e12m, uh::generator_matrix(g, j3));
    PolyMat rhs = kron(uh::generator_matrix(g, j1), e23p) +
                  kron(uh::exp_neg_hx_matrix(j1), coprod(g, j2, j3));
    append_check(rep, uh::gen_name(g), lhs, rhs);
  }
  return rep;
}

}  // namespace jordan::tensor
