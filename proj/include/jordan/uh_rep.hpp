#pragma once

#include <string>

#include "jordan/core.hpp"
#include "jordan/report.hpp"
#include "jordan/su2.hpp"

namespace jordan::uh {

enum class Gen { H, X, Y, Zplus, Zminus, ExpHX, ExpNegHX, CoshHalfInv, SinhOverH };

std::string gen_name(Gen g);

// t_k = (2k-2)!/(k!(k-1)!), the coefficient family of the inverse-cosh
// expansion; integer-valued for every k >= 1.
Rational catalan_t(int k);

// Closed-form actions of the deformed generators on V^(j) in the v-basis.
// All entries are polynomials in h with rational coefficients.
PolyMat h_matrix(HalfInt j);
PolyMat exp_hx_matrix(HalfInt j);
PolyMat exp_neg_hx_matrix(HalfInt j);
PolyMat x_matrix(HalfInt j);
PolyMat cosh_half_inv_matrix(HalfInt j);
PolyMat y_matrix(HalfInt j);

PolyMat generator_matrix(Gen g, HalfInt j);

// Terminating matrix functions of a nilpotent generator matrix x (entries
// already carry their h powers); each multiplies in one extra power of h per
// series step, so everything stays in the polynomial ring.
PolyMat sinh_over_h(const PolyMat& x);         // sinh(hx)/h
PolyMat cosh_of(const PolyMat& x);             // cosh(hx)
PolyMat two_over_h_sinh_half(const PolyMat& x);  // (2/h) sinh(hx/2)
PolyMat cosh_half(const PolyMat& x);           // cosh(hx/2)
PolyMat exp_h(const PolyMat& m, int sign);     // exp(+-h m)

// Independent constructions used as exact oracles for the closed forms.
PolyMat exp_hx_oracle(HalfInt j);        // (1 + (h/2)Z+)(1 - (h/2)Z+)^{-1}
PolyMat x_log_oracle(HalfInt j);         // log(e^{hX})/h
PolyMat n2_matrix(HalfInt j);            // nilpotent part of cosh(hX/2)^2 = 1 + N2
PolyMat cosh_half_inv_oracle(HalfInt j);  // (1 + N2)^{-1/2} series
PolyMat y_oracle(HalfInt j);             // cosh(hX/2)^{-1} Z- cosh(hX/2)^{-1}

// Exact checks of the defining relations
//   [X,Y] = H,  [H,X] = 2 sinh(hX)/h,  [H,Y] = -Y cosh(hX) - cosh(hX) Y
// and of the reconstruction of the classical generators
//   Z+ = (2/h) tanh(hX/2),  Z- = cosh(hX/2) Y cosh(hX/2).
CheckReport verify_defining_relations(HalfInt j);
CheckReport verify_nonlinear_map(HalfInt j);

}  // namespace jordan::uh
