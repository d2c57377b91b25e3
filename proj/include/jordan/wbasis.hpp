#pragma once

#include <cstdint>
#include <vector>

#include "jordan/core.hpp"
#include "jordan/report.hpp"
#include "jordan/tensor.hpp"

namespace jordan::wbasis {

// b^{m1,m2}_{k,l} = (-2m1-k)_l (-2m2-l)_k / (k! l!) for k,l >= 0, else 0.
Rational b_coeff(HalfInt m1, HalfInt m2, int k, int l);

// a^{m1,m2}_{k,l} = (-1)^k (h/2)^{k+l} (b_{k,l} - b_{k-1,l-1}); a monomial
// of degree exactly k+l (or zero).
HPoly<Rational> a_coeff(HalfInt m1, HalfInt m2, int k, int l);

// Auxiliary vector w^{j1,j2}_{m1,m2} = sum_{k,l} a_{k,l} v_{m1+k} (x) v_{m2+l},
// as coordinates in the v(x)v basis. Throws on out-of-range labels.
std::vector<HPoly<Rational>> w_vector(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2);

// Change of basis with column (m1,m2) = w^{j1,j2}_{m1,m2}; unipotent, so the
// inverse is the terminating alternating Neumann sum.
PolyMat w_matrix(HalfInt j1, HalfInt j2);
PolyMat w_matrix_inverse(HalfInt j1, HalfInt j2);

// The coproducts act on the w-basis exactly like the undeformed tensor
// product action on v (x) v:
//   D(H)  w_{m1,m2} = 2(m1+m2) w_{m1,m2}
//   D(Z+) w_{m1,m2} = w_{m1+1,m2} + w_{m1,m2+1}
//   D(Z-) w_{m1,m2} = (j1+m1)(j1-m1+1) w_{m1-1,m2} + (j2+m2)(j2-m2+1) w_{m1,m2-1}
CheckReport verify_h_action(HalfInt j1, HalfInt j2);
CheckReport verify_zplus_action(HalfInt j1, HalfInt j2);
CheckReport verify_zminus_action(HalfInt j1, HalfInt j2);

// Randomized exact identities on the b family.
CheckReport check_b_symmetry(std::uint64_t seed, int cases);
CheckReport check_resb_identity(std::uint64_t seed, int cases);
CheckReport check_telescoping(std::uint64_t seed, int cases);

}  // namespace jordan::wbasis
