#pragma once

#include <cstddef>
#include <utility>

#include "jordan/core.hpp"
#include "jordan/report.hpp"
#include "jordan/uh_rep.hpp"

namespace jordan {

// V^(j1) (x) V^(j2) with the first factor as the slow index, matching kron.
struct TensorSpace {
  HalfInt j1, j2;

  std::size_t dim1() const { return RepSpace{j1}.dim(); }
  std::size_t dim2() const { return RepSpace{j2}.dim(); }
  std::size_t dim() const { return dim1() * dim2(); }
  std::size_t index_of(HalfInt m1, HalfInt m2) const {
    return RepSpace{j1}.index_of(m1) * dim2() + RepSpace{j2}.index_of(m2);
  }
  std::pair<HalfInt, HalfInt> labels_at(std::size_t i) const {
    return {RepSpace{j1}.m_at(i / dim2()), RepSpace{j2}.m_at(i % dim2())};
  }
};

namespace tensor {

// Coproduct action on the tensor product:
//   D(X)  = X(x)1 + 1(x)X
//   D(H)  = H(x)e^{hX} + e^{-hX}(x)H        (same shape for Y)
//   D(Z+) = (1(x)Z+ + Z+(x)1) sum_n (-h^2/4)^n Z+^n (x) Z+^n
//   D(Z-) = cosh(hD(X)/2) D(Y) cosh(hD(X)/2)
PolyMat coprod(uh::Gen g, HalfInt j1, HalfInt j2);

// Alternative constructions, used as exact cross-checks of coprod:
PolyMat coprod_h_series(HalfInt j1, HalfInt j2);     // D(H) via geometric tails in Z+
PolyMat coprod_zplus_via_map(HalfInt j1, HalfInt j2);  // (2/h) tanh(h D(X) / 2)

CheckReport verify_coprod_agreement(HalfInt j1, HalfInt j2);
CheckReport verify_coprod_homomorphism(HalfInt j1, HalfInt j2);
CheckReport verify_coassociativity(HalfInt j1, HalfInt j2, HalfInt j3);

}  // namespace tensor
}  // namespace jordan
