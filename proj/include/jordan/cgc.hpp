#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jordan/core.hpp"
#include "jordan/report.hpp"
#include "jordan/tensor.hpp"

namespace jordan::cgc {

// Classical su(2) Clebsch-Gordan coefficient in the Condon-Shortley
// convention, as an exact radical value. Selection-rule violations
// (including label parity mismatches) give 0.
SqrtRat classical_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

// v-basis variant: alpha(j,m)/(alpha(j1,m1) alpha(j2,m2)) times the classical
// coefficient.
SqrtRat v_basis_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

// A^{m1,m2}_{k,l} = a^{m1,m2}_{k,l} alpha(j1,m1+k) alpha(j2,m2+l)
//                   / (alpha(j1,m1) alpha(j2,m2));
// zero unless m1, m1+k and m2, m2+l are valid labels.
HPoly<SqrtRat> acap(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, int k, int l);

struct TableKey {
  HalfInt j, n1, n2, m;
  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

// Deformed Clebsch-Gordan coefficients over all admissible (j, n1, n2, m);
// every value is a polynomial in h with radical coefficients, and in fact a
// monomial concentrated in degree n1+n2-m.
struct CgcTable {
  HalfInt j1, j2;
  std::map<TableKey, HPoly<SqrtRat>> entries;

  const HPoly<SqrtRat>& at(HalfInt j, HalfInt n1, HalfInt n2, HalfInt m) const;
};

CgcTable deformed_cgc_table(HalfInt j1, HalfInt j2);

// Coupled basis vector e^{(j1j2)j}_m as coordinates in the e (x) e basis,
// built two independent ways: straight from the table, and through the
// auxiliary w-basis; the two must agree exactly.
std::vector<HPoly<SqrtRat>> coupled_vector(const CgcTable& table, HalfInt j, HalfInt m);
std::vector<HPoly<SqrtRat>> coupled_vector_via_w(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m);

// Presentation order of the full coupling matrix: rows by (n1,n2)
// lexicographically descending, columns by (j descending, m descending).
std::vector<std::pair<HalfInt, HalfInt>> row_labels(HalfInt j1, HalfInt j2);
std::vector<std::pair<HalfInt, HalfInt>> col_labels(HalfInt j1, HalfInt j2);
SqrtPolyMat coupling_matrix(const CgcTable& table);

// Coupled vectors are exact simultaneous eigen/ladder vectors of the
// coproducts of H, Z+-, X, Y with the standard single-irrep actions.
CheckReport verify_coupled_action(HalfInt j1, HalfInt j2);

// Entry structure: zero for m > n1+n2, classical for m = n1+n2, degree
// support contained in {n1+n2-m} otherwise.
CheckReport verify_structure(HalfInt j1, HalfInt j2);

CheckReport verify_path_independence(HalfInt j1, HalfInt j2);

// The deformed coupling matrix is exactly invertible but in general not
// orthogonal; the h = 0 slice always is.
struct NonOrthReport {
  HalfInt j1, j2;
  bool classical_gram_is_identity = false;
  bool deformed_gram_is_identity = true;
  std::string witness;  // one off-identity Gramian entry, when any exists
  bool invertible = false;
};

NonOrthReport demonstrate_non_orthogonality(HalfInt j1, HalfInt j2);

}  // namespace jordan::cgc
