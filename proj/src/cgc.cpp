#include "jordan/cgc.hpp"

#include <algorithm>
#include <stdexcept>

#include "jordan/render.hpp"
#include "jordan/su2.hpp"
#include "jordan/wbasis.hpp"

namespace jordan::cgc {

namespace {

using Poly = HPoly<SqrtRat>;
using uh::Gen;

bool valid_pair(HalfInt j, HalfInt m) {
  return (j + m).is_whole() && abs(m) <= j;
}

bool triangle(HalfInt j1, HalfInt j2, HalfInt j) {
  return (j1 + j2 + j).is_whole() && j >= abs(j1 - j2) && j <= j1 + j2;
}

std::string pair_tag(HalfInt j1, HalfInt j2) {
  return "(2j1,2j2)=(" + std::to_string(j1.twice()) + "," + std::to_string(j2.twice()) + ")";
}

std::string key_tag(const TableKey& k) {
  return "(j=" + k.j.str() + ",n1=" + k.n1.str() + ",n2=" + k.n2.str() + ",m=" + k.m.str() + ")";
}

}  // namespace

SqrtRat classical_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  if (m1 + m2 != m) return SqrtRat();
  if (!valid_pair(j1, m1) || !valid_pair(j2, m2) || !valid_pair(j, m)) return SqrtRat();
  if (!triangle(j1, j2, j)) return SqrtRat();

  int kmin = std::max({0, -whole_of(j - j2 + m1), -whole_of(j - j1 - m2)});
  int kmax = std::min({whole_of(j1 + j2 - j), whole_of(j1 - m1), whole_of(j2 + m2)});
  Rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    Rational den(factorial(static_cast<long>(k)) * factorial(j1 + j2 - j - HalfInt::whole(k)) *
                 factorial(j1 - m1 - HalfInt::whole(k)) * factorial(j2 + m2 - HalfInt::whole(k)) *
                 factorial(j - j2 + m1 + HalfInt::whole(k)) *
                 factorial(j - j1 - m2 + HalfInt::whole(k)));
    Rational term = 1 / den;
    sum += k % 2 == 0 ? term : -term;
  }
  if (sum == 0) return SqrtRat();

  Rational radicand =
      Rational(factorial(j1 + j2 - j) * factorial(j1 - j2 + j) * factorial(-j1 + j2 + j),
               factorial(j1 + j2 + j + 1)) *
      Rational(factorial(j1 + m1) * factorial(j1 - m1) * factorial(j2 + m2) *
               factorial(j2 - m2) * factorial(j + m) * factorial(j - m) * (j.twice() + 1));
  return sqrt_rat(radicand) * SqrtRat(sum);
}

SqrtRat v_basis_cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  SqrtRat c = classical_cgc(j1, j2, j, m1, m2, m);
  if (c.is_zero()) return c;
  return su2::alpha(j, m) * su2::alpha(j1, m1).inverse() * su2::alpha(j2, m2).inverse() * c;
}

HPoly<SqrtRat> acap(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, int k, int l) {
  if (k < 0 || l < 0) return Poly();
  HalfInt n1 = m1 + k, n2 = m2 + l;
  if (!valid_pair(j1, m1) || !valid_pair(j1, n1)) return Poly();
  if (!valid_pair(j2, m2) || !valid_pair(j2, n2)) return Poly();
  // alpha(j,m+k)/alpha(j,m) = sqrt((j+m+k)!(j-m)! / ((j+m)!(j-m-k)!))
  SqrtRat ratio = sqrt_rat(Rational(factorial(j1 + n1) * factorial(j1 - m1),
                                    factorial(j1 + m1) * factorial(j1 - n1))) *
                  sqrt_rat(Rational(factorial(j2 + n2) * factorial(j2 - m2),
                                    factorial(j2 + m2) * factorial(j2 - n2)));
  return map_poly(wbasis::a_coeff(m1, m2, k, l),
                  [&ratio](const Rational& q) { return SqrtRat(q) * ratio; });
}

const HPoly<SqrtRat>& CgcTable::at(HalfInt j, HalfInt n1, HalfInt n2, HalfInt m) const {
  auto it = entries.find(TableKey{j, n1, n2, m});
  if (it == entries.end()) throw std::out_of_range("CgcTable: no such entry");
  return it->second;
}

CgcTable deformed_cgc_table(HalfInt j1, HalfInt j2) {
  CgcTable table{j1, j2, {}};
  RepSpace v1{j1}, v2{j2};
  for (int tj = (j1 + j2).twice(); tj >= abs(j1 - j2).twice(); tj -= 2) {
    HalfInt j = half(tj);
    for (int tm = j.twice(); tm >= -j.twice(); tm -= 2) {
      HalfInt m = half(tm);
      for (std::size_t i1 = 0; i1 < v1.dim(); ++i1)
        for (std::size_t i2 = 0; i2 < v2.dim(); ++i2) {
          HalfInt n1 = v1.m_at(i1), n2 = v2.m_at(i2);
          Poly value;
          for (std::size_t a = 0; a < v1.dim(); ++a) {
            HalfInt m1 = v1.m_at(a), m2 = m - m1;
            if (!v2.valid_label(m2)) continue;
            if (!(n1 - m1).is_whole() || whole_of(n1 - m1) < 0) continue;
            if (whole_of(n2 - m2) < 0) continue;
            SqrtRat c = classical_cgc(j1, j2, j, m1, m2, m);
            if (c.is_zero()) continue;
            value += acap(j1, j2, m1, m2, whole_of(n1 - m1), whole_of(n2 - m2)) * c;
          }
          table.entries.emplace(TableKey{j, n1, n2, m}, std::move(value));
        }
    }
  }
  return table;
}

std::vector<HPoly<SqrtRat>> coupled_vector(const CgcTable& table, HalfInt j, HalfInt m) {
  TensorSpace t{table.j1, table.j2};
  std::vector<Poly> coords(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    auto [n1, n2] = t.labels_at(i);
    coords[i] = table.at(j, n1, n2, m);
  }
  return coords;
}

std::vector<HPoly<SqrtRat>> coupled_vector_via_w(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m) {
  TensorSpace t{j1, j2};
  RepSpace v1{j1}, v2{j2};
  std::vector<Poly> coords(t.dim());
  for (std::size_t a = 0; a < v1.dim(); ++a) {
    HalfInt m1 = v1.m_at(a), m2 = m - m1;
    if (!v2.valid_label(m2)) continue;
    SqrtRat c = classical_cgc(j1, j2, j, m1, m2, m);
    if (c.is_zero()) continue;
    SqrtRat f = c * su2::alpha(j1, m1).inverse() * su2::alpha(j2, m2).inverse();
    std::vector<HPoly<Rational>> wv = wbasis::w_vector(j1, j2, m1, m2);
    for (std::size_t i = 0; i < t.dim(); ++i)
      if (!wv[i].is_zero()) coords[i] += sqrt_lift(wv[i]) * f;
  }
  // rescale v (x) v coordinates into the e (x) e basis
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (coords[i].is_zero()) continue;
    auto [n1, n2] = t.labels_at(i);
    coords[i] = coords[i] * (su2::alpha(j1, n1) * su2::alpha(j2, n2));
  }
  return coords;
}

std::vector<std::pair<HalfInt, HalfInt>> row_labels(HalfInt j1, HalfInt j2) {
  std::vector<std::pair<HalfInt, HalfInt>> rows;
  for (int t1 = j1.twice(); t1 >= -j1.twice(); t1 -= 2)
    for (int t2 = j2.twice(); t2 >= -j2.twice(); t2 -= 2)
      rows.emplace_back(half(t1), half(t2));
  return rows;
}

std::vector<std::pair<HalfInt, HalfInt>> col_labels(HalfInt j1, HalfInt j2) {
  std::vector<std::pair<HalfInt, HalfInt>> cols;
  for (int tj = (j1 + j2).twice(); tj >= abs(j1 - j2).twice(); tj -= 2)
    for (int tm = tj; tm >= -tj; tm -= 2) cols.emplace_back(half(tj), half(tm));
  return cols;
}

SqrtPolyMat coupling_matrix(const CgcTable& table) {
  auto rows = row_labels(table.j1, table.j2);
  auto cols = col_labels(table.j1, table.j2);
  SqrtPolyMat m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m.at(r, c) = table.at(cols[c].first, rows[r].first, rows[r].second, cols[c].second);
  return m;
}

CheckReport verify_coupled_action(HalfInt j1, HalfInt j2) {
  CheckReport rep{"coupled-action " + pair_tag(j1, j2), true, ""};
  TensorSpace t{j1, j2};
  CgcTable table = deformed_cgc_table(j1, j2);
  SqrtPolyMat de_change = poly_lift(kron(su2::v_to_e_change(j1), su2::v_to_e_change(j2)));
  SqrtPolyMat de_change_inv =
      poly_lift(kron(su2::v_to_e_change_inverse(j1), su2::v_to_e_change_inverse(j2)));

  // columns of E_j are the coupled vectors of V^(j), ascending m
  std::vector<std::pair<HalfInt, SqrtPolyMat>> blocks;
  for (int tj = abs(j1 - j2).twice(); tj <= (j1 + j2).twice(); tj += 2) {
    HalfInt j = half(tj);
    RepSpace vj{j};
    SqrtPolyMat e(t.dim(), vj.dim());
    for (std::size_t c = 0; c < vj.dim(); ++c) {
      auto coords = coupled_vector(table, j, vj.m_at(c));
      for (std::size_t r = 0; r < t.dim(); ++r) e.at(r, c) = coords[r];
    }
    blocks.emplace_back(j, std::move(e));
  }

  for (Gen g : {Gen::H, Gen::Zplus, Gen::Zminus, Gen::X, Gen::Y}) {
    SqrtPolyMat de = de_change * sqrt_lift(tensor::coprod(g, j1, j2)) * de_change_inv;
    for (const auto& [j, e] : blocks) {
      SqrtPolyMat action;
      switch (g) {
        case Gen::H: action = poly_lift(su2::h_matrix_e(j)); break;
        case Gen::Zplus: action = poly_lift(su2::zplus_matrix_e(j)); break;
        case Gen::Zminus: action = poly_lift(su2::zminus_matrix_e(j)); break;
        case Gen::X: action = su2::to_e_basis(uh::x_matrix(j), j); break;
        default: action = su2::to_e_basis(uh::y_matrix(j), j); break;
      }
      SqrtPolyMat lhs = de * e;
      SqrtPolyMat rhs = e * action;
      if (rep.pass && !(lhs == rhs)) {
        rep.pass = false;
        rep.detail = uh::gen_name(g) + " on block j=" + j.str() + " at " + first_mismatch(lhs, rhs);
      }
    }
  }
  return rep;
}

CheckReport verify_structure(HalfInt j1, HalfInt j2) {
  CheckReport rep{"table-structure " + pair_tag(j1, j2), true, ""};
  CgcTable table = deformed_cgc_table(j1, j2);
  for (const auto& [key, value] : table.entries) {
    if (!rep.pass) break;
    int p = whole_of(key.n1 + key.n2 - key.m);
    if (p < 0) {
      if (!value.is_zero()) {
        rep.pass = false;
        rep.detail = "expected zero above the diagonal weight at " + key_tag(key);
      }
      continue;
    }
    if (p == 0) {
      Poly classical(classical_cgc(j1, j2, key.j, key.n1, key.n2, key.m));
      if (!(value == classical)) {
        rep.pass = false;
        rep.detail = "expected classical value at " + key_tag(key) + ": " + to_text(value) +
                     " vs " + to_text(classical);
      }
      continue;
    }
    for (int d = 0; d <= value.degree(); ++d)
      if (d != p && !(value.coeff(static_cast<std::size_t>(d)) == SqrtRat(0))) {
        rep.pass = false;
        rep.detail = "degree support not concentrated in " + std::to_string(p) + " at " +
                     key_tag(key) + ": " + to_text(value);
        break;
      }
  }
  return rep;
}

CheckReport verify_path_independence(HalfInt j1, HalfInt j2) {
  CheckReport rep{"coupled-vector-path-independence " + pair_tag(j1, j2), true, ""};
  CgcTable table = deformed_cgc_table(j1, j2);
  for (auto [j, m] : col_labels(j1, j2)) {
    auto direct = coupled_vector(table, j, m);
    auto via_w = coupled_vector_via_w(j1, j2, j, m);
    if (direct != via_w) {
      rep.pass = false;
      rep.detail = "j=" + j.str() + " m=" + m.str();
      break;
    }
  }
  return rep;
}

NonOrthReport demonstrate_non_orthogonality(HalfInt j1, HalfInt j2) {
  NonOrthReport rep;
  rep.j1 = j1;
  rep.j2 = j2;
  CgcTable table = deformed_cgc_table(j1, j2);
  SqrtPolyMat m = coupling_matrix(table);

  Mat<SqrtRat> m0 = at_zero(m);
  rep.classical_gram_is_identity =
      m0.transpose() * m0 == Mat<SqrtRat>::identity(m0.rows());

  SqrtPolyMat gram = m.transpose() * m;
  SqrtPolyMat eye = SqrtPolyMat::identity(m.rows());
  rep.deformed_gram_is_identity = gram == eye;
  if (!rep.deformed_gram_is_identity) {
    auto cols = col_labels(j1, j2);
    for (std::size_t r = 0; r < gram.rows() && rep.witness.empty(); ++r)
      for (std::size_t c = 0; c < gram.cols(); ++c)
        if (!(gram.at(r, c) == eye.at(r, c))) {
          rep.witness = "G[(j=" + cols[r].first.str() + ",m=" + cols[r].second.str() +
                        "),(j=" + cols[c].first.str() + ",m=" + cols[c].second.str() +
                        ")] = " + to_text(gram.at(r, c));
          break;
        }
  }

  // Invertibility through the factorization M = A * C with A unipotent
  // (weight-raising) and C the orthogonal classical coupling matrix.
  TensorSpace t{j1, j2};
  auto cols = col_labels(j1, j2);
  SqrtPolyMat a_mat(t.dim(), t.dim());
  for (std::size_t c = 0; c < t.dim(); ++c) {
    auto [m1, m2] = t.labels_at(c);
    for (std::size_t r = 0; r < t.dim(); ++r) {
      auto [n1, n2] = t.labels_at(r);
      if (!(n1 - m1).is_whole() || whole_of(n1 - m1) < 0 || whole_of(n2 - m2) < 0) continue;
      a_mat.at(r, c) = acap(j1, j2, m1, m2, whole_of(n1 - m1), whole_of(n2 - m2));
    }
  }
  Mat<SqrtRat> c_mat(t.dim(), cols.size());
  for (std::size_t r = 0; r < t.dim(); ++r) {
    auto [m1, m2] = t.labels_at(r);
    for (std::size_t c = 0; c < cols.size(); ++c)
      c_mat.at(r, c) = classical_cgc(j1, j2, cols[c].first, m1, m2, cols[c].second);
  }
  bool classical_orthogonal =
      c_mat.transpose() * c_mat == Mat<SqrtRat>::identity(cols.size());
  SqrtPolyMat m_comp = a_mat * poly_lift(c_mat);
  SqrtPolyMat m_inv = poly_lift(c_mat.transpose()) * unipotent_inverse(a_mat);
  bool product_identity = m_comp * m_inv == SqrtPolyMat::identity(t.dim());
  rep.invertible = classical_orthogonal && product_identity;
  return rep;
}

}  // namespace jordan::cgc
