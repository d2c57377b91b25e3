#include "jordan/suites.hpp"

#include <stdexcept>

#include "jordan/cgc.hpp"
#include "jordan/identities.hpp"
#include "jordan/render.hpp"
#include "jordan/tensor.hpp"
#include "jordan/uh_rep.hpp"
#include "jordan/wbasis.hpp"

namespace jordan::suites {

namespace {

template <class F>
void for_each_pair(int max_sum_2j, F f) {
  for (int t1 = 0; t1 <= max_sum_2j; ++t1)
    for (int t2 = 0; t1 + t2 <= max_sum_2j; ++t2) f(half(t1), half(t2));
}

CheckReport classical_limit_check(int max_sum_2j) {
  CheckReport rep{"classical-limit", true, ""};
  auto fail = [&rep](const std::string& what) {
    if (rep.pass) {
      rep.pass = false;
      rep.detail = what;
    }
  };
  using uh::Gen;
  for (int tj = 0; tj <= max_sum_2j && rep.pass; ++tj) {
    HalfInt j = half(tj);
    if (!(at_zero(uh::x_matrix(j)) == su2::zplus_matrix(j))) fail("X(0) != Z+ at 2j=" + std::to_string(tj));
    if (!(at_zero(uh::y_matrix(j)) == su2::zminus_matrix(j))) fail("Y(0) != Z- at 2j=" + std::to_string(tj));
    if (!(at_zero(uh::exp_hx_matrix(j)) == Mat<Rational>::identity(RepSpace{j}.dim())))
      fail("expHX(0) != 1 at 2j=" + std::to_string(tj));
    if (!(at_zero(uh::cosh_half_inv_matrix(j)) == Mat<Rational>::identity(RepSpace{j}.dim())))
      fail("coshHalfInv(0) != 1 at 2j=" + std::to_string(tj));
  }
  for_each_pair(max_sum_2j, [&](HalfInt j1, HalfInt j2) {
    if (!rep.pass) return;
    // every coproduct specializes to the undeformed x(x)1 + 1(x)x at h = 0
    auto primitive = [&](const Mat<Rational>& g1, const Mat<Rational>& g2) {
      return kron(g1, Mat<Rational>::identity(g2.rows())) +
             kron(Mat<Rational>::identity(g1.rows()), g2);
    };
    std::string tag = " at (2j1,2j2)=(" + std::to_string(j1.twice()) + "," +
                      std::to_string(j2.twice()) + ")";
    if (!(at_zero(tensor::coprod(Gen::H, j1, j2)) == primitive(su2::h_matrix(j1), su2::h_matrix(j2))))
      fail("D(H)(0)" + tag);
    if (!(at_zero(tensor::coprod(Gen::X, j1, j2)) ==
          primitive(su2::zplus_matrix(j1), su2::zplus_matrix(j2))))
      fail("D(X)(0)" + tag);
    if (!(at_zero(tensor::coprod(Gen::Y, j1, j2)) ==
          primitive(su2::zminus_matrix(j1), su2::zminus_matrix(j2))))
      fail("D(Y)(0)" + tag);
    // the deformed table at h = 0 is the classical table
    cgc::CgcTable table = cgc::deformed_cgc_table(j1, j2);
    for (const auto& [key, value] : table.entries)
      if (!(value.at_zero() == cgc::classical_cgc(j1, j2, key.j, key.n1, key.n2, key.m))) {
        fail("table(0) != classical" + tag);
        break;
      }
  });
  return rep;
}

}  // namespace

std::vector<CheckReport> relations(const Options& opt) {
  std::vector<CheckReport> out;
  for (int tj = 0; tj <= opt.max_2j; ++tj) {
    out.push_back(uh::verify_defining_relations(half(tj)));
    out.push_back(uh::verify_nonlinear_map(half(tj)));
  }
  return out;
}

std::vector<CheckReport> coproduct(const Options& opt) {
  std::vector<CheckReport> out;
  for_each_pair(opt.max_2j, [&](HalfInt j1, HalfInt j2) {
    out.push_back(tensor::verify_coprod_agreement(j1, j2));
    out.push_back(tensor::verify_coprod_homomorphism(j1, j2));
  });
  for (int t1 = 0; t1 <= 4; ++t1)
    for (int t2 = 0; t2 <= 4; ++t2)
      for (int t3 = 0; t3 <= 4; ++t3) {
        int dim = (t1 + 1) * (t2 + 1) * (t3 + 1);
        if (dim > opt.triple_dim_cap) continue;
        out.push_back(tensor::verify_coassociativity(half(t1), half(t2), half(t3)));
      }
  return out;
}

std::vector<CheckReport> props(const Options& opt) {
  std::vector<CheckReport> out;
  for_each_pair(opt.max_2j, [&](HalfInt j1, HalfInt j2) {
    out.push_back(wbasis::verify_h_action(j1, j2));
    out.push_back(wbasis::verify_zplus_action(j1, j2));
    out.push_back(wbasis::verify_zminus_action(j1, j2));
  });
  out.push_back(wbasis::check_b_symmetry(opt.seed, 200));
  out.push_back(wbasis::check_resb_identity(opt.seed + 1, 200));
  out.push_back(wbasis::check_telescoping(opt.seed + 2, 200));
  return out;
}

std::vector<CheckReport> cgc_suite(const Options& opt) {
  std::vector<CheckReport> out;
  bool any_deviation = false;
  bool classical_ok = true;
  bool invertible_ok = true;
  for_each_pair(opt.max_2j, [&](HalfInt j1, HalfInt j2) {
    out.push_back(cgc::verify_path_independence(j1, j2));
    out.push_back(cgc::verify_structure(j1, j2));
    out.push_back(cgc::verify_coupled_action(j1, j2));
    auto no = cgc::demonstrate_non_orthogonality(j1, j2);
    classical_ok = classical_ok && no.classical_gram_is_identity;
    invertible_ok = invertible_ok && no.invertible;
    any_deviation = any_deviation || !no.deformed_gram_is_identity;
  });
  out.push_back({"coupling-gramian classical slice = identity", classical_ok, ""});
  out.push_back({"coupling-matrix exactly invertible", invertible_ok, ""});
  out.push_back({"gramian deviates from identity for some pair", any_deviation,
                 any_deviation ? "" : "no deviation found in the swept range"});
  out.push_back(classical_limit_check(opt.max_2j));
  return out;
}

std::vector<CheckReport> lemmas(const Options& opt) {
  std::vector<CheckReport> out;
  CheckReport l1{"inverse-cosh coefficient sums k<=40", true, ""};
  for (int k = 1; k <= 40 && l1.pass; ++k) {
    auto c = identities::coshinv_coefficient_identity(k);
    if (!c.pass) {
      l1.pass = false;
      l1.detail = c.label;
    }
  }
  out.push_back(l1);

  CheckReport l2{"convolution sums s<=40, n in {0,1,2}", true, ""};
  for (int s = 2; s <= 40 && l2.pass; ++s)
    for (int n = 0; n <= 2 && l2.pass; ++n) {
      auto c = identities::catalan_convolution_identity(s, n);
      if (!c.pass) {
        l2.pass = false;
        l2.detail = c.label;
      }
    }
  out.push_back(l2);

  CheckReport l3{"indefinite hypergeometric sums, 500 random triples", true, ""};
  for (const auto& c : identities::hypergeometric_random_cases(opt.seed, 500, 20))
    if (!c.pass) {
      l3.pass = false;
      l3.detail = c.label;
      break;
    }
  out.push_back(l3);

  CheckReport l3s{"indefinite hypergeometric sums, label substitution", true, ""};
  for (const auto& c : identities::hypergeometric_label_cases(opt.seed + 1, 200))
    if (!c.pass) {
      l3s.pass = false;
      l3s.detail = c.label;
      break;
    }
  out.push_back(l3s);

  out.push_back(identities::verify_recurrences(40));
  return out;
}

std::vector<CheckReport> run(const std::string& suite, const Options& opt) {
  if (suite == "relations") return relations(opt);
  if (suite == "coproduct") return coproduct(opt);
  if (suite == "props") return props(opt);
  if (suite == "cgc") return cgc_suite(opt);
  if (suite == "lemmas") return lemmas(opt);
  if (suite == "all") {
    std::vector<CheckReport> out;
    for (const char* s : {"relations", "coproduct", "props", "cgc", "lemmas"}) {
      auto part = run(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace jordan::suites
