#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jordan/core.hpp"

namespace jordan {

std::string to_text(const Rational& q);
std::string to_text(const SqrtRat& x);
std::string to_text(const HPoly<Rational>& p);
std::string to_text(const HPoly<SqrtRat>& p);

std::string to_latex(const Rational& q);
std::string to_latex(const SqrtRat& x);
std::string to_latex(const HPoly<SqrtRat>& p);

template <class C>
std::string matrix_text(const Mat<C>& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string s = to_text(m.at(r, c));
      if (s.size() > width[c]) width[c] = s.size();
      cells[r * m.cols() + c] = std::move(s);
    }
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[r * m.cols() + c];
      out.append(width[c] - s.size(), ' ');
      out += s;
      out += c + 1 < m.cols() ? "  " : " ";
    }
    out += "]\n";
  }
  return out;
}

template <class C>
std::string matrix_latex(const Mat<C>& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out += to_latex(m.at(r, c));
      if (c + 1 < m.cols()) out += " & ";
    }
    out += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}";
  return out;
}

// First entry where two matrices differ, as "((r,c): lhs vs rhs)".
template <class C>
std::string first_mismatch(const Mat<C>& a, const Mat<C>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a.at(r, c) == b.at(r, c)))
        return "(" + std::to_string(r) + "," + std::to_string(c) + "): " + to_text(a.at(r, c)) +
               " vs " + to_text(b.at(r, c));
  return "";
}

}  // namespace jordan
