#include "jordan/render.hpp"

namespace jordan {

namespace {

bool is_negative(const SqrtRat& x) {
  // Sign of the leading stored term; only used for display.
  return !x.is_zero() && x.terms().begin()->second < 0;
}

// One radical term, magnitude only: "3", "3/4", "sqrt(2)", "(3/4)sqrt(2)".
std::string term_text(const Rational& q, const Int& rad) {
  Rational a = q < 0 ? -q : q;
  if (rad == 1) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }
  std::string root = "sqrt(" + rad.str() + ")";
  if (a == 1) return root;
  if (denominator(a) == 1) return numerator(a).str() + root;
  return "(" + numerator(a).str() + "/" + denominator(a).str() + ")" + root;
}

std::string term_latex(const Rational& q, const Int& rad) {
  Rational a = q < 0 ? -q : q;
  std::string coeff;
  if (denominator(a) == 1)
    coeff = numerator(a).str();
  else
    coeff = "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
  if (rad == 1) return coeff;
  std::string root = "\\sqrt{" + rad.str() + "}";
  if (a == 1) return root;
  return coeff + root;
}

// Sign-aware joining of term strings.
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto [neg, body] = terms[i];
    if (i == 0)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string power_suffix(std::size_t deg, bool latex) {
  if (deg == 0) return "";
  if (deg == 1) return "h";
  return latex ? "h^{" + std::to_string(deg) + "}" : "h^" + std::to_string(deg);
}

}  // namespace

std::string to_text(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_text(const SqrtRat& x) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [rad, q] : x.terms()) parts.emplace_back(q < 0, term_text(q, rad));
  return join_terms(parts);
}

std::string to_latex(const Rational& q) {
  std::string s;
  if (q < 0) s += "-";
  Rational a = q < 0 ? -q : q;
  if (denominator(a) == 1)
    s += numerator(a).str();
  else
    s += "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
  return s;
}

std::string to_latex(const SqrtRat& x) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [rad, q] : x.terms()) parts.emplace_back(q < 0, term_latex(q, rad));
  return join_terms(parts);
}

namespace {

// Polynomial rendering shared by the rational and radical cases. The
// coefficient printer receives the magnitude and says whether parentheses
// are needed next to a power of h.
template <class C, class Neg, class Body>
std::string poly_text(const HPoly<C>& p, bool latex, Neg negate, Body body) {
  std::vector<std::pair<bool, std::string>> parts;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const C& c = p.coeffs()[k];
    if (c == C(0)) continue;
    bool neg = negate(c);
    C mag = neg ? -c : c;
    auto [s, needs_parens, is_one] = body(mag);
    std::string term;
    if (k == 0)
      term = s;
    else if (is_one)
      term = power_suffix(k, latex);
    else
      term = (needs_parens ? "(" + s + ")" : s) + power_suffix(k, latex);
    parts.emplace_back(neg, term);
  }
  return join_terms(parts);
}

}  // namespace

std::string to_text(const HPoly<Rational>& p) {
  return poly_text(p, false, [](const Rational& q) { return q < 0; },
                   [](const Rational& q) {
                     return std::tuple<std::string, bool, bool>{to_text(q), denominator(q) != 1,
                                                                q == 1};
                   });
}

std::string to_text(const HPoly<SqrtRat>& p) {
  return poly_text(p, false, is_negative, [](const SqrtRat& x) {
    bool one = x == SqrtRat(1);
    bool parens = x.term_count() > 1 ||
                  (x.is_rational() && denominator(x.rational_part()) != 1);
    return std::tuple<std::string, bool, bool>{to_text(x), parens, one};
  });
}

std::string to_latex(const HPoly<SqrtRat>& p) {
  return poly_text(p, true, is_negative, [](const SqrtRat& x) {
    bool one = x == SqrtRat(1);
    bool parens = x.term_count() > 1;
    return std::tuple<std::string, bool, bool>{to_latex(x), parens, one};
  });
}

}  // namespace jordan
