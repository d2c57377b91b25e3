#include "jordan/json_io.hpp"

namespace jordan::jsonio {

namespace {

Int parse_int(const std::string& s) { return Int(s); }

}  // namespace

json encode(const Rational& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

Rational decode_rational(const json& j) {
  return Rational(parse_int(j.at("num").get<std::string>()),
                  parse_int(j.at("den").get<std::string>()));
}

json encode(const SqrtRat& x) {
  json terms = json::array();
  for (const auto& [rad, q] : x.terms())
    terms.push_back(json{{"radicand", rad.str()},
                         {"num", numerator(q).str()},
                         {"den", denominator(q).str()}});
  return terms;
}

SqrtRat decode_sqrt_rat(const json& j) {
  SqrtRat x;
  for (const auto& term : j) {
    Rational q(parse_int(term.at("num").get<std::string>()),
               parse_int(term.at("den").get<std::string>()));
    x += SqrtRat::radical_term(q, parse_int(term.at("radicand").get<std::string>()));
  }
  return x;
}

json encode(const HPoly<SqrtRat>& p) {
  json coeffs = json::array();
  for (const SqrtRat& c : p.coeffs()) coeffs.push_back(encode(c));
  return coeffs;
}

HPoly<SqrtRat> decode_poly(const json& j) {
  std::vector<SqrtRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(decode_sqrt_rat(c));
  return HPoly<SqrtRat>(std::move(coeffs));
}

json encode_matrix(const SqrtPolyMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"type", "matrix"},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(rows)}};
}

SqrtPolyMat decode_matrix(const json& j) {
  SqrtPolyMat m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const json& entries = j.at("entries");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = decode_poly(entries.at(r).at(c));
  return m;
}

json encode_table(const cgc::CgcTable& t) {
  json entries = json::array();
  // deterministic order: columns (j desc, m desc), rows (n1 desc, n2 desc)
  for (auto [j, m] : cgc::col_labels(t.j1, t.j2))
    for (auto [n1, n2] : cgc::row_labels(t.j1, t.j2))
      entries.push_back(json{{"twice_j", j.twice()},
                             {"twice_n1", n1.twice()},
                             {"twice_n2", n2.twice()},
                             {"twice_m", m.twice()},
                             {"value", encode(t.at(j, n1, n2, m))}});
  return json{{"type", "cgc_table"},
              {"twice_j1", t.j1.twice()},
              {"twice_j2", t.j2.twice()},
              {"row_order", "(n1,n2) lexicographically descending"},
              {"col_order", "(j descending, m descending)"},
              {"entries", std::move(entries)}};
}

cgc::CgcTable decode_table(const json& j) {
  cgc::CgcTable t{half(j.at("twice_j1").get<int>()), half(j.at("twice_j2").get<int>()), {}};
  for (const auto& e : j.at("entries"))
    t.entries.emplace(cgc::TableKey{half(e.at("twice_j").get<int>()),
                                    half(e.at("twice_n1").get<int>()),
                                    half(e.at("twice_n2").get<int>()),
                                    half(e.at("twice_m").get<int>())},
                      decode_poly(e.at("value")));
  return t;
}

json output_record(const std::string& command, json args, json payload) {
  json cmd;
  cmd["name"] = command;
  for (auto& [key, value] : args.items()) cmd[key] = std::move(value);
  json rec;
  rec["schema"] = kSchema;
  rec["command"] = std::move(cmd);
  rec["payload"] = std::move(payload);
  return rec;
}

}  // namespace jordan::jsonio
