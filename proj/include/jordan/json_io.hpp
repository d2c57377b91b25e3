#pragma once

#include <json.hpp>

#include <string>

#include "jordan/cgc.hpp"
#include "jordan/core.hpp"

namespace jordan::jsonio {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "jordan-cgc/1";

// Integers are serialized as decimal strings so arbitrary-precision values
// round-trip losslessly; half-integers as doubled integers; radical values as
// term lists {radicand, num, den}; polynomials as degree-indexed coefficient
// lists.
json encode(const Rational& q);
Rational decode_rational(const json& j);

json encode(const SqrtRat& x);
SqrtRat decode_sqrt_rat(const json& j);

json encode(const HPoly<SqrtRat>& p);
HPoly<SqrtRat> decode_poly(const json& j);

json encode_matrix(const SqrtPolyMat& m);
SqrtPolyMat decode_matrix(const json& j);

json encode_table(const cgc::CgcTable& t);
cgc::CgcTable decode_table(const json& j);

// Top-level record: {"schema", "command", "payload"}.
json output_record(const std::string& command, json args, json payload);

}  // namespace jordan::jsonio
