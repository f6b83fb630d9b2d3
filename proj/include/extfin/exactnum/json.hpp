#pragma once

#include <json.hpp>

#include "extfin/exactnum/ratfun.hpp"
#include "extfin/exactnum/rational.hpp"

namespace extfin {

// Rational <-> "p/q" string. Integers given as JSON numbers are accepted on input.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// RatFun <-> {"num": [coeff strings ascending], "den": [...]}.
// A bare string or number is accepted on input as a constant.
nlohmann::json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const nlohmann::json& j);

nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

// Scalar dispatch used by generic matrix serialization.
inline nlohmann::json scalar_to_json(const Rational& r) { return rational_to_json(r); }
inline nlohmann::json scalar_to_json(const RatFun& f) { return ratfun_to_json(f); }
template <class T>
T scalar_from_json(const nlohmann::json& j);
template <>
inline Rational scalar_from_json<Rational>(const nlohmann::json& j) { return rational_from_json(j); }
template <>
inline RatFun scalar_from_json<RatFun>(const nlohmann::json& j) { return ratfun_from_json(j); }

}  // namespace extfin
