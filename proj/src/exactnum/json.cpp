#include "extfin/exactnum/json.hpp"

#include <limits>

#include "extfin/errors.hpp"

namespace extfin {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw InputError("expected rational as \"p/q\" string, got " + j.dump());
}

namespace {

json coeffs_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

Polynomial coeffs_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected coefficient array, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

}  // namespace

json ratfun_to_json(const RatFun& f) {
  return json{{"num", coeffs_to_json(f.num())}, {"den", coeffs_to_json(f.den())}};
}

RatFun ratfun_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return RatFun(rational_from_json(j));
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw InputError("expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
  }
  return RatFun::normalize(coeffs_from_json(j.at("num")), coeffs_from_json(j.at("den")));
}

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) throw InputError("expected integer, got " + j.dump());
    return r.numerator();
  }
  throw InputError("expected integer, got " + j.dump());
}

}  // namespace extfin
