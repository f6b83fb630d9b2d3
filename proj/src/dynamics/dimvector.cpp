#include "extfin/dynamics/dimvector.hpp"

#include <sstream>

#include "extfin/exactnum/json.hpp"

namespace extfin {

DimVector DimVector::from_stacked(const std::vector<Rational>& v) {
  if (v.size() % 2 != 0) throw InputError("stacked dimension vector has odd length");
  const std::size_t n = v.size() / 2;
  std::vector<BigInt> t, s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer()) throw InputError("dimension vector entries must be integers");
    (i < n ? t : s).push_back(v[i].numerator());
  }
  return DimVector(std::move(t), std::move(s));
}

std::string DimVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < n(); ++i) out += (i ? "," : "") + extfin::to_string(t[i]);
  out += "|";
  for (std::size_t i = 0; i < n(); ++i) out += (i ? "," : "") + extfin::to_string(s[i]);
  return out + ")";
}

nlohmann::json dimvector_to_json(const DimVector& v) {
  nlohmann::json t = nlohmann::json::array(), s = nlohmann::json::array();
  for (const auto& x : v.t) t.push_back(bigint_to_json(x));
  for (const auto& x : v.s) s.push_back(bigint_to_json(x));
  return {{"t", t}, {"s", s}};
}

DimVector dimvector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("s") || !j["t"].is_array() || !j["s"].is_array()) {
    throw InputError("dimension vector JSON needs arrays \"t\" and \"s\"");
  }
  std::vector<BigInt> t, s;
  for (const auto& x : j["t"]) t.push_back(bigint_from_json(x));
  for (const auto& x : j["s"]) s.push_back(bigint_from_json(x));
  return DimVector(std::move(t), std::move(s));
}

DimVector parse_dimvector(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  auto bar = body.find('|');
  if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos) {
    throw InputError("dimension vector must look like t1,...,tn|s1,...,sn: " + text);
  }
  auto parse_half = [&](const std::string& half) {
    std::vector<BigInt> out;
    std::stringstream ss(half);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto first = item.find_first_not_of(" \t");
      auto last = item.find_last_not_of(" \t");
      item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
      Rational r = Rational::parse(item);
      if (!r.is_integer()) throw InputError("dimension vector entries must be integers: " + text);
      out.push_back(r.numerator());
    }
    return out;
  };
  return DimVector(parse_half(body.substr(0, bar)), parse_half(body.substr(bar + 1)));
}

}  // namespace extfin
