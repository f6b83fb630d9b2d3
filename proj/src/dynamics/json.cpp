#include "extfin/dynamics/json.hpp"

#include "extfin/errors.hpp"
#include "extfin/exactnum/json.hpp"

namespace extfin {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

nlohmann::json interval_to_json(const Interval& i) {
  if (i.is_point()) return rational_to_json(i.lo);
  return {{"lo", rational_to_json(i.lo)}, {"hi", rational_to_json(i.hi)}};
}

Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_object()) return Interval::point(rational_from_json(j));
  Interval out{rational_from_json(field(j, "lo")), rational_from_json(field(j, "hi"))};
  if (out.hi < out.lo) throw InputError("interval with lo > hi");
  return out;
}

nlohmann::json spectral_to_json(const SpectralClass& sc) {
  nlohmann::json vec = nlohmann::json::array();
  for (const auto& x : sc.perron_vector) vec.push_back(interval_to_json(x));
  nlohmann::json chi = nlohmann::json::array();
  for (const auto& c : sc.characteristic.coeffs()) chi.push_back(bigint_to_json(c));
  return {{"band", to_string(sc.band)},
          {"perron_root", interval_to_json(sc.perron_root)},
          {"perron_exact", sc.perron_exact()},
          {"perron_vector", vec},
          {"perron_multiplicity_one", sc.perron_multiplicity_one},
          {"characteristic", chi}};
}

SpectralClass spectral_from_json(const nlohmann::json& j) {
  SpectralClass sc;
  sc.band = spectral_band_from_string(field(j, "band").get<std::string>());
  sc.perron_root = interval_from_json(field(j, "perron_root"));
  for (const auto& x : field(j, "perron_vector")) sc.perron_vector.push_back(interval_from_json(x));
  sc.perron_multiplicity_one = field(j, "perron_multiplicity_one").get<bool>();
  std::vector<BigInt> chi;
  for (const auto& c : field(j, "characteristic")) chi.push_back(bigint_from_json(c));
  sc.characteristic = IntPolynomial(std::move(chi));
  return sc;
}

nlohmann::json perron_projection_to_json(const PerronProjection& p) {
  return {{"alpha1", interval_to_json(p.alpha1)}, {"beta1", interval_to_json(p.beta1)}, {"lam", interval_to_json(p.lam)}};
}

PerronProjection perron_projection_from_json(const nlohmann::json& j) {
  return {interval_from_json(field(j, "alpha1")), interval_from_json(field(j, "beta1")),
          interval_from_json(field(j, "lam"))};
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"spectral", spectral_to_json(v.spectral)},
                   {"lambda", interval_to_json(v.spectral.perron_root)},
                   {"conclusion", to_string(v.conclusion)},
                   {"evidence", v.evidence}};
  j["family"] = v.family ? nlohmann::json(to_string(*v.family)) : nlohmann::json();
  j["parameter_generic"] = v.parameter_generic ? nlohmann::json(*v.parameter_generic) : nlohmann::json();
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  try {
    Verdict v;
    v.spectral = spectral_from_json(field(j, "spectral"));
    v.conclusion = conclusion_from_string(field(j, "conclusion").get<std::string>());
    v.evidence = field(j, "evidence").get<std::vector<std::string>>();
    if (j.contains("family") && !j["family"].is_null()) v.family = family_tag_from_string(j["family"].get<std::string>());
    if (j.contains("parameter_generic") && !j["parameter_generic"].is_null()) {
      v.parameter_generic = j["parameter_generic"].get<bool>();
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed verdict JSON: ") + e.what());
  }
}

}  // namespace extfin
