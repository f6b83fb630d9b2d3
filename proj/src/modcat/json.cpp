#include "extfin/modcat/json.hpp"

#include "extfin/errors.hpp"
#include "extfin/linalg/json.hpp"

namespace extfin {

nlohmann::json algebra_to_json(const Algebra& algebra) {
  nlohmann::json j{{"family", to_string(algebra.family())}, {"dim", algebra.dim()}};
  if (algebra.family() == AlgebraFamily::double_nakayama) j["rank"] = algebra.rank();
  return j;
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw InputError("algebra must be an object with a \"family\" string");
  }
  const std::string family = j["family"].get<std::string>();
  if (family == "qext") return make_qext_algebra();
  if (family == "dnak") {
    if (!j.contains("rank") || !j["rank"].is_number_integer()) throw InputError("dnak algebra needs an integer \"rank\"");
    long r = j["rank"].get<long>();
    if (r < 2) throw InputError("Double Nakayama algebra needs rank r >= 2");
    return make_dnak_algebra(static_cast<std::size_t>(r));
  }
  throw InputError("unknown algebra family '" + family + "'");
}

nlohmann::json module_to_json(const ModuleRep& m) {
  nlohmann::json actions = nlohmann::json::object();
  for (std::size_t g = 0; g < m.actions.size(); ++g) {
    actions[m.algebra->generators()[g].name] = matrix_to_json(m.actions[g]);
  }
  return {{"algebra", algebra_to_json(*m.algebra)}, {"dim", m.dim}, {"blocks", m.blocks}, {"actions", actions}};
}

ModuleRep module_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("module must be a JSON object");
  for (const char* key : {"algebra", "dim", "blocks", "actions"}) {
    if (!j.contains(key)) throw InputError(std::string("module is missing \"") + key + "\"");
  }
  ModuleRep m = zero_module(algebra_from_json(j["algebra"]));
  if (!j["dim"].is_number_unsigned()) throw InputError("module \"dim\" must be a nonnegative integer");
  m.dim = j["dim"].get<std::size_t>();
  try {
    m.blocks = j["blocks"].get<std::vector<std::vector<std::size_t>>>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("module \"blocks\" must be a list of index lists");
  }
  if (m.blocks.size() != m.algebra->vertices()) throw InputError("module needs one block per vertex");
  const auto& actions = j["actions"];
  if (!actions.is_object()) throw InputError("module \"actions\" must be an object keyed by generator");
  for (std::size_t g = 0; g < m.algebra->generators().size(); ++g) {
    const std::string& name = m.algebra->generators()[g].name;
    if (!actions.contains(name)) throw InputError("module has no action for generator '" + name + "'");
    m.actions[g] = matrix_from_json<RatFun>(actions[name]);
    if (m.actions[g].rows() != m.dim || m.actions[g].cols() != m.dim) {
      throw InputError("action of '" + name + "' does not match the module dimension");
    }
  }
  if (!satisfies_relations(m)) throw HypothesisError("module actions violate the algebra relations");
  return m;
}

}  // namespace extfin
