#pragma once

#include <json.hpp>

#include "extfin/modcat/module.hpp"

namespace extfin {

nlohmann::json algebra_to_json(const Algebra& algebra);
/// {"family": "qext"} or {"family": "dnak", "rank": r}.
AlgebraPtr algebra_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const ModuleRep& m);
/// Throws InputError on malformed input and HypothesisError when the
/// actions violate the algebra relations.
ModuleRep module_from_json(const nlohmann::json& j);

}  // namespace extfin
