#pragma once

#include <json.hpp>

#include "extfin/dynamics/dynamics.hpp"
#include "extfin/dynamics/verdict.hpp"

namespace extfin {

/// "p/q" for a point, {"lo": "...", "hi": "..."} otherwise.
nlohmann::json interval_to_json(const Interval& i);
Interval interval_from_json(const nlohmann::json& j);

/// {"band", "perron_root", "perron_vector", "perron_multiplicity_one", "characteristic"}.
nlohmann::json spectral_to_json(const SpectralClass& sc);
SpectralClass spectral_from_json(const nlohmann::json& j);

nlohmann::json perron_projection_to_json(const PerronProjection& p);
PerronProjection perron_projection_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace extfin
