#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extfin/linalg/matrix.hpp"
#include "extfin/linalg/spectral.hpp"

namespace extfin {

enum class FamilyTag { q_exterior, double_nakayama, other };

enum class Conclusion { ext_finite_exists, none_exist, needs_family_data };

/// "Q_EXTERIOR", "DOUBLE_NAKAYAMA", "OTHER".
std::string to_string(FamilyTag tag);
FamilyTag family_tag_from_string(const std::string& text);
/// "EXT_FINITE_EXISTS", "NONE_EXIST", "NEEDS_FAMILY_DATA".
std::string to_string(Conclusion c);
Conclusion conclusion_from_string(const std::string& text);

struct Verdict {
  SpectralClass spectral;
  std::optional<FamilyTag> family;
  std::optional<bool> parameter_generic;
  Conclusion conclusion = Conclusion::needs_family_data;
  std::vector<std::string> evidence;
};

/// Decides whether the algebra with E-matrix E has an ext-finite
/// non-projective module. A family tag must match E up to relabelling
/// vertices (HypothesisError otherwise).
Verdict extfinite_verdict(const QMatrix& e, std::optional<FamilyTag> family = std::nullopt,
                          std::optional<bool> parameter_generic = std::nullopt);

}  // namespace extfin
