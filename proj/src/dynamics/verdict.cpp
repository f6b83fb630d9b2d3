#include "extfin/dynamics/verdict.hpp"

#include "extfin/errors.hpp"

namespace extfin {

namespace {

bool is_double_nakayama_shape(const QMatrix& e) {
  if (e.rows() < 2) return false;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    if (!e(i, i).is_zero()) return false;
    Rational row;
    for (std::size_t j = 0; j < e.cols(); ++j) row += e(i, j);
    if (row != Rational(2)) return false;
  }
  return true;
}

std::string perron_vector_text(const SpectralClass& sc) {
  std::string out = "(";
  for (std::size_t i = 0; i < sc.perron_vector.size(); ++i) {
    out += (i ? ", " : "") + sc.perron_vector[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::q_exterior: return "Q_EXTERIOR";
    case FamilyTag::double_nakayama: return "DOUBLE_NAKAYAMA";
    case FamilyTag::other: return "OTHER";
  }
  return "OTHER";
}

FamilyTag family_tag_from_string(const std::string& text) {
  if (text == "Q_EXTERIOR") return FamilyTag::q_exterior;
  if (text == "DOUBLE_NAKAYAMA") return FamilyTag::double_nakayama;
  if (text == "OTHER") return FamilyTag::other;
  throw InputError("unknown family tag '" + text + "'");
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::ext_finite_exists: return "EXT_FINITE_EXISTS";
    case Conclusion::none_exist: return "NONE_EXIST";
    case Conclusion::needs_family_data: return "NEEDS_FAMILY_DATA";
  }
  return "NEEDS_FAMILY_DATA";
}

Conclusion conclusion_from_string(const std::string& text) {
  if (text == "EXT_FINITE_EXISTS") return Conclusion::ext_finite_exists;
  if (text == "NONE_EXIST") return Conclusion::none_exist;
  if (text == "NEEDS_FAMILY_DATA") return Conclusion::needs_family_data;
  throw InputError("unknown conclusion '" + text + "'");
}

Verdict extfinite_verdict(const QMatrix& e, std::optional<FamilyTag> family, std::optional<bool> parameter_generic) {
  Verdict v;
  v.spectral = spectral_classify(e);
  v.family = family;
  v.parameter_generic = parameter_generic;
  if (family == FamilyTag::q_exterior && !(e.rows() == 1 && e(0, 0) == Rational(2))) {
    throw HypothesisError("family Q_EXTERIOR needs E = [[2]]");
  }
  if (family == FamilyTag::double_nakayama && !is_double_nakayama_shape(e)) {
    throw HypothesisError("family DOUBLE_NAKAYAMA needs zero diagonal and row sums 2");
  }

  const SpectralClass& sc = v.spectral;
  v.evidence.push_back("spectral class " + to_string(sc.band));
  v.evidence.push_back("Perron root " + sc.perron_root.to_string() + (sc.perron_exact() ? " (exact)" : " (enclosure)"));
  v.evidence.push_back("Perron vector " + perron_vector_text(sc));

  switch (sc.band) {
    case SpectralBand::above_two:
      v.conclusion = Conclusion::none_exist;
      v.evidence.push_back("lambda > 2: beta/alpha + alpha/beta = lambda has no admissible solution, so no ext-finite non-projective module");
      return v;
    case SpectralBand::below_two:
      v.conclusion = Conclusion::none_exist;
      v.evidence.push_back("lambda < 2: (Fg) holds, so every non-projective module has infinitely many nonzero self-extensions");
      return v;
    case SpectralBand::equal_two:
      break;
  }
  if (!family) {
    v.conclusion = Conclusion::needs_family_data;
    v.evidence.push_back("lambda = 2: the answer depends on the Morita class and the deformation parameter, which E does not determine");
    return v;
  }
  if (*family == FamilyTag::other) {
    v.conclusion = Conclusion::none_exist;
    v.evidence.push_back("lambda = 2 but the algebra is neither a q-exterior nor a Double Nakayama algebra up to Morita equivalence");
    return v;
  }
  if (!parameter_generic) {
    v.conclusion = Conclusion::needs_family_data;
    v.evidence.push_back("lambda = 2 and family " + to_string(*family) + ", but it is unknown whether the parameter is a root of unity");
    return v;
  }
  if (!*parameter_generic) {
    v.conclusion = Conclusion::none_exist;
    v.evidence.push_back("lambda = 2 and family " + to_string(*family) + " with a root-of-unity parameter: (Fg) holds");
    return v;
  }
  v.conclusion = Conclusion::ext_finite_exists;
  v.evidence.push_back("lambda = 2 and family " + to_string(*family) +
                       " with a parameter that is not a root of unity: C(lambda) (or its induced module) is ext-finite and not projective");
  return v;
}

}  // namespace extfin
