#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extfin/dynamics/dimvector.hpp"
#include "extfin/linalg/matrix.hpp"
#include "extfin/linalg/spectral.hpp"

namespace extfin {

/// X = [[E, -I], [I, 0]]. Throws InputError unless E is square.
QMatrix build_X(const QMatrix& e);

/// v0, X v0, ..., X^k v0. Throws HypothesisError as soon as an iterate has
/// a negative component.
std::vector<DimVector> iterate_dimvec(const QMatrix& e, const DimVector& v0, std::size_t k);

/// (s | -t) . X^{k+1} (t | s).
Rational orthogonality_defect(const QMatrix& e, const DimVector& v, std::size_t k);

/// s E f_k(E) t - t f_k(E) t - s f_k(E) s, for k >= 1 and symmetric E.
Rational expand_3k(const QMatrix& e, const DimVector& v, std::size_t k);

/// Pairings of s and t with the Perron vector.
struct PerronProjection {
  Interval alpha1;
  Interval beta1;
  Interval lam;

  bool exact() const { return alpha1.is_point() && beta1.is_point() && lam.is_point(); }
};

/// Throws InputError for the zero vector or a length mismatch; spectral
/// hypotheses as in spectral_classify.
PerronProjection perron_projection(const QMatrix& e, const DimVector& v);
PerronProjection perron_projection(const SpectralClass& spectral, const DimVector& v);

/// beta1/alpha1 + alpha1/beta1 - lambda, a point when the inputs are exact.
/// Throws InputError if alpha1 or beta1 may vanish.
Interval check_quadratic_constraint(const PerronProjection& p);

/// lambda beta1 - alpha1. Throws InputError unless p is exact.
Rational lemma36_step(const PerronProjection& p);

/// Distinct eigenvalues of a symmetric integer matrix, ascending, or
/// nullopt when some eigenvalue is irrational.
std::optional<std::vector<Rational>> rational_spectrum(const QMatrix& e);

/// Orthogonal projection onto the mu-eigenspace of symmetric E, as the
/// Lagrange polynomial in E over the given spectrum.
QMatrix eigenspace_projector(const QMatrix& e, const std::vector<Rational>& spectrum, std::size_t j);

struct CoefficientEntry {
  Rational eigenvalue;
  Rational c;
};

/// c_j = mu_j (s P_j t) - (t P_j t) - (s P_j s) per distinct eigenvalue mu_j.
/// Throws HypothesisError when the spectrum is not rational.
std::vector<CoefficientEntry> coefficient_vector_c(const QMatrix& e, const DimVector& v);

struct ViolationCertificate {
  /// "coefficients" or "defect".
  std::string method;
  /// Degree of the nonzero defect (defect method only).
  std::optional<std::size_t> degree;
  Rational value;
  std::string to_string() const;
};

/// Evidence that no module with Ext^k(M, M) = 0 for all large k has
/// dimension vector v: a nonzero c_j, or a nonzero defect for some
/// 1 <= k <= depth. nullopt if neither is found.
std::optional<ViolationCertificate> certify_violation(const QMatrix& e, const DimVector& v, std::size_t depth = 10);

}  // namespace extfin
