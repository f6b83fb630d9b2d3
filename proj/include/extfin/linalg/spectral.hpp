#pragma once

#include <string>
#include <vector>

#include "extfin/exactnum/polynomial.hpp"
#include "extfin/exactnum/rational.hpp"
#include "extfin/linalg/int_polynomial.hpp"
#include "extfin/linalg/matrix.hpp"

namespace extfin {

/// Closed rational interval [lo, hi]; a point when lo == hi.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& v) { return {v, v}; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  Rational width() const { return hi - lo; }
  /// "p/q" for points, "[lo, hi]" otherwise.
  std::string to_string() const;

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws MathError when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) = default;
};

/// Enclosure of p over x by interval Horner evaluation.
Interval eval_enclosure(const IntPolynomial& p, const Interval& x);

/// det(xI - E) for a square integer matrix, by fraction-free (Bareiss)
/// elimination over Z[x].
IntPolynomial char_poly(const QMatrix& e);

/// Determinant of a matrix over Z[x] by Bareiss elimination.
IntPolynomial det_bareiss(std::vector<std::vector<IntPolynomial>> m);

/// Sturm chain of the squarefree part of p.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);
  explicit SturmChain(const Polynomial& p);
  /// Sign variations of the chain at `at`, zeros skipped.
  int variations(const Rational& at) const;
  /// Distinct real roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Polynomial> chain_;
};

/// Number of distinct real roots of p in (lo, hi]. Throws MathError for
/// p = 0 and InputError unless lo < hi.
int sturm_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Largest real root of p, which must lie in (lo, hi]: exact when it is an
/// integer, otherwise an enclosure of width at most `tolerance`.
Interval largest_root(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                      const Rational& tolerance);

enum class SpectralBand { below_two, equal_two, above_two };

std::string to_string(SpectralBand band);
SpectralBand spectral_band_from_string(const std::string& text);

/// Largest eigenvalue of E compared with 2, plus Perron data.
struct SpectralClass {
  SpectralBand band = SpectralBand::below_two;
  bool perron_multiplicity_one = false;
  /// Exact point when the Perron root is rational.
  Interval perron_root;
  /// Exact primitive integer vector when the root is rational, otherwise
  /// certified enclosures of the vector scaled to first entry 1.
  std::vector<Interval> perron_vector;
  IntPolynomial characteristic;

  bool perron_exact() const { return perron_root.is_point(); }
};

/// Width bound for irrational Perron root enclosures (10^-12).
Rational perron_tolerance();

/// Checks E is square, symmetric, with nonnegative integer entries and
/// irreducible (connected support graph). Throws HypothesisError with the
/// violated hypothesis otherwise.
void check_perron_hypotheses(const QMatrix& e);

SpectralClass spectral_classify(const QMatrix& e);

/// Kernel vector of (E - lam I) scaled to coprime integers with the first
/// nonzero entry positive. Throws HypothesisError if lam is not an eigenvalue.
std::vector<Rational> eigenvector_exact(const QMatrix& e, const Rational& lam);

}  // namespace extfin
