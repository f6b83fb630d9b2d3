#include "extfin/dynamics/dynamics.hpp"

#include <algorithm>

#include "extfin/chebyshev/chebyshev.hpp"
#include "extfin/errors.hpp"

namespace extfin {

namespace {

void check_lengths(const QMatrix& e, const DimVector& v) {
  if (!e.is_square()) throw InputError("E must be square");
  if (v.n() != e.rows()) throw InputError("dimension vector length does not match E");
}

Rational form(const std::vector<Rational>& a, const QMatrix& m, const std::vector<Rational>& b) {
  return dot(a, m * b);
}

std::vector<Rational> as_rationals(const std::vector<BigInt>& v) { return {v.begin(), v.end()}; }

void check_symmetric_integer(const QMatrix& e) {
  if (!e.is_square()) throw InputError("E must be square");
  if (!e.is_symmetric()) throw HypothesisError("E must be symmetric");
  if (!has_integer_entries(e)) throw HypothesisError("E must have integer entries");
}

}  // namespace

QMatrix build_X(const QMatrix& e) {
  if (!e.is_square()) throw InputError("E must be square");
  const std::size_t n = e.rows();
  QMatrix x(2 * n, 2 * n);
  x.set_block(0, 0, e);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, n + i) = Rational(-1);
    x(n + i, i) = Rational(1);
  }
  return x;
}

std::vector<DimVector> iterate_dimvec(const QMatrix& e, const DimVector& v0, std::size_t k) {
  check_lengths(e, v0);
  if (!v0.is_nonnegative()) throw InputError("dimension vector has a negative component");
  QMatrix x = build_X(e);
  std::vector<DimVector> out{v0};
  std::vector<Rational> cur = v0.stacked();
  for (std::size_t m = 0; m < k; ++m) {
    cur = x * cur;
    DimVector next = DimVector::from_stacked(cur);
    if (!next.is_nonnegative()) {
      throw HypothesisError(
          "trajectory left the module cone — hypothesis 'Ω^r(M) not simple' violated or v0 not realizable");
    }
    out.push_back(std::move(next));
  }
  return out;
}

Rational orthogonality_defect(const QMatrix& e, const DimVector& v, std::size_t k) {
  check_lengths(e, v);
  QMatrix x = build_X(e);
  std::vector<Rational> w = v.stacked();
  for (std::size_t i = 0; i <= k; ++i) w = x * w;
  std::vector<Rational> pair = as_rationals(v.s);
  for (const auto& t : v.t) pair.emplace_back(-t);
  return dot(pair, w);
}

Rational expand_3k(const QMatrix& e, const DimVector& v, std::size_t k) {
  check_lengths(e, v);
  if (k < 1) throw InputError("expand_3k needs k >= 1");
  if (!e.is_symmetric()) throw HypothesisError("E must be symmetric");
  ChebSequence seq = cheb_matrix_seq(to_exact(e), k);
  QMatrix fk = to_rational(seq[k]);
  std::vector<Rational> t = as_rationals(v.t), s = as_rationals(v.s);
  return form(s, e * fk, t) - form(t, fk, t) - form(s, fk, s);
}

PerronProjection perron_projection(const QMatrix& e, const DimVector& v) {
  check_lengths(e, v);
  return perron_projection(spectral_classify(e), v);
}

PerronProjection perron_projection(const SpectralClass& spectral, const DimVector& v) {
  if (v.n() != spectral.perron_vector.size()) throw InputError("dimension vector length does not match E");
  if (v.is_zero()) throw InputError("perron_projection needs a nonzero dimension vector");
  PerronProjection p{Interval::point(Rational()), Interval::point(Rational()), spectral.perron_root};
  for (std::size_t i = 0; i < v.n(); ++i) {
    p.alpha1 = p.alpha1 + Interval::point(Rational(v.s[i])) * spectral.perron_vector[i];
    p.beta1 = p.beta1 + Interval::point(Rational(v.t[i])) * spectral.perron_vector[i];
  }
  return p;
}

Interval check_quadratic_constraint(const PerronProjection& p) {
  if (p.alpha1.contains_zero() || p.beta1.contains_zero()) {
    throw InputError("quadratic constraint needs nonzero alpha1 and beta1");
  }
  return p.beta1 / p.alpha1 + p.alpha1 / p.beta1 - p.lam;
}

Rational lemma36_step(const PerronProjection& p) {
  if (!p.exact()) throw InputError("lemma36_step needs exact Perron data");
  return p.lam.lo * p.beta1.lo - p.alpha1.lo;
}

std::optional<std::vector<Rational>> rational_spectrum(const QMatrix& e) {
  check_symmetric_integer(e);
  IntPolynomial p = char_poly(e);
  // Rational eigenvalues of an integer matrix are integers bounded by the
  // largest absolute row sum.
  BigInt bound = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < e.cols(); ++j) row += abs(e(i, j).numerator());
    bound = std::max(bound, row);
  }
  std::vector<Rational> roots;
  for (BigInt z = -bound; z <= bound && p.degree() > 0; ++z) {
    bool found = false;
    while (p.degree() > 0 && p.eval(Rational(z)).is_zero()) {
      p = exact_divide(p, IntPolynomial(std::vector<BigInt>{-z, 1}));
      found = true;
    }
    if (found) roots.emplace_back(z);
  }
  if (p.degree() > 0) return std::nullopt;
  return roots;
}

QMatrix eigenspace_projector(const QMatrix& e, const std::vector<Rational>& spectrum, std::size_t j) {
  const std::size_t n = e.rows();
  QMatrix proj = QMatrix::identity(n);
  for (std::size_t l = 0; l < spectrum.size(); ++l) {
    if (l == j) continue;
    QMatrix factor = e;
    for (std::size_t i = 0; i < n; ++i) factor(i, i) -= spectrum[l];
    factor *= Rational(1) / (spectrum[j] - spectrum[l]);
    proj = proj * factor;
  }
  return proj;
}

std::vector<CoefficientEntry> coefficient_vector_c(const QMatrix& e, const DimVector& v) {
  check_lengths(e, v);
  auto spectrum = rational_spectrum(e);
  if (!spectrum) throw HypothesisError("exact c_j requires rational spectrum; use orthogonality_defect instead");
  std::vector<Rational> t = as_rationals(v.t), s = as_rationals(v.s);
  std::vector<CoefficientEntry> out;
  for (std::size_t j = 0; j < spectrum->size(); ++j) {
    QMatrix pj = eigenspace_projector(e, *spectrum, j);
    const Rational& mu = (*spectrum)[j];
    out.push_back({mu, mu * form(s, pj, t) - form(t, pj, t) - form(s, pj, s)});
  }
  return out;
}

std::string ViolationCertificate::to_string() const {
  if (method == "defect") return "defect at k=" + std::to_string(degree.value_or(0)) + " is " + value.to_string();
  return "nonzero coefficient c = " + value.to_string();
}

std::optional<ViolationCertificate> certify_violation(const QMatrix& e, const DimVector& v, std::size_t depth) {
  check_lengths(e, v);
  if (rational_spectrum(e)) {
    for (const auto& entry : coefficient_vector_c(e, v)) {
      if (!entry.c.is_zero()) return ViolationCertificate{"coefficients", std::nullopt, entry.c};
    }
    return std::nullopt;
  }
  for (std::size_t k = 1; k <= depth; ++k) {
    Rational d = orthogonality_defect(e, v, k);
    if (!d.is_zero()) return ViolationCertificate{"defect", k, d};
  }
  return std::nullopt;
}

}  // namespace extfin
