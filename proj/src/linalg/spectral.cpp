#include "extfin/linalg/spectral.hpp"

#include <algorithm>
#include <functional>

#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"

namespace extfin {

std::string Interval::to_string() const {
  if (is_point()) return lo.to_string();
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw MathError("interval division by an interval containing zero");
  return a * Interval{b.hi.inverse(), b.lo.inverse()};
}

Interval eval_enclosure(const IntPolynomial& p, const Interval& x) {
  Interval acc = Interval::point(Rational());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval::point(Rational(*it));
  return acc;
}

IntPolynomial det_bareiss(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial(1);
  bool negate = false;
  IntPolynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = IntPolynomial();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

void require_integer_square(const QMatrix& e) {
  if (!e.is_square()) throw InputError("characteristic polynomial needs a square matrix");
  if (!has_integer_entries(e)) throw InputError("characteristic polynomial needs integer entries");
}

// x*delta_ij - e_ij over Z[x].
std::vector<std::vector<IntPolynomial>> shifted_matrix(const QMatrix& e) {
  const std::size_t n = e.rows();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = IntPolynomial(std::vector<BigInt>{-e(i, j).numerator()});
      if (i == j) m[i][j] += IntPolynomial::variable();
    }
  }
  return m;
}

}  // namespace

IntPolynomial char_poly(const QMatrix& e) {
  require_integer_square(e);
  return det_bareiss(shifted_matrix(e));
}

SturmChain::SturmChain(const IntPolynomial& p) : SturmChain(p.to_rational()) {}

SturmChain::SturmChain(const Polynomial& f) {
  if (f.is_zero()) throw MathError("Sturm sequence of the zero polynomial");
  Polynomial g = gcd(f, f.derivative());
  Polynomial sq = divmod(f, g).first;
  chain_.push_back(sq);
  chain_.push_back(sq.derivative());
  while (!chain_.back().is_zero()) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmChain::variations(const Rational& at) const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    int sign = s.eval(at).sign();
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

int sturm_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InputError("sturm_root_count needs lo < hi");
  return SturmChain(p).count(lo, hi);
}

Interval largest_root(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                      const Rational& tolerance) {
  SturmChain chain(p);
  if (chain.count(lo, hi) == 0) throw InputError("no real root in the search interval");
  Rational a = lo;
  Rational b = hi;
  // Invariant: the largest root lies in (a, b].
  auto bisect_until = [&](const Rational& width) {
    while (b - a > width) {
      Rational mid = (a + b) / Rational(2);
      if (chain.count(mid, b) > 0) {
        a = mid;
      } else {
        b = mid;
      }
    }
  };
  bisect_until(Rational(1, 2));
  for (BigInt k = b.floor(); Rational(k) > a; --k) {
    if (p.eval(Rational(k)).is_zero() && chain.count(Rational(k), b) == 0) {
      return Interval::point(Rational(k));
    }
  }
  bisect_until(tolerance);
  return {a, b};
}

std::string to_string(SpectralBand band) {
  switch (band) {
    case SpectralBand::below_two: return "BELOW_TWO";
    case SpectralBand::equal_two: return "EQUAL_TWO";
    case SpectralBand::above_two: return "ABOVE_TWO";
  }
  return "?";
}

SpectralBand spectral_band_from_string(const std::string& text) {
  if (text == "BELOW_TWO") return SpectralBand::below_two;
  if (text == "EQUAL_TWO") return SpectralBand::equal_two;
  if (text == "ABOVE_TWO") return SpectralBand::above_two;
  throw InputError("unknown spectral class '" + text + "'");
}

Rational perron_tolerance() { return Rational(BigInt(1), BigInt("1000000000000", 10)); }

void check_perron_hypotheses(const QMatrix& e) {
  if (!e.is_square()) throw InputError("E must be square");
  if (e.rows() == 0) throw InputError("E must be non-empty");
  for (const auto& x : e.entries()) {
    if (!x.is_integer() || x.sign() < 0) {
      throw HypothesisError("E must have nonnegative integer entries");
    }
  }
  if (!e.is_symmetric()) throw HypothesisError("E must be symmetric");
  const std::size_t n = e.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && !e(i, j).is_zero()) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw HypothesisError("algebra assumed indecomposable");
  }
}

namespace {

// Column 0 of adj(xI - E), as polynomials in x.
std::vector<IntPolynomial> adjugate_column(const QMatrix& e) {
  const std::size_t n = e.rows();
  auto full = shifted_matrix(e);
  std::vector<IntPolynomial> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPolynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != i) row.push_back(full[r][c]);
      }
      minor.push_back(std::move(row));
    }
    IntPolynomial d = det_bareiss(std::move(minor));
    col[i] = (i % 2 == 0) ? d : -d;
  }
  return col;
}

// Encloses the Perron vector (scaled so entry 0 is 1) for a root known
// only up to an interval. adj(lambda I - E) is a positive rank-one matrix
// at the Perron root, so column 0 is a positive multiple of the vector.
std::vector<Interval> perron_vector_enclosure(const QMatrix& e, Interval root) {
  const std::size_t n = e.rows();
  if (n == 1) return {Interval::point(Rational(1))};
  auto col = adjugate_column(e);
  IntPolynomial p = char_poly(e);
  SturmChain chain(p);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Interval head = eval_enclosure(col[0], root);
    if (!head.contains_zero()) {
      std::vector<Interval> v(n);
      v[0] = Interval::point(Rational(1));
      for (std::size_t i = 1; i < n; ++i) v[i] = eval_enclosure(col[i], root) / head;
      return v;
    }
    Rational mid = (root.lo + root.hi) / Rational(2);
    if (chain.count(mid, root.hi) > 0) {
      root.lo = mid;
    } else {
      root.hi = mid;
    }
  }
  throw InconsistencyError("could not separate the adjugate column from zero at the Perron root");
}

}  // namespace

SpectralClass spectral_classify(const QMatrix& e) {
  check_perron_hypotheses(e);
  const std::size_t n = e.rows();
  Rational max_entry;
  for (const auto& x : e.entries()) max_entry = std::max(max_entry, x);
  const Rational bound = Rational(static_cast<long>(n)) * max_entry;

  SpectralClass out;
  out.characteristic = char_poly(e);
  const IntPolynomial& p = out.characteristic;
  SturmChain chain(p);
  const Rational two(2);
  bool above = bound > two && chain.count(two, bound) > 0;
  if (above) {
    out.band = SpectralBand::above_two;
  } else if (p.eval(two).is_zero()) {
    out.band = SpectralBand::equal_two;
  } else {
    out.band = SpectralBand::below_two;
  }

  out.perron_root = largest_root(p, Rational(-1), bound, perron_tolerance());
  if (out.perron_root.is_point()) {
    out.perron_multiplicity_one = !p.to_rational().derivative().eval(out.perron_root.lo).is_zero();
    for (const auto& x : eigenvector_exact(e, out.perron_root.lo)) out.perron_vector.push_back(Interval::point(x));
  } else {
    Polynomial f = p.to_rational();
    Polynomial repeated = gcd(f, f.derivative());
    out.perron_multiplicity_one =
        repeated.is_constant() || SturmChain(repeated).count(out.perron_root.lo, out.perron_root.hi) == 0;
    out.perron_vector = perron_vector_enclosure(e, out.perron_root);
  }
  return out;
}

std::vector<Rational> eigenvector_exact(const QMatrix& e, const Rational& lam) {
  if (!e.is_square()) throw InputError("eigenvector of a non-square matrix");
  QMatrix shifted = e - QMatrix::identity(e.rows()) * lam;
  auto basis = kernel_basis(shifted);
  if (basis.empty()) throw HypothesisError(lam.to_string() + " is not an eigenvalue of E");
  std::vector<Rational> v = basis.front();
  BigInt den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& x : v) {
    BigInt scaled = (x * Rational(den_lcm)).numerator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  int lead_sign = 0;
  for (const auto& x : v) {
    if (!x.is_zero()) {
      lead_sign = x.sign();
      break;
    }
  }
  Rational factor = Rational(den_lcm, num_gcd) * Rational(lead_sign);
  for (auto& x : v) x *= factor;
  return v;
}

}  // namespace extfin
