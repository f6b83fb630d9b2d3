#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extfin/linalg/int_polynomial.hpp"
#include "extfin/linalg/matrix.hpp"

namespace extfin {

/// f_k of the recurrence f_0 = 1, f_1 = x, f_k = x f_{k-1} - f_{k-2}.
/// Throws InputError for k < 0.
IntPolynomial cheb_poly(long k);

/// f_k(x) for k >= -2, using f_{-1} = 0 and f_{-2} = -1.
Rational cheb_value(long k, const Rational& x);

/// f_0(E), ..., f_K(E).
struct ChebSequence {
  ExactMatrix base;
  std::vector<ExactMatrix> matrices;

  const ExactMatrix& operator[](std::size_t k) const { return matrices[k]; }
  std::size_t depth() const { return matrices.size() - 1; }
};

/// Throws InputError if E is not square or K < 1.
ChebSequence cheb_matrix_seq(const ExactMatrix& e, std::size_t depth);

/// f_k(E) for k >= -2 with the same boundary conventions as cheb_value.
ExactMatrix cheb_matrix(const ExactMatrix& e, long k);

/// The blocks of X^k, X = [[E, -I], [I, 0]]:
/// [[f_k(E), -f_{k-1}(E)], [f_{k-1}(E), -f_{k-2}(E)]].
struct XPowerBlocks {
  ExactMatrix top_left;
  ExactMatrix top_right;
  ExactMatrix bottom_left;
  ExactMatrix bottom_right;
  long k = 0;

  ExactMatrix assemble() const;
};

XPowerBlocks x_power_blocks(const ExactMatrix& e, long k);

struct Periodicity {
  std::size_t period = 0;
  std::size_t preperiod = 0;
};

/// Smallest period p (then smallest preperiod s) with f_{m+p}(E) = f_m(E)
/// for all m >= s, found with s + p <= bound. Because the recurrence has
/// order two, equality of the pairs (f_s, f_{s+1}) and (f_{s+p}, f_{s+p+1})
/// certifies it for every later m.
std::optional<Periodicity> detect_periodicity(const ExactMatrix& e, std::size_t bound);

/// Row m holds (f_m(mu_1), ..., f_m(mu_r)) for m_start <= m <= m_end.
std::vector<std::vector<Rational>> eigenvalue_row_table(const std::vector<Rational>& eigvals, long m_start,
                                                        long m_end);

/// One row per line, entries tab separated.
std::string format_row_table(const std::vector<std::vector<Rational>>& rows);
std::vector<std::vector<Rational>> parse_row_table(const std::string& text);

}  // namespace extfin
