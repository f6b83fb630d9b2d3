#pragma once

#include <string>
#include <vector>

#include "extfin/exactnum/polynomial.hpp"
#include "extfin/exactnum/rational.hpp"

namespace extfin {

/// Polynomial with arbitrary-precision integer coefficients, ascending by
/// degree, leading coefficient nonzero (zero polynomial = empty list).
/// Carries characteristic polynomials and the Chebyshev polynomials f_k.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) : IntPolynomial(std::vector<BigInt>{BigInt(c)}) {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial variable() { return IntPolynomial(std::vector<BigInt>{0, 1}); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  Rational eval(const Rational& at) const;
  Polynomial to_rational() const;
  /// Rendered in the variable x, highest degree first: "x^3 - 2*x".
  std::string to_string(const std::string& var = "x") const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// a / b when b divides a exactly in Z[x]; throws InconsistencyError otherwise.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace extfin
