#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extfin/exactnum/rational.hpp"

namespace extfin {

/// Univariate polynomial over the rationals, coefficients ascending by
/// degree. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  Rational leading() const { return is_zero() ? Rational() : coeffs_.back(); }
  /// Number of zero low-order coefficients (the power of the variable dividing it).
  std::size_t valuation() const;
  bool is_monomial() const;

  Rational eval(const Rational& at) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  /// Divides by var^k; requires valuation() >= k.
  Polynomial shifted_down(std::size_t k) const;
  Polynomial shifted_up(std::size_t k) const;

  std::string to_string(const std::string& var = "q") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws MathError for b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace extfin
