#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "extfin/exactnum/polynomial.hpp"
#include "extfin/exactnum/rational.hpp"

namespace extfin {

/// Element of Q(q), q transcendental. Canonical form: numerator and
/// denominator coprime, denominator monic. Structural equality is
/// therefore field equality.
class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  RatFun(int c) : num_(Rational(c)), den_(Rational(1)) {}
  RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFun(const Polynomial& p) : num_(p), den_(Rational(1)) {}

  /// Canonicalizing constructor. Throws MathError("division by zero") when den = 0.
  static RatFun normalize(const Polynomial& num, const Polynomial& den);

  static RatFun q() { return RatFun(Polynomial::variable()); }
  /// q^k for any integer k.
  static RatFun q_power(long k);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// The rational value for constants, nullopt otherwise.
  std::optional<Rational> constant_value() const;

  /// Exact evaluation at q = at. Throws MathError at a pole.
  Rational eval(const Rational& at) const;
  RatFun inverse() const;
  RatFun pow(long exponent) const;

  std::string to_string() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(const RatFun& a);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

 private:
  RatFun(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

/// Parses a rational-function expression in q: integers, q, + - * /,
/// ^ with integer exponents, parentheses, implicit multiplication ("2q").
/// Throws InputError on malformed text, MathError on division by zero.
RatFun parse_ratfun(std::string_view text);

}  // namespace extfin
