#include "extfin/exactnum/ratfun.hpp"

#include "extfin/errors.hpp"

namespace extfin {

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  return divmod(a, b).first;
}

bool single_term(const Polynomial& p) { return p.is_zero() || p.is_monomial(); }

}  // namespace

RatFun RatFun::normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw MathError("division by zero");
  if (num.is_zero()) return RatFun();
  Polynomial g = gcd(num, den);
  Polynomial n = exact_quotient(num, g);
  Polynomial d = exact_quotient(den, g);
  Rational lead = d.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return RatFun(std::move(n), std::move(d), 0);
}

RatFun RatFun::q_power(long k) {
  if (k >= 0) return RatFun(Polynomial::monomial(Rational(1), static_cast<std::size_t>(k)));
  return RatFun(Polynomial(Rational(1)), Polynomial::monomial(Rational(1), static_cast<std::size_t>(-k)), 0);
}

std::optional<Rational> RatFun::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

Rational RatFun::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero()) throw MathError("pole at q = " + at.to_string());
  return num_.eval(at) / d;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  Rational lead = num_.leading().inverse();
  return RatFun(den_.scaled(lead), num_.scaled(lead), 0);
}

RatFun RatFun::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFun result(1);
  RatFun base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (!single_term(num_)) n = "(" + n + ")";
  if (!single_term(den_) || den_.leading() != Rational(1)) d = "(" + d + ")";
  return n + "/" + d;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  Polynomial d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, 0); }

}  // namespace extfin
