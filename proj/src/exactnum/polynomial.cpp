#include "extfin/exactnum/polynomial.hpp"

#include <algorithm>

#include "extfin/errors.hpp"

namespace extfin {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(degree + 1, Rational());
  p.coeffs_[degree] = c;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::valuation() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return k;
}

bool Polynomial::is_monomial() const { return !is_zero() && valuation() + 1 == coeffs_.size(); }

Rational Polynomial::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial p = *this;
  for (auto& a : p.coeffs_) a *= c;
  return p;
}

Polynomial Polynomial::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  Polynomial p;
  if (k < coeffs_.size()) p.coeffs_.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
  return p;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  Polynomial p;
  p.coeffs_.assign(k, Rational());
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag.is_one();
    if (idx == 0 || !unit) out += mag.to_string();
    if (idx > 0) {
      if (!unit) out += "*";
      out += var;
      if (idx > 1) out += "^" + std::to_string(idx);
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError("division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  Rational lead_inv = b.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational f = rem[k + bc.size() - 1] * lead_inv;
    quot[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= f * bc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Factor out the common power of the variable first; Laurent-type
  // denominators q^k make this the dominant case.
  std::size_t shift = std::min(a.valuation(), b.valuation());
  Polynomial x = a.shifted_down(a.valuation());
  Polynomial y = b.shifted_down(b.valuation());
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) {
      x = Polynomial(Rational(1));
      break;
    }
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic().shifted_up(shift);
}

}  // namespace extfin
