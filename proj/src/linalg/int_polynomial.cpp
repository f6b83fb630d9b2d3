#include "extfin/linalg/int_polynomial.hpp"

#include "extfin/errors.hpp"

namespace extfin {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPolynomial::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += Rational(*it);
  }
  return acc;
}

Polynomial IntPolynomial::to_rational() const {
  std::vector<Rational> c;
  for (const auto& x : coeffs_) c.emplace_back(x);
  return Polynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const BigInt& c = coeffs_[idx];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (idx == 0 || mag != 1) out += mag.get_str();
    if (idx > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (idx > 1) out += "^" + std::to_string(idx);
    }
  }
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw MathError("division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InconsistencyError("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigInt(0));
  const BigInt& lead = bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InconsistencyError("inexact polynomial division");
    }
    BigInt f = top / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= f * bc[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw InconsistencyError("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

}  // namespace extfin
