#include "extfin/linalg/matrix.hpp"

namespace extfin {

ExactMatrix to_exact(const QMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = RatFun(m(r, c));
  }
  return out;
}

QMatrix to_rational(const ExactMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto v = m(r, c).constant_value();
      if (!v) throw InputError("matrix entry " + m(r, c).to_string() + " is not a rational constant");
      out(r, c) = *v;
    }
  }
  return out;
}

bool has_integer_entries(const QMatrix& m) {
  for (const auto& x : m.entries()) {
    if (!x.is_integer()) return false;
  }
  return true;
}

}  // namespace extfin
