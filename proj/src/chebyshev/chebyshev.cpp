#include "extfin/chebyshev/chebyshev.hpp"

#include <sstream>

#include "extfin/errors.hpp"

namespace extfin {

IntPolynomial cheb_poly(long k) {
  if (k < 0) throw InputError("cheb_poly: index must be nonnegative");
  IntPolynomial prev(1);
  IntPolynomial cur = IntPolynomial::variable();
  if (k == 0) return prev;
  for (long i = 2; i <= k; ++i) {
    IntPolynomial next = IntPolynomial::variable() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational cheb_value(long k, const Rational& x) {
  if (k < -2) throw InputError("cheb_value: index must be at least -2");
  Rational prev(-1), cur(0);  // f_{-2}, f_{-1}
  if (k == -2) return prev;
  for (long i = -1; i < k; ++i) {
    Rational next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ChebSequence cheb_matrix_seq(const ExactMatrix& e, std::size_t depth) {
  if (!e.is_square()) throw InputError("cheb_matrix_seq: E must be square");
  if (depth < 1) throw InputError("cheb_matrix_seq: depth must be at least 1");
  ChebSequence seq;
  seq.base = e;
  seq.matrices.reserve(depth + 1);
  seq.matrices.push_back(ExactMatrix::identity(e.rows()));
  seq.matrices.push_back(e);
  for (std::size_t k = 2; k <= depth; ++k) {
    seq.matrices.push_back(e * seq.matrices[k - 1] - seq.matrices[k - 2]);
  }
  return seq;
}

ExactMatrix cheb_matrix(const ExactMatrix& e, long k) {
  if (!e.is_square()) throw InputError("cheb_matrix: E must be square");
  if (k < -2) throw InputError("cheb_matrix: index must be at least -2");
  const std::size_t n = e.rows();
  ExactMatrix prev = -ExactMatrix::identity(n);
  ExactMatrix cur(n, n);
  if (k == -2) return prev;
  for (long i = -1; i < k; ++i) {
    ExactMatrix next = e * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExactMatrix XPowerBlocks::assemble() const {
  const std::size_t n = top_left.rows();
  ExactMatrix x(2 * n, 2 * n);
  x.set_block(0, 0, top_left);
  x.set_block(0, n, top_right);
  x.set_block(n, 0, bottom_left);
  x.set_block(n, n, bottom_right);
  return x;
}

XPowerBlocks x_power_blocks(const ExactMatrix& e, long k) {
  if (k < 1) throw InputError("x_power_blocks: exponent must be at least 1");
  ExactMatrix fk2 = cheb_matrix(e, k - 2);
  ExactMatrix fk1 = cheb_matrix(e, k - 1);
  ExactMatrix fk = e * fk1 - fk2;
  XPowerBlocks b;
  b.k = k;
  b.top_left = std::move(fk);
  b.top_right = -fk1;
  b.bottom_left = std::move(fk1);
  b.bottom_right = -fk2;
  return b;
}

std::optional<Periodicity> detect_periodicity(const ExactMatrix& e, std::size_t bound) {
  if (bound < 2) throw InputError("detect_periodicity: bound must be at least 2");
  ChebSequence seq = cheb_matrix_seq(e, bound + 1);
  for (std::size_t p = 1; p <= bound; ++p) {
    for (std::size_t s = 0; s + p <= bound; ++s) {
      if (seq[s] == seq[s + p] && seq[s + 1] == seq[s + p + 1]) return Periodicity{p, s};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Rational>> eigenvalue_row_table(const std::vector<Rational>& eigvals, long m_start,
                                                        long m_end) {
  if (m_start > m_end) throw InputError("eigenvalue_row_table: m_start must not exceed m_end");
  if (m_start < 0) throw InputError("eigenvalue_row_table: m_start must be nonnegative");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m_end - m_start + 1),
                                          std::vector<Rational>(eigvals.size()));
  for (std::size_t j = 0; j < eigvals.size(); ++j) {
    Rational prev(-1), cur(0);
    for (long i = -1; i < m_end; ++i) {
      Rational next = eigvals[j] * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
      if (i + 1 >= m_start) rows[static_cast<std::size_t>(i + 1 - m_start)][j] = cur;
    }
  }
  return rows;
}

std::string format_row_table(const std::vector<std::vector<Rational>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += '\t';
      out += row[j].to_string();
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<Rational>> parse_row_table(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, '\t')) row.push_back(Rational::parse(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace extfin
