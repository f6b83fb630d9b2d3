#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "extfin/errors.hpp"
#include "extfin/linalg/matrix.hpp"

namespace extfin {

/// Reduced row echelon form. Pivots are chosen leftmost column first,
/// topmost nonzero row within the column, so results are deterministic.
template <class T>
struct RowEchelon {
  Matrix<T> reduced;                // same shape as the input
  std::vector<std::size_t> pivots;  // pivot column of row i, i < rank
  std::size_t rank() const { return pivots.size(); }
};

template <class T>
RowEchelon<T> rref(Matrix<T> m) {
  RowEchelon<T> out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      T f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank();
}

/// Exact basis of the right null space {v : M v = 0}, one vector per
/// free column, with a 1 in that column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  RowEchelon<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of A x = b (free variables set to zero), or nullopt if
/// the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw InputError("solve: right-hand side length does not match row count");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  RowEchelon<T> e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return T();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      T f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Inverse of a square matrix; throws MathError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<T>::identity(n));
  RowEchelon<T> e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw MathError("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

/// Basis of the row space, as the nonzero rows of the RREF.
template <class T>
std::vector<std::vector<T>> row_space_basis(const Matrix<T>& m) {
  RowEchelon<T> e = rref(m);
  std::vector<std::vector<T>> rows;
  for (std::size_t i = 0; i < e.rank(); ++i) rows.push_back(e.reduced.row(i));
  return rows;
}

/// Basis of the column space (image), as RREF rows of the transpose.
template <class T>
std::vector<std::vector<T>> column_space_basis(const Matrix<T>& m) {
  return row_space_basis(m.transpose());
}

/// Matrix whose columns are the given vectors, each of length n.
template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols, std::size_t n) {
  Matrix<T> m(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

/// Matrix whose rows are the given vectors, each of length n.
template <class T>
Matrix<T> from_rows(const std::vector<std::vector<T>>& rows, std::size_t n) {
  Matrix<T> m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

/// Indices of the unit vectors that complete the row space of `rows`
/// (length-n vectors) to a basis of the whole space: the non-pivot
/// columns of its RREF.
template <class T>
std::vector<std::size_t> complement_coordinates(const std::vector<std::vector<T>>& rows, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  if (!rows.empty()) {
    for (auto p : rref(from_rows(rows, n)).pivots) is_pivot[p] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) out.push_back(i);
  }
  return out;
}

}  // namespace extfin
