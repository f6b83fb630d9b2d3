#pragma once

#include <optional>
#include <vector>

#include "extfin/exactnum/rational.hpp"

namespace extfin {

/// Row indices N, N + i_1, ..., N + i_{m-1} for which the m x m matrix
/// C[a][j] = f_{index_a}(mu_j) is nonsingular.
struct NonsingularSelection {
  long n = 0;
  std::vector<long> offsets;  // 0 < i_1 < ... < i_{m-1}
  Rational det;

  std::vector<long> indices() const;
};

enum class SelectionStrategy {
  /// Breadth first over (N, offsets), ordered by N + sum of offsets, ties
  /// broken lexicographically.
  search,
  /// Inductive elimination: pick N with f_N(mu_1) != 0, clear the first
  /// column with R_{k} + R_{k-2} - mu_1 R_{k-1}, recurse on the rest, then
  /// keep independent original rows of the window greedily.
  row_reduction,
};

long default_search_bound(std::size_t m, long n_floor);

/// The matrix C for the given indices.
std::vector<std::vector<Rational>> cheb_row_matrix(const std::vector<Rational>& eigvals,
                                                   const std::vector<long>& indices);

/// Finds N > n_floor and offsets whose largest index N + i_{m-1} stays
/// within search_bound. Throws InputError for an empty or repeated
/// eigenvalue list or n_floor < 0; nullopt means the bound was too small.
std::optional<NonsingularSelection> select_nonsingular(const std::vector<Rational>& eigvals, long n_floor,
                                                       std::optional<long> search_bound = std::nullopt,
                                                       SelectionStrategy strategy = SelectionStrategy::search);

}  // namespace extfin
