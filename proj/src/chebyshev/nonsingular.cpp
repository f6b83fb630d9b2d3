#include "extfin/chebyshev/nonsingular.hpp"

#include <algorithm>
#include <functional>

#include "extfin/chebyshev/chebyshev.hpp"
#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"

namespace extfin {

namespace {

// f_k(mu_j) for 0 <= k <= bound, one table per eigenvalue.
class ValueTable {
 public:
  ValueTable(const std::vector<Rational>& eigvals, long bound)
      : rows_(eigenvalue_row_table(eigvals, 0, std::max(bound, 0L))) {}

  const Rational& at(long k, std::size_t j) const { return rows_[static_cast<std::size_t>(k)][j]; }
  const std::vector<Rational>& row(long k) const { return rows_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

Rational det_of(const ValueTable& table, const std::vector<long>& indices) {
  QMatrix c(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t j = 0; j < indices.size(); ++j) c(a, j) = table.at(indices[a], j);
  }
  return determinant(c);
}

NonsingularSelection make_selection(const std::vector<long>& indices, Rational det) {
  NonsingularSelection s;
  s.n = indices.front();
  for (std::size_t a = 1; a < indices.size(); ++a) s.offsets.push_back(indices[a] - s.n);
  s.det = std::move(det);
  return s;
}

std::optional<NonsingularSelection> breadth_first(const std::vector<Rational>& eigvals, long n_floor, long bound) {
  const std::size_t m = eigvals.size();
  const long slots = static_cast<long>(m) - 1;
  ValueTable table(eigvals, bound);
  // Smallest total: N = n_floor + 1, offsets 1, 2, ..., m - 1.
  const long min_total = n_floor + 1 + slots * (slots + 1) / 2;
  const long max_total = bound + slots * bound;
  std::vector<long> offsets(static_cast<std::size_t>(slots));
  std::optional<NonsingularSelection> found;

  // Fill offsets[pos..] strictly increasing above `last`, summing to `rest`.
  std::function<bool(long, std::size_t, long, long)> fill = [&](long n, std::size_t pos, long last,
                                                                long rest) -> bool {
    const long remaining = slots - static_cast<long>(pos);
    if (remaining == 0) {
      if (rest != 0) return false;
      std::vector<long> indices{n};
      for (long off : offsets) indices.push_back(n + off);
      Rational det = det_of(table, indices);
      if (det.is_zero()) return false;
      found = make_selection(indices, std::move(det));
      return true;
    }
    for (long v = last + 1; n + v <= bound; ++v) {
      // Smallest possible sum of the remaining offsets starting at v.
      long least = remaining * v + remaining * (remaining - 1) / 2;
      if (least > rest) break;
      offsets[pos] = v;
      if (fill(n, pos + 1, v, rest - v)) return true;
    }
    return false;
  };

  for (long total = min_total; total <= max_total; ++total) {
    for (long n = n_floor + 1; n <= bound && n <= total; ++n) {
      if (fill(n, 0, 0, total - n)) return found;
    }
  }
  return std::nullopt;
}

// Indices (ascending, all > n_floor, all <= bound) of m original rows whose
// C-matrix is nonsingular, following the inductive elimination.
std::optional<std::vector<long>> eliminate(const std::vector<Rational>& eigvals, long n_floor, long bound) {
  long n = n_floor + 1;
  while (n <= bound && cheb_value(n, eigvals.front()).is_zero()) ++n;
  if (n > bound) return std::nullopt;
  if (eigvals.size() == 1) return std::vector<long>{n};

  // After clearing column one, row R_{N+j} (j >= 2) becomes
  // (0, (mu_i - mu_1) f_{N+j-1}(mu_i)), so the remaining columns form the
  // same problem on indices above N.
  std::vector<Rational> rest(eigvals.begin() + 1, eigvals.end());
  auto sub = eliminate(rest, n, bound - 1);
  if (!sub) return std::nullopt;
  const long window_end = sub->back() + 1;

  // The transformed rows lie in the span of R_N, ..., R_{window_end}; keep
  // independent original rows greedily, starting from R_N.
  ValueTable table(eigvals, window_end);
  std::vector<long> chosen;
  std::vector<std::vector<Rational>> basis;
  for (long k = n; k <= window_end && chosen.size() < eigvals.size(); ++k) {
    basis.push_back(table.row(k));
    if (rank(from_rows(basis, eigvals.size())) == basis.size()) {
      chosen.push_back(k);
    } else {
      basis.pop_back();
    }
  }
  if (chosen.size() < eigvals.size() || chosen.front() != n) {
    throw InconsistencyError("select_nonsingular: elimination window does not have full rank");
  }
  return chosen;
}

}  // namespace

std::vector<long> NonsingularSelection::indices() const {
  std::vector<long> out{n};
  for (long off : offsets) out.push_back(n + off);
  return out;
}

long default_search_bound(std::size_t m, long n_floor) {
  return 12 * static_cast<long>(m) * (n_floor + static_cast<long>(m) + 2);
}

std::vector<std::vector<Rational>> cheb_row_matrix(const std::vector<Rational>& eigvals,
                                                   const std::vector<long>& indices) {
  std::vector<std::vector<Rational>> c;
  for (long k : indices) {
    std::vector<Rational> row;
    for (const auto& mu : eigvals) row.push_back(cheb_value(k, mu));
    c.push_back(std::move(row));
  }
  return c;
}

std::optional<NonsingularSelection> select_nonsingular(const std::vector<Rational>& eigvals, long n_floor,
                                                       std::optional<long> search_bound,
                                                       SelectionStrategy strategy) {
  if (eigvals.empty()) throw InputError("select_nonsingular: eigenvalue list is empty");
  if (n_floor < 0) throw InputError("select_nonsingular: n_floor must be nonnegative");
  for (std::size_t a = 0; a < eigvals.size(); ++a) {
    for (std::size_t b = a + 1; b < eigvals.size(); ++b) {
      if (eigvals[a] == eigvals[b]) throw InputError("select_nonsingular: eigenvalues must be pairwise distinct");
    }
  }
  const long bound = search_bound.value_or(default_search_bound(eigvals.size(), n_floor));
  if (strategy == SelectionStrategy::search) return breadth_first(eigvals, n_floor, bound);

  auto indices = eliminate(eigvals, n_floor, bound);
  if (!indices) return std::nullopt;
  Rational det = determinant(from_rows(cheb_row_matrix(eigvals, *indices), eigvals.size()));
  if (det.is_zero()) throw InconsistencyError("select_nonsingular: eliminated rows are singular");
  return make_selection(*indices, std::move(det));
}

}  // namespace extfin
