#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "extfin/exactnum/ratfun.hpp"
#include "extfin/linalg/matrix.hpp"

namespace extfin {

enum class AlgebraFamily { q_exterior, double_nakayama };

std::string to_string(AlgebraFamily family);

/// A path in the quiver, kept as the word of generators in product order
/// (the rightmost generator acts first). Idempotents have an empty word.
struct BasisPath {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  int length = 0;
  std::vector<std::size_t> word;
};

struct Generator {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t basis_index = 0;
};

/// Sparse element of the algebra: (basis index, coefficient) pairs.
using AlgebraTerm = std::vector<std::pair<std::size_t, RatFun>>;

/// Finite-dimensional basic algebra given by a path basis and structure
/// constants over Q(q). Products compose right to left: u * v means "v, then u".
class Algebra {
 public:
  AlgebraFamily family() const { return family_; }
  /// Vertex count for the Double Nakayama family, 1 for the q-exterior algebra.
  std::size_t rank() const { return rank_; }
  std::size_t vertices() const { return vertices_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisPath>& basis() const { return basis_; }
  const std::vector<Generator>& generators() const { return generators_; }
  /// Basis index of the idempotent at vertex v.
  std::size_t idempotent(std::size_t v) const { return idempotents_[v]; }
  /// Basis indices of the length-two paths, one per vertex.
  const std::vector<std::size_t>& socle_basis() const { return socle_; }
  /// The deformation parameter t (q^{-r}) for Double Nakayama, q for Λ(q).
  const RatFun& parameter() const { return parameter_; }

  const AlgebraTerm& product(std::size_t u, std::size_t v) const { return table_[u][v]; }
  /// Dense coefficient vectors.
  std::vector<RatFun> multiply(const std::vector<RatFun>& a, const std::vector<RatFun>& b) const;
  std::vector<RatFun> unit_vector(std::size_t basis_index) const;
  std::size_t generator_index(const std::string& name) const;

  /// E_{ij} = number of arrows i -> j, i.e. the multiplicity of S_j in rad P_i / soc P_i.
  QMatrix e_matrix() const;

  /// Associativity on all basis triples, J^3 = 0 with J^2 != 0, and the
  /// defining relations. Throws InconsistencyError naming the first failure.
  void verify() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

  friend std::shared_ptr<const Algebra> make_qext_algebra();
  friend std::shared_ptr<const Algebra> make_dnak_algebra(std::size_t r);

 private:
  Algebra() = default;

  AlgebraFamily family_ = AlgebraFamily::q_exterior;
  std::size_t rank_ = 1;
  std::size_t vertices_ = 1;
  std::vector<BasisPath> basis_;
  std::vector<Generator> generators_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> socle_;
  std::vector<std::vector<AlgebraTerm>> table_;
  RatFun parameter_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Λ(q) = K<x, y>/(x^2, y^2, xy + q yx) with basis 1, x, y, xy.
AlgebraPtr make_qext_algebra();
/// A(t) on the cyclic quiver Z_r with t = q^{-r}; per vertex i the basis
/// is e_i, a_i, b_{i-1}, b_i a_i. Throws InputError for r < 2.
AlgebraPtr make_dnak_algebra(std::size_t r);

/// x = sum_j q^{r-j} a_j and y = sum_j b_j inside A(q^{-r}).
std::pair<std::vector<RatFun>, std::vector<RatFun>> qext_embedding(const Algebra& dnak);

}  // namespace extfin
