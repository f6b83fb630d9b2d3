#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "extfin/dynamics/dimvector.hpp"
#include "extfin/linalg/matrix.hpp"
#include "extfin/modcat/algebra.hpp"

namespace extfin {

using Vectors = std::vector<std::vector<RatFun>>;

/// Left module given by one action matrix per algebra generator (acting on
/// column vectors) and, per vertex v, the basis indices spanning e_v M.
struct ModuleRep {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<ExactMatrix> actions;

  std::size_t vertex_of(std::size_t index) const;
  const ExactMatrix& action(const std::string& generator) const;
  std::vector<std::size_t> block_dims() const;
};

ModuleRep zero_module(const AlgebraPtr& algebra);
ModuleRep simple_module(const AlgebraPtr& algebra, std::size_t vertex);
/// P_v = A e_v, basis the paths starting at v, ordered by end vertex and then length.
ModuleRep projective_module(const AlgebraPtr& algebra, std::size_t vertex);
/// The paths of P_v in the order used by projective_module.
std::vector<std::size_t> projective_basis(const Algebra& algebra, std::size_t vertex);
ModuleRep regular_module(const AlgebraPtr& algebra);
/// C(λ) over Λ(q) on basis (top, socle): x e_1 = e_2, y e_1 = λ e_2.
/// Throws InputError for λ = 0.
ModuleRep make_C_module(const RatFun& lam, const AlgebraPtr& qext = nullptr);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts);

ExactMatrix vertex_projector(const ModuleRep& m, std::size_t vertex);
/// Action of an algebra basis path.
ExactMatrix act_path(const ModuleRep& m, std::size_t basis_index);
/// Action of a dense algebra element.
ExactMatrix act_element(const ModuleRep& m, const std::vector<RatFun>& element);

/// True when every generator respects the vertex blocks and g * p acts as
/// the product g p for every generator g and basis path p.
bool satisfies_relations(const ModuleRep& m);
/// Throws InconsistencyError unless satisfies_relations.
void check_module(const ModuleRep& m);

/// RREF bases of JM and of the annihilator of J.
Vectors radical(const ModuleRep& m);
Vectors socle(const ModuleRep& m);
bool same_subspace(const Vectors& a, const Vectors& b, std::size_t n);
/// Per-vertex dimensions of a block-homogeneous subspace.
std::vector<std::size_t> subspace_dims(const ModuleRep& m, const Vectors& basis);
std::vector<std::size_t> top_dims(const ModuleRep& m);

/// Submodule on the given block-homogeneous, independent vectors (in that
/// order). Throws InconsistencyError if they do not span a submodule.
ModuleRep submodule(const ModuleRep& m, const Vectors& basis);
/// M / U for a submodule U. `projection`, if given, receives the quotient map.
ModuleRep quotient_module(const ModuleRep& m, const Vectors& sub, ExactMatrix* projection = nullptr);
/// Same module on the basis given by the columns of `basis`, whose columns
/// must be block-homogeneous.
ModuleRep change_basis(const ModuleRep& m, const ExactMatrix& basis);

struct NormalizedModule {
  ModuleRep module;
  ExactMatrix basis;  // new basis vectors as columns, in old coordinates
};
/// Vertex-major basis; within a vertex, top representatives before a basis of the radical.
NormalizedModule normalize(const ModuleRep& m);

struct ProjectiveCover {
  ModuleRep projective;
  ExactMatrix epi;                  // dim M x dim P
  std::vector<std::size_t> tops;    // vertex of each indecomposable summand
};
ProjectiveCover projective_cover(const ModuleRep& m);

struct Syzygy {
  ModuleRep omega;
  ExactMatrix inclusion;  // dim P x dim Ω, columns in P coordinates
  ProjectiveCover cover;
};
Syzygy syzygy_with_inclusion(const ModuleRep& m);
/// Ω(M), normalized. With strip, projective summands are removed as well.
ModuleRep syzygy(const ModuleRep& m, bool strip = false);
ModuleRep syzygy_power(const ModuleRep& m, std::size_t k);

struct StrippedModule {
  ModuleRep core;
  std::vector<std::size_t> simple_count;
  std::vector<std::size_t> projective_count;
};
/// Number of summands P_v of M, as the rank of the socle element of P_v on M.
std::vector<std::size_t> projective_summand_counts(const ModuleRep& m);
StrippedModule strip_summands(const ModuleRep& m);

enum class DimVectorMode {
  /// Requires soc M = rad M (no simple or projective summands).
  strict,
  /// Reads s from rad M; simple modules give (1 | 0).
  tolerant,
};
/// t = dim of the top per vertex, s = socle (strict) or radical (tolerant).
/// Strict mode throws HypothesisError when soc M != rad M.
DimVector dim_vector(const ModuleRep& m, DimVectorMode mode = DimVectorMode::strict);

/// λ with M ≅ C(λ), for a 2-dimensional Λ(q)-module with 1-dimensional top.
std::optional<RatFun> c_module_parameter(const ModuleRep& m);

/// An invertible intertwiner M -> N found among deterministic combinations
/// of a Hom basis, or nullopt.
std::optional<ExactMatrix> find_isomorphism(const ModuleRep& m, const ModuleRep& n);
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n);

/// E read off from rad P_i / soc P_i.
QMatrix e_matrix_from_projectives(const AlgebraPtr& algebra);

}  // namespace extfin
