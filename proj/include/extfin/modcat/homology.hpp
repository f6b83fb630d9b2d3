#pragma once

#include <cstddef>
#include <vector>

#include "extfin/modcat/module.hpp"

namespace extfin {

struct HomSpace {
  std::vector<ExactMatrix> basis;  // dim N x dim M intertwiners
  std::size_t dim() const { return basis.size(); }
};

/// Exact basis of Hom_A(M, N). Throws InputError for modules over different algebras.
HomSpace hom_space(const ModuleRep& m, const ModuleRep& n);

/// dim Hom(M, N) minus the maps factoring through the projective cover of N.
std::size_t stable_hom_dim(const ModuleRep& m, const ModuleRep& n);

/// dim Ext^k(M, N) as the stable Hom from Ω^k M. Throws InputError for k < 1.
std::size_t ext_dim(const ModuleRep& m, const ModuleRep& n, std::size_t k);

/// dim Ext^k(M, N) as the cohomology of Hom(P_•, N) for the minimal
/// projective resolution P_• of M.
std::size_t ext_dim_cochain(const ModuleRep& m, const ModuleRep& n, std::size_t k);

}  // namespace extfin
