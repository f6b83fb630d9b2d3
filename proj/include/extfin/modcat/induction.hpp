#pragma once

#include <cstddef>

#include "extfin/modcat/module.hpp"

namespace extfin {

/// Checks x^2 = y^2 = 0, xy + q yx = 0 and xy != 0 for the embedding of
/// Λ(q) in A(q^{-r}); throws InconsistencyError otherwise.
void verify_qext_embedding(const Algebra& dnak);

/// Ranks of A as a free left and right module over the embedded Λ(q);
/// zero when A is not free on that side.
struct FreeRanks {
  std::size_t left = 0;
  std::size_t right = 0;
};
FreeRanks qext_free_ranks(const AlgebraPtr& dnak);

/// A ⊗_Λ N for a Λ(q)-module N, as a module over A(q^{-r}).
ModuleRep induce(const ModuleRep& n, std::size_t r);
ModuleRep induce(const ModuleRep& n, const AlgebraPtr& dnak);

/// Restriction of an A(q^{-r})-module to the embedded Λ(q).
ModuleRep restrict_to_qext(const ModuleRep& m);

}  // namespace extfin
