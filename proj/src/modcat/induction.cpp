#include "extfin/modcat/induction.hpp"

#include <algorithm>

#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"

namespace extfin {

namespace {

// Right multiplication by an algebra element, as a matrix on A.
ExactMatrix right_multiplication(const Algebra& algebra, const std::vector<RatFun>& element) {
  ExactMatrix r(algebra.dim(), algebra.dim());
  for (std::size_t a = 0; a < algebra.dim(); ++a) r.set_col(a, algebra.multiply(algebra.unit_vector(a), element));
  return r;
}

}  // namespace

void verify_qext_embedding(const Algebra& dnak) {
  auto [x, y] = qext_embedding(dnak);
  const std::vector<RatFun> zero(dnak.dim());
  if (dnak.multiply(x, x) != zero) throw InconsistencyError("embedded x does not square to zero");
  if (dnak.multiply(y, y) != zero) throw InconsistencyError("embedded y does not square to zero");
  auto xy = dnak.multiply(x, y);
  if (xy == zero) throw InconsistencyError("embedded xy is zero");
  auto yx = dnak.multiply(y, x);
  for (std::size_t i = 0; i < xy.size(); ++i) xy[i] += RatFun::q() * yx[i];
  if (xy != zero) throw InconsistencyError("embedded x, y violate xy + q yx = 0");
}

FreeRanks qext_free_ranks(const AlgebraPtr& dnak) {
  verify_qext_embedding(*dnak);
  auto [x, y] = qext_embedding(*dnak);
  FreeRanks out;
  const std::size_t n = dnak->dim();
  ModuleRep left = restrict_to_qext(regular_module(dnak));
  std::size_t lr = rank(left.action("x") * left.action("y"));
  if (4 * lr == n) out.left = lr;
  ExactMatrix rx = right_multiplication(*dnak, x);
  ExactMatrix ry = right_multiplication(*dnak, y);
  std::size_t rr = rank(ry * rx);
  if (4 * rr == n) out.right = rr;
  return out;
}

ModuleRep induce(const ModuleRep& n, std::size_t r) { return induce(n, make_dnak_algebra(r)); }

ModuleRep induce(const ModuleRep& n, const AlgebraPtr& dnak) {
  if (n.algebra->family() != AlgebraFamily::q_exterior) throw InputError("induce: N must be a module over the q-exterior algebra");
  if (dnak->family() != AlgebraFamily::double_nakayama) throw InputError("induce: target must be a Double Nakayama algebra");
  verify_qext_embedding(*dnak);
  auto [x, y] = qext_embedding(*dnak);
  const std::size_t d = n.dim;
  const std::size_t na = dnak->dim();

  // Ambient A ⊗_K N. Paths of positive length come first and idempotents
  // last, so that the quotient keeps the coordinates e_i ⊗ n.
  std::vector<std::size_t> order;
  for (std::size_t a = 0; a < na; ++a) {
    if (dnak->basis()[a].length > 0) order.push_back(a);
  }
  for (std::size_t v = 0; v < dnak->vertices(); ++v) order.push_back(dnak->idempotent(v));
  std::vector<std::size_t> slot(na);
  for (std::size_t i = 0; i < na; ++i) slot[order[i]] = i;
  auto pos = [&](std::size_t a, std::size_t k) { return slot[a] * d + k; };

  ModuleRep ambient = zero_module(dnak);
  ambient.dim = na * d;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t k = 0; k < d; ++k) ambient.blocks[dnak->basis()[a].target].push_back(pos(a, k));
  }
  for (auto& blk : ambient.blocks) std::sort(blk.begin(), blk.end());
  for (std::size_t g = 0; g < dnak->generators().size(); ++g) {
    ExactMatrix act(ambient.dim, ambient.dim);
    for (std::size_t a = 0; a < na; ++a) {
      for (const auto& [w, c] : dnak->product(dnak->generators()[g].basis_index, a)) {
        for (std::size_t k = 0; k < d; ++k) act(pos(w, k), pos(a, k)) += c;
      }
    }
    ambient.actions[g] = std::move(act);
  }

  // Relations (a g) ⊗ m - a ⊗ (g m) for g in {x, y}.
  Vectors relations;
  const std::vector<RatFun>* gens[2] = {&x, &y};
  for (int gi = 0; gi < 2; ++gi) {
    const ExactMatrix& ng = n.actions[static_cast<std::size_t>(gi)];
    for (std::size_t a = 0; a < na; ++a) {
      auto ag = dnak->multiply(dnak->unit_vector(a), *gens[gi]);
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<RatFun> rel(ambient.dim);
        for (std::size_t w = 0; w < na; ++w) {
          if (!ag[w].is_zero()) rel[pos(w, k)] += ag[w];
        }
        for (std::size_t l = 0; l < d; ++l) {
          if (!ng(l, k).is_zero()) rel[pos(a, l)] -= ng(l, k);
        }
        bool nonzero = false;
        for (const auto& c : rel) nonzero = nonzero || !c.is_zero();
        if (nonzero) relations.push_back(std::move(rel));
      }
    }
  }
  ModuleRep induced = quotient_module(ambient, relations);
  if (induced.dim != dnak->rank() * d) throw InconsistencyError("induced module has the wrong dimension");
  ModuleRep out = normalize(induced).module;
  check_module(out);
  return out;
}

ModuleRep restrict_to_qext(const ModuleRep& m) {
  if (m.algebra->family() != AlgebraFamily::double_nakayama) throw InputError("restrict_to_qext needs a Double Nakayama module");
  auto [x, y] = qext_embedding(*m.algebra);
  ModuleRep out = zero_module(make_qext_algebra());
  out.dim = m.dim;
  for (std::size_t i = 0; i < m.dim; ++i) out.blocks[0].push_back(i);
  out.actions = {act_element(m, x), act_element(m, y)};
  check_module(out);
  return out;
}

}  // namespace extfin
