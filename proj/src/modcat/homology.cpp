#include "extfin/modcat/homology.hpp"

#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"

namespace extfin {

namespace {

std::size_t rank_of(const std::vector<ExactMatrix>& maps) {
  if (maps.empty()) return 0;
  std::vector<std::vector<RatFun>> rows;
  for (const auto& h : maps) rows.push_back(h.entries());
  return rank(from_rows(rows, rows.front().size()));
}

}  // namespace

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
  if (!(*m.algebra == *n.algebra)) throw InputError("hom_space: modules over different algebras");
  HomSpace out;
  if (m.dim == 0 || n.dim == 0) return out;

  // Unknown H(i, j) only where i and j sit at the same vertex.
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> unknown(n.dim * m.dim, none);
  std::size_t count = 0;
  for (std::size_t v = 0; v < m.blocks.size(); ++v) {
    for (auto i : n.blocks[v]) {
      for (auto j : m.blocks[v]) unknown[i * m.dim + j] = count++;
    }
  }
  if (count == 0) return out;

  // N_g H - H M_g = 0 for every generator g.
  std::vector<std::vector<RatFun>> equations;
  for (std::size_t g = 0; g < m.actions.size(); ++g) {
    const ExactMatrix& ng = n.actions[g];
    const ExactMatrix& mg = m.actions[g];
    for (std::size_t i = 0; i < n.dim; ++i) {
      for (std::size_t j = 0; j < m.dim; ++j) {
        std::vector<RatFun> row(count);
        bool nonzero = false;
        for (std::size_t k = 0; k < n.dim; ++k) {
          std::size_t u = unknown[k * m.dim + j];
          if (u == none || ng(i, k).is_zero()) continue;
          row[u] += ng(i, k);
          nonzero = true;
        }
        for (std::size_t k = 0; k < m.dim; ++k) {
          std::size_t u = unknown[i * m.dim + k];
          if (u == none || mg(k, j).is_zero()) continue;
          row[u] -= mg(k, j);
          nonzero = true;
        }
        if (nonzero) equations.push_back(std::move(row));
      }
    }
  }

  std::vector<std::vector<RatFun>> kernel;
  if (equations.empty()) {
    for (std::size_t u = 0; u < count; ++u) {
      std::vector<RatFun> e(count);
      e[u] = RatFun(1);
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = kernel_basis(from_rows(equations, count));
  }
  for (const auto& k : kernel) {
    ExactMatrix h(n.dim, m.dim);
    for (std::size_t idx = 0; idx < unknown.size(); ++idx) {
      if (unknown[idx] != none) h(idx / m.dim, idx % m.dim) = k[unknown[idx]];
    }
    out.basis.push_back(std::move(h));
  }
  return out;
}

std::size_t stable_hom_dim(const ModuleRep& m, const ModuleRep& n) {
  HomSpace hom = hom_space(m, n);
  if (hom.dim() == 0) return 0;
  ProjectiveCover cover = projective_cover(n);
  HomSpace into_cover = hom_space(m, cover.projective);
  std::vector<ExactMatrix> through;
  for (const auto& h : into_cover.basis) through.push_back(cover.epi * h);
  return hom.dim() - rank_of(through);
}

std::size_t ext_dim(const ModuleRep& m, const ModuleRep& n, std::size_t k) {
  if (k < 1) throw InputError("ext_dim: degree must be at least 1");
  return stable_hom_dim(syzygy_power(m, k), n);
}

std::size_t ext_dim_cochain(const ModuleRep& m, const ModuleRep& n, std::size_t k) {
  if (k < 1) throw InputError("ext_dim_cochain: degree must be at least 1");
  // P_0, ..., P_{k+1} with d_j = K_{j-1} epi_j : P_j -> P_{j-1}.
  std::vector<ModuleRep> p;
  std::vector<ExactMatrix> d;
  ModuleRep cur = m;
  ExactMatrix previous_inclusion;
  for (std::size_t j = 0; j <= k + 1; ++j) {
    Syzygy s = syzygy_with_inclusion(cur);
    p.push_back(s.cover.projective);
    d.push_back(j == 0 ? ExactMatrix() : previous_inclusion * s.cover.epi);
    previous_inclusion = s.inclusion;
    cur = s.omega;
  }
  for (std::size_t j = 1; j < d.size(); ++j) {
    if (j >= 2 && !(d[j - 1] * d[j]).is_zero()) throw InconsistencyError("resolution differentials do not compose to zero");
  }
  // rank of d*_{j}: Hom(P_{j-1}, N) -> Hom(P_j, N), f -> f d_j.
  auto coboundary_rank = [&](std::size_t j) -> std::size_t {
    if (p[j].dim == 0 || p[j - 1].dim == 0) return 0;
    HomSpace source = hom_space(p[j - 1], n);
    std::vector<ExactMatrix> images;
    for (const auto& f : source.basis) images.push_back(f * d[j]);
    return rank_of(images);
  };
  const std::size_t cochains = hom_space(p[k], n).dim();
  const std::size_t out_rank = coboundary_rank(k + 1);
  const std::size_t in_rank = coboundary_rank(k);
  if (out_rank + in_rank > cochains) throw InconsistencyError("cochain ranks exceed the cochain dimension");
  return cochains - out_rank - in_rank;
}

}  // namespace extfin
