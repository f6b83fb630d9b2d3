#include "extfin/modcat/module.hpp"

#include <algorithm>
#include <numeric>

#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"
#include "extfin/modcat/homology.hpp"

namespace extfin {

std::size_t ModuleRep::vertex_of(std::size_t index) const {
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (std::find(blocks[v].begin(), blocks[v].end(), index) != blocks[v].end()) return v;
  }
  throw InconsistencyError("basis index outside every vertex block");
}

const ExactMatrix& ModuleRep::action(const std::string& generator) const {
  return actions[algebra->generator_index(generator)];
}

std::vector<std::size_t> ModuleRep::block_dims() const {
  std::vector<std::size_t> d;
  for (const auto& b : blocks) d.push_back(b.size());
  return d;
}

namespace {

std::vector<std::size_t> vertex_table(const ModuleRep& m) {
  std::vector<std::size_t> at(m.dim, 0);
  for (std::size_t v = 0; v < m.blocks.size(); ++v) {
    for (auto i : m.blocks[v]) at[i] = v;
  }
  return at;
}

// Vertex carrying the support of a block-homogeneous vector; throws if the
// vector is zero or spreads over several vertices.
std::size_t support_vertex(const std::vector<std::size_t>& at, const std::vector<RatFun>& vec) {
  std::optional<std::size_t> v;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (vec[i].is_zero()) continue;
    if (v && *v != at[i]) throw InconsistencyError("vector is not homogeneous with respect to the vertices");
    v = at[i];
  }
  if (!v) throw InconsistencyError("zero vector in a basis");
  return *v;
}

ExactMatrix hstack(const std::vector<ExactMatrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  ExactMatrix out(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

ExactMatrix vstack(const std::vector<ExactMatrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  ExactMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

std::vector<RatFun> unit(std::size_t n, std::size_t i) {
  std::vector<RatFun> v(n);
  v[i] = RatFun(1);
  return v;
}

}  // namespace

ModuleRep zero_module(const AlgebraPtr& algebra) {
  ModuleRep m;
  m.algebra = algebra;
  m.blocks.assign(algebra->vertices(), {});
  m.actions.assign(algebra->generators().size(), ExactMatrix());
  return m;
}

ModuleRep simple_module(const AlgebraPtr& algebra, std::size_t vertex) {
  if (vertex >= algebra->vertices()) throw InputError("vertex out of range");
  ModuleRep m = zero_module(algebra);
  m.dim = 1;
  m.blocks[vertex] = {0};
  m.actions.assign(algebra->generators().size(), ExactMatrix(1, 1));
  return m;
}

std::vector<std::size_t> projective_basis(const Algebra& algebra, std::size_t vertex) {
  std::vector<std::size_t> paths;
  for (std::size_t p = 0; p < algebra.dim(); ++p) {
    if (algebra.basis()[p].source == vertex) paths.push_back(p);
  }
  std::stable_sort(paths.begin(), paths.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = algebra.basis()[a];
    const auto& pb = algebra.basis()[b];
    if (pa.target != pb.target) return pa.target < pb.target;
    return pa.length < pb.length;
  });
  return paths;
}

ModuleRep projective_module(const AlgebraPtr& algebra, std::size_t vertex) {
  if (vertex >= algebra->vertices()) throw InputError("vertex out of range");
  auto paths = projective_basis(*algebra, vertex);
  std::vector<std::size_t> position(algebra->dim(), paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) position[paths[i]] = i;

  ModuleRep m = zero_module(algebra);
  m.dim = paths.size();
  for (std::size_t i = 0; i < paths.size(); ++i) m.blocks[algebra->basis()[paths[i]].target].push_back(i);
  for (std::size_t g = 0; g < algebra->generators().size(); ++g) {
    ExactMatrix a(m.dim, m.dim);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (const auto& [w, c] : algebra->product(algebra->generators()[g].basis_index, paths[i])) {
        if (position[w] == paths.size()) throw InconsistencyError("product leaves the projective module");
        a(position[w], i) += c;
      }
    }
    m.actions[g] = std::move(a);
  }
  return m;
}

ModuleRep regular_module(const AlgebraPtr& algebra) {
  std::vector<ModuleRep> parts;
  for (std::size_t v = 0; v < algebra->vertices(); ++v) parts.push_back(projective_module(algebra, v));
  return direct_sum(parts);
}

ModuleRep make_C_module(const RatFun& lam, const AlgebraPtr& qext) {
  if (lam.is_zero()) throw InputError("C(lambda) needs lambda != 0");
  AlgebraPtr algebra = qext ? qext : make_qext_algebra();
  if (algebra->family() != AlgebraFamily::q_exterior) throw InputError("C(lambda) is a module over the q-exterior algebra");
  ModuleRep m = zero_module(algebra);
  m.dim = 2;
  m.blocks[0] = {0, 1};
  ExactMatrix x(2, 2), y(2, 2);
  x(1, 0) = RatFun(1);
  y(1, 0) = lam;
  m.actions = {x, y};
  return m;
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  ModuleRep out = zero_module(parts.front().algebra);
  for (const auto& p : parts) {
    if (!(*p.algebra == *out.algebra)) throw InputError("direct sum of modules over different algebras");
    out.dim += p.dim;
  }
  for (auto& a : out.actions) a = ExactMatrix(out.dim, out.dim);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t v = 0; v < p.blocks.size(); ++v) {
      for (auto i : p.blocks[v]) out.blocks[v].push_back(offset + i);
    }
    for (std::size_t g = 0; g < out.actions.size(); ++g) out.actions[g].set_block(offset, offset, p.actions[g]);
    offset += p.dim;
  }
  return out;
}

ExactMatrix vertex_projector(const ModuleRep& m, std::size_t vertex) {
  ExactMatrix p(m.dim, m.dim);
  for (auto i : m.blocks[vertex]) p(i, i) = RatFun(1);
  return p;
}

ExactMatrix act_path(const ModuleRep& m, std::size_t basis_index) {
  const auto& path = m.algebra->basis()[basis_index];
  ExactMatrix result = vertex_projector(m, path.target);
  for (auto g : path.word) result = result * m.actions[g];
  if (m.algebra->vertices() > 1) result = result * vertex_projector(m, path.source);
  return result;
}

ExactMatrix act_element(const ModuleRep& m, const std::vector<RatFun>& element) {
  ExactMatrix result(m.dim, m.dim);
  for (std::size_t p = 0; p < element.size(); ++p) {
    if (!element[p].is_zero()) result += act_path(m, p) * element[p];
  }
  return result;
}

bool satisfies_relations(const ModuleRep& m) {
  const Algebra& alg = *m.algebra;
  if (m.actions.size() != alg.generators().size() || m.blocks.size() != alg.vertices()) return false;
  std::vector<std::size_t> seen(m.dim, 0);
  for (const auto& b : m.blocks) {
    for (auto i : b) {
      if (i >= m.dim) return false;
      ++seen[i];
    }
  }
  for (auto s : seen) {
    if (s != 1) return false;
  }
  for (std::size_t g = 0; g < alg.generators().size(); ++g) {
    const auto& gen = alg.generators()[g];
    if (m.actions[g].rows() != m.dim || m.actions[g].cols() != m.dim) return false;
    if (!(vertex_projector(m, gen.target) * m.actions[g] * vertex_projector(m, gen.source) == m.actions[g])) {
      return false;
    }
  }
  std::vector<ExactMatrix> paths;
  for (std::size_t p = 0; p < alg.dim(); ++p) paths.push_back(act_path(m, p));
  for (std::size_t g = 0; g < alg.generators().size(); ++g) {
    const std::size_t gb = alg.generators()[g].basis_index;
    for (std::size_t p = 0; p < alg.dim(); ++p) {
      ExactMatrix expected(m.dim, m.dim);
      for (const auto& [w, c] : alg.product(gb, p)) expected += paths[w] * c;
      if (!(m.actions[g] * paths[p] == expected)) return false;
    }
  }
  return true;
}

void check_module(const ModuleRep& m) {
  if (!satisfies_relations(m)) throw InconsistencyError("module actions violate the algebra relations");
}

Vectors radical(const ModuleRep& m) {
  if (m.dim == 0) return {};
  return column_space_basis(hstack(m.actions, m.dim));
}

Vectors socle(const ModuleRep& m) {
  if (m.dim == 0) return {};
  auto kernel = kernel_basis(vstack(m.actions, m.dim));
  if (kernel.empty()) return {};
  return row_space_basis(from_rows(kernel, m.dim));
}

bool same_subspace(const Vectors& a, const Vectors& b, std::size_t n) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  std::size_t ra = rank(from_rows(a, n));
  if (ra != rank(from_rows(b, n))) return false;
  Vectors both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(from_rows(both, n)) == ra;
}

std::vector<std::size_t> subspace_dims(const ModuleRep& m, const Vectors& basis) {
  auto at = vertex_table(m);
  std::vector<std::size_t> d(m.blocks.size(), 0);
  for (const auto& v : basis) ++d[support_vertex(at, v)];
  return d;
}

std::vector<std::size_t> top_dims(const ModuleRep& m) {
  auto rad = subspace_dims(m, radical(m));
  auto d = m.block_dims();
  for (std::size_t v = 0; v < d.size(); ++v) d[v] -= rad[v];
  return d;
}

ModuleRep submodule(const ModuleRep& m, const Vectors& basis) {
  ModuleRep out = zero_module(m.algebra);
  out.dim = basis.size();
  if (basis.empty()) return out;
  auto at = vertex_table(m);
  for (std::size_t j = 0; j < basis.size(); ++j) out.blocks[support_vertex(at, basis[j])].push_back(j);

  ExactMatrix s = from_columns(basis, m.dim);
  auto echelon = rref(s.transpose());
  if (echelon.rank() != basis.size()) throw InconsistencyError("submodule basis is linearly dependent");
  ExactMatrix left = inverse(s.select(echelon.pivots, [&] {
    std::vector<std::size_t> all(basis.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }()));
  std::vector<std::size_t> cols(basis.size());
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t g = 0; g < m.actions.size(); ++g) {
    ExactMatrix image = m.actions[g] * s;
    ExactMatrix a = left * image.select(echelon.pivots, cols);
    if (!(s * a == image)) throw InconsistencyError("subspace is not a submodule");
    out.actions[g] = std::move(a);
  }
  return out;
}

ModuleRep quotient_module(const ModuleRep& m, const Vectors& sub, ExactMatrix* projection) {
  auto keep = complement_coordinates(sub, m.dim);
  Vectors sub_basis = sub.empty() ? Vectors{} : row_space_basis(from_rows(sub, m.dim));
  const std::size_t k = sub_basis.size();
  Vectors columns = sub_basis;
  for (auto c : keep) columns.push_back(unit(m.dim, c));
  ExactMatrix t_inv = inverse(from_columns(columns, m.dim));

  ModuleRep out = zero_module(m.algebra);
  out.dim = keep.size();
  auto at = vertex_table(m);
  for (std::size_t j = 0; j < keep.size(); ++j) out.blocks[at[keep[j]]].push_back(j);
  std::vector<std::size_t> rows(keep.size());
  std::iota(rows.begin(), rows.end(), k);
  for (std::size_t g = 0; g < m.actions.size(); ++g) {
    ExactMatrix image = t_inv * m.actions[g];
    out.actions[g] = image.select(rows, keep);
  }
  if (projection) {
    std::vector<std::size_t> all(m.dim);
    std::iota(all.begin(), all.end(), 0);
    *projection = t_inv.select(rows, all);
  }
  return out;
}

ModuleRep change_basis(const ModuleRep& m, const ExactMatrix& basis) {
  ModuleRep out = zero_module(m.algebra);
  out.dim = basis.cols();
  auto at = vertex_table(m);
  for (std::size_t j = 0; j < basis.cols(); ++j) out.blocks[support_vertex(at, basis.col(j))].push_back(j);
  ExactMatrix inv = inverse(basis);
  for (std::size_t g = 0; g < m.actions.size(); ++g) out.actions[g] = inv * m.actions[g] * basis;
  return out;
}

NormalizedModule normalize(const ModuleRep& m) {
  if (m.dim == 0) return {m, ExactMatrix()};
  auto at = vertex_table(m);
  Vectors rad = radical(m);
  auto top = complement_coordinates(rad, m.dim);
  Vectors columns;
  for (std::size_t v = 0; v < m.blocks.size(); ++v) {
    for (auto c : top) {
      if (at[c] == v) columns.push_back(unit(m.dim, c));
    }
    for (const auto& r : rad) {
      if (support_vertex(at, r) == v) columns.push_back(r);
    }
  }
  ExactMatrix basis = from_columns(columns, m.dim);
  return {change_basis(m, basis), basis};
}

ProjectiveCover projective_cover(const ModuleRep& m) {
  ProjectiveCover cover;
  auto at = vertex_table(m);
  auto top = complement_coordinates(radical(m), m.dim);
  std::stable_sort(top.begin(), top.end(), [&](std::size_t a, std::size_t b) { return at[a] < at[b]; });
  std::vector<ModuleRep> parts;
  for (auto c : top) {
    cover.tops.push_back(at[c]);
    parts.push_back(projective_module(m.algebra, at[c]));
  }
  if (parts.empty()) {
    cover.projective = zero_module(m.algebra);
    cover.epi = ExactMatrix(m.dim, 0);
    return cover;
  }
  cover.projective = direct_sum(parts);
  cover.epi = ExactMatrix(m.dim, cover.projective.dim);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < top.size(); ++j) {
    auto paths = projective_basis(*m.algebra, cover.tops[j]);
    for (std::size_t i = 0; i < paths.size(); ++i) cover.epi.set_col(offset + i, act_path(m, paths[i]).col(top[j]));
    offset += paths.size();
  }
  return cover;
}

Syzygy syzygy_with_inclusion(const ModuleRep& m) {
  Syzygy out;
  out.cover = projective_cover(m);
  const ModuleRep& p = out.cover.projective;
  // The cover map respects vertices, so its kernel is computed blockwise.
  Vectors kernel;
  for (std::size_t v = 0; v < p.blocks.size(); ++v) {
    if (p.blocks[v].empty()) continue;
    ExactMatrix local = out.cover.epi.select(m.blocks[v], p.blocks[v]);
    for (const auto& k : kernel_basis(local)) {
      std::vector<RatFun> full(p.dim);
      for (std::size_t i = 0; i < k.size(); ++i) full[p.blocks[v][i]] = k[i];
      kernel.push_back(std::move(full));
    }
  }
  if (kernel.empty()) {
    out.omega = zero_module(m.algebra);
    out.inclusion = ExactMatrix(p.dim, 0);
    return out;
  }
  ModuleRep omega = submodule(p, kernel);
  NormalizedModule norm = normalize(omega);
  out.omega = std::move(norm.module);
  out.inclusion = from_columns(kernel, p.dim) * norm.basis;
  return out;
}

ModuleRep syzygy(const ModuleRep& m, bool strip) {
  ModuleRep omega = syzygy_with_inclusion(m).omega;
  if (!strip) return omega;
  StrippedModule s = strip_summands(omega);
  // Only projective summands are removed; simple summands stay in Ω.
  std::vector<ModuleRep> parts{s.core};
  for (std::size_t v = 0; v < s.simple_count.size(); ++v) {
    for (std::size_t i = 0; i < s.simple_count[v]; ++i) parts.push_back(simple_module(m.algebra, v));
  }
  return normalize(direct_sum(parts)).module;
}

ModuleRep syzygy_power(const ModuleRep& m, std::size_t k) {
  ModuleRep cur = m;
  for (std::size_t i = 0; i < k; ++i) cur = syzygy(cur);
  return cur;
}

std::vector<std::size_t> projective_summand_counts(const ModuleRep& m) {
  std::vector<std::size_t> counts;
  for (std::size_t v = 0; v < m.algebra->vertices(); ++v) {
    counts.push_back(m.dim == 0 ? 0 : rank(act_path(m, m.algebra->socle_basis()[v])));
  }
  return counts;
}

StrippedModule strip_summands(const ModuleRep& m) {
  const std::size_t nv = m.algebra->vertices();
  StrippedModule out;
  out.simple_count.assign(nv, 0);
  out.projective_count.assign(nv, 0);
  ModuleRep cur = m;

  // Projective summands: a vector u with W_v u != 0 generates a copy of P_v,
  // which is injective and so splits off along a retraction.
  for (bool again = true; again;) {
    again = false;
    for (std::size_t v = 0; v < nv && !again; ++v) {
      ExactMatrix w = act_path(cur, m.algebra->socle_basis()[v]);
      for (std::size_t c = 0; c < cur.dim && !again; ++c) {
        if (w.col(c) == std::vector<RatFun>(cur.dim)) continue;
        ModuleRep p = projective_module(m.algebra, v);
        auto paths = projective_basis(*m.algebra, v);
        ExactMatrix phi(cur.dim, p.dim);
        for (std::size_t i = 0; i < paths.size(); ++i) phi.set_col(i, act_path(cur, paths[i]).col(c));
        HomSpace back = hom_space(cur, p);
        // Find rho = sum c_k H_k with rho phi = id.
        ExactMatrix system(p.dim * p.dim, back.dim());
        for (std::size_t k = 0; k < back.dim(); ++k) {
          ExactMatrix comp = back.basis[k] * phi;
          for (std::size_t e = 0; e < comp.entries().size(); ++e) system(e, k) = comp.entries()[e];
        }
        auto coeffs = solve(system, ExactMatrix::identity(p.dim).entries());
        if (!coeffs) throw InconsistencyError("projective summand does not split");
        ExactMatrix rho(p.dim, cur.dim);
        for (std::size_t k = 0; k < back.dim(); ++k) rho += back.basis[k] * (*coeffs)[k];
        Vectors kernel;
        auto at = vertex_table(cur);
        for (std::size_t u = 0; u < nv; ++u) {
          if (cur.blocks[u].empty()) continue;
          ExactMatrix local = rho.select(p.blocks[u], cur.blocks[u]);
          for (const auto& k : kernel_basis(local)) {
            std::vector<RatFun> full(cur.dim);
            for (std::size_t i = 0; i < k.size(); ++i) full[cur.blocks[u][i]] = k[i];
            kernel.push_back(std::move(full));
          }
        }
        cur = kernel.empty() ? zero_module(m.algebra) : normalize(submodule(cur, kernel)).module;
        ++out.projective_count[v];
        again = true;
      }
    }
  }

  // Simple summands: socle vectors outside rad M. Any subspace containing
  // rad M is a submodule, so rad M plus a complement of rad M + those socle
  // vectors is a complementary summand.
  if (cur.dim > 0) {
    Vectors rad = radical(cur);
    Vectors soc = socle(cur);
    Vectors span = rad;
    Vectors simples;
    for (const auto& s : soc) {
      span.push_back(s);
      if (rank(from_rows(span, cur.dim)) == span.size()) {
        simples.push_back(s);
      } else {
        span.pop_back();
      }
    }
    if (!simples.empty()) {
      auto at = vertex_table(cur);
      for (const auto& s : simples) ++out.simple_count[support_vertex(at, s)];
      Vectors core = rad;
      for (auto c : complement_coordinates(span, cur.dim)) core.push_back(unit(cur.dim, c));
      cur = core.empty() ? zero_module(m.algebra) : normalize(submodule(cur, core)).module;
    }
  }
  out.core = std::move(cur);
  return out;
}

DimVector dim_vector(const ModuleRep& m, DimVectorMode mode) {
  Vectors rad = radical(m);
  if (mode == DimVectorMode::strict && !same_subspace(rad, socle(m), m.dim)) {
    throw HypothesisError("module has simple or projective summands (socle differs from radical)");
  }
  auto r = subspace_dims(m, rad);
  auto d = m.block_dims();
  std::vector<BigInt> t, s;
  for (std::size_t v = 0; v < d.size(); ++v) {
    t.emplace_back(static_cast<unsigned long>(d[v] - r[v]));
    s.emplace_back(static_cast<unsigned long>(r[v]));
  }
  return DimVector(std::move(t), std::move(s));
}

std::optional<RatFun> c_module_parameter(const ModuleRep& m) {
  if (m.algebra->family() != AlgebraFamily::q_exterior || m.dim != 2) return std::nullopt;
  auto top = complement_coordinates(radical(m), m.dim);
  if (top.size() != 1) return std::nullopt;
  auto xm = m.action("x").col(top[0]);
  auto ym = m.action("y").col(top[0]);
  for (std::size_t i = 0; i < xm.size(); ++i) {
    if (xm[i].is_zero()) continue;
    RatFun lam = ym[i] / xm[i];
    for (std::size_t j = 0; j < xm.size(); ++j) {
      if (!(ym[j] == lam * xm[j])) return std::nullopt;
    }
    if (lam.is_zero()) return std::nullopt;
    return lam;
  }
  return std::nullopt;
}

std::optional<ExactMatrix> find_isomorphism(const ModuleRep& m, const ModuleRep& n) {
  if (!(*m.algebra == *n.algebra) || m.block_dims() != n.block_dims()) return std::nullopt;
  if (m.dim == 0) return ExactMatrix();
  HomSpace hom = hom_space(m, n);
  auto invertible = [](const ExactMatrix& h) { return !determinant(h).is_zero(); };
  for (const auto& h : hom.basis) {
    if (invertible(h)) return h;
  }
  // Combinations sum_k base^k H_k for a few integer bases.
  for (long base : {2L, 3L, 5L, 7L, 11L}) {
    ExactMatrix h(n.dim, m.dim);
    Rational c(1);
    for (const auto& b : hom.basis) {
      h += b * RatFun(c);
      c *= Rational(base);
    }
    if (invertible(h)) return h;
  }
  return std::nullopt;
}

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n) { return find_isomorphism(m, n).has_value(); }

QMatrix e_matrix_from_projectives(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->vertices();
  QMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    ModuleRep p = projective_module(algebra, i);
    auto rad = subspace_dims(p, radical(p));
    auto soc = subspace_dims(p, socle(p));
    for (std::size_t j = 0; j < n; ++j) e(i, j) = Rational(static_cast<long>(rad[j]) - static_cast<long>(soc[j]));
  }
  return e;
}

}  // namespace extfin
