#include "extfin/modcat/algebra.hpp"

#include "extfin/errors.hpp"

namespace extfin {

std::string to_string(AlgebraFamily family) {
  return family == AlgebraFamily::q_exterior ? "qext" : "dnak";
}

namespace {

AlgebraTerm single(std::size_t index, RatFun coeff) { return AlgebraTerm{{index, std::move(coeff)}}; }

std::vector<RatFun> to_dense(const AlgebraTerm& t, std::size_t dim) {
  std::vector<RatFun> v(dim);
  for (const auto& [i, c] : t) v[i] += c;
  return v;
}

}  // namespace

std::vector<RatFun> Algebra::multiply(const std::vector<RatFun>& a, const std::vector<RatFun>& b) const {
  std::vector<RatFun> out(dim());
  for (std::size_t u = 0; u < dim(); ++u) {
    if (a[u].is_zero()) continue;
    for (std::size_t v = 0; v < dim(); ++v) {
      if (b[v].is_zero()) continue;
      for (const auto& [w, c] : table_[u][v]) out[w] += a[u] * b[v] * c;
    }
  }
  return out;
}

std::vector<RatFun> Algebra::unit_vector(std::size_t basis_index) const {
  std::vector<RatFun> v(dim());
  v[basis_index] = RatFun(1);
  return v;
}

std::size_t Algebra::generator_index(const std::string& name) const {
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (generators_[g].name == name) return g;
  }
  throw InputError("unknown generator '" + name + "'");
}

QMatrix Algebra::e_matrix() const {
  QMatrix e(vertices_, vertices_);
  for (const auto& p : basis_) {
    if (p.length == 1) e(p.source, p.target) += Rational(1);
  }
  return e;
}

void Algebra::verify() const {
  const std::size_t n = dim();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto uv = to_dense(table_[u][v], n);
      for (std::size_t w = 0; w < n; ++w) {
        auto left = multiply(uv, unit_vector(w));
        auto right = multiply(unit_vector(u), to_dense(table_[v][w], n));
        if (left != right) {
          throw InconsistencyError("algebra is not associative at (" + basis_[u].name + ", " + basis_[v].name +
                                   ", " + basis_[w].name + ")");
        }
      }
    }
  }
  // J^3 = 0 and J^2 != 0, with J spanned by the paths of positive length.
  bool j2_nonzero = false;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (basis_[u].length == 0 || basis_[v].length == 0) continue;
      if (!table_[u][v].empty()) j2_nonzero = true;
      for (const auto& [w, c] : table_[u][v]) {
        for (std::size_t z = 0; z < n; ++z) {
          if (basis_[z].length > 0 && !table_[w][z].empty()) throw InconsistencyError("J^3 is not zero");
        }
      }
    }
  }
  if (!j2_nonzero) throw InconsistencyError("J^2 is zero");

  auto gen = [&](const std::string& name) { return unit_vector(generators_[generator_index(name)].basis_index); };
  auto zero = std::vector<RatFun>(n);
  if (family_ == AlgebraFamily::q_exterior) {
    auto x = gen("x"), y = gen("y");
    if (multiply(x, x) != zero || multiply(y, y) != zero) throw InconsistencyError("x^2 or y^2 is not zero");
    auto xy = multiply(x, y), yx = multiply(y, x);
    for (std::size_t i = 0; i < n; ++i) xy[i] += RatFun::q() * yx[i];
    if (xy != zero) throw InconsistencyError("xy + q yx is not zero");
    return;
  }
  const std::size_t r = rank_;
  for (std::size_t i = 0; i < r; ++i) {
    auto ai = gen("a" + std::to_string(i)), bi = gen("b" + std::to_string(i));
    auto anext = gen("a" + std::to_string((i + 1) % r)), bnext = gen("b" + std::to_string((i + 1) % r));
    if (multiply(anext, ai) != zero) throw InconsistencyError("a_{i+1} a_i is not zero");
    if (multiply(bi, bnext) != zero) throw InconsistencyError("b_i b_{i+1} is not zero");
    const std::size_t prev = (i + r - 1) % r;
    auto ba = multiply(bi, ai);
    auto ab = multiply(gen("a" + std::to_string(prev)), gen("b" + std::to_string(prev)));
    RatFun scale = i == 0 ? parameter_ : RatFun(1);
    for (std::size_t k = 0; k < n; ++k) ba[k] += scale * ab[k];
    if (ba != zero) throw InconsistencyError("commutativity relation fails at vertex " + std::to_string(i));
  }
}

AlgebraPtr make_qext_algebra() {
  std::shared_ptr<Algebra> a(new Algebra());
  a->family_ = AlgebraFamily::q_exterior;
  a->rank_ = 1;
  a->vertices_ = 1;
  a->parameter_ = RatFun::q();
  a->generators_ = {{"x", 0, 0, 1}, {"y", 0, 0, 2}};
  a->basis_ = {{"1", 0, 0, 0, {}}, {"x", 0, 0, 1, {0}}, {"y", 0, 0, 1, {1}}, {"xy", 0, 0, 2, {0, 1}}};
  a->idempotents_ = {0};
  a->socle_ = {3};
  a->table_.assign(4, std::vector<AlgebraTerm>(4));
  for (std::size_t u = 0; u < 4; ++u) {
    a->table_[0][u] = single(u, RatFun(1));
    a->table_[u][0] = single(u, RatFun(1));
  }
  a->table_[1][2] = single(3, RatFun(1));
  a->table_[2][1] = single(3, -RatFun::q_power(-1));
  return a;
}

AlgebraPtr make_dnak_algebra(std::size_t r) {
  if (r < 2) throw InputError("Double Nakayama algebra needs rank r >= 2");
  std::shared_ptr<Algebra> a(new Algebra());
  a->family_ = AlgebraFamily::double_nakayama;
  a->rank_ = r;
  a->vertices_ = r;
  a->parameter_ = RatFun::q_power(-static_cast<long>(r));
  auto idx_e = [](std::size_t i) { return 4 * i; };
  auto idx_a = [](std::size_t i) { return 4 * i + 1; };             // a_i : i -> i+1
  auto idx_b = [r](std::size_t i) { return 4 * ((i + 1) % r) + 2; };  // b_i : i+1 -> i
  auto idx_w = [](std::size_t i) { return 4 * i + 3; };             // b_i a_i at i
  for (std::size_t i = 0; i < r; ++i) {
    a->generators_.push_back({"a" + std::to_string(i), i, (i + 1) % r, idx_a(i)});
  }
  for (std::size_t i = 0; i < r; ++i) {
    a->generators_.push_back({"b" + std::to_string(i), (i + 1) % r, i, idx_b(i)});
  }
  const std::size_t b_offset = r;
  a->basis_.resize(4 * r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t prev = (i + r - 1) % r;
    const std::string si = std::to_string(i);
    a->basis_[idx_e(i)] = {"e" + si, i, i, 0, {}};
    a->basis_[idx_a(i)] = {"a" + si, i, (i + 1) % r, 1, {i}};
    a->basis_[idx_b(prev)] = {"b" + std::to_string(prev), i, prev, 1, {b_offset + prev}};
    a->basis_[idx_w(i)] = {"b" + si + "a" + si, i, i, 2, {b_offset + i, i}};
    a->idempotents_.push_back(idx_e(i));
    a->socle_.push_back(idx_w(i));
  }
  const std::size_t n = 4 * r;
  a->table_.assign(n, std::vector<AlgebraTerm>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const auto& pu = a->basis_[u];
      const auto& pv = a->basis_[v];
      if (pv.target != pu.source) continue;
      if (pu.length == 0) {
        a->table_[u][v] = single(v, RatFun(1));
      } else if (pv.length == 0) {
        a->table_[u][v] = single(u, RatFun(1));
      }
    }
  }
  const RatFun q_r = RatFun::q_power(static_cast<long>(r));
  for (std::size_t i = 0; i < r; ++i) {
    a->table_[idx_b(i)][idx_a(i)] = single(idx_w(i), RatFun(1));
    // a_{i-1} b_{i-1} = -b_i a_i for i != 0, and -t^{-1} b_0 a_0 at vertex 0.
    const std::size_t prev = (i + r - 1) % r;
    a->table_[idx_a(prev)][idx_b(prev)] = single(idx_w(i), i == 0 ? -q_r : RatFun(-1));
  }
  return a;
}

std::pair<std::vector<RatFun>, std::vector<RatFun>> qext_embedding(const Algebra& dnak) {
  if (dnak.family() != AlgebraFamily::double_nakayama) {
    throw InputError("qext_embedding needs a Double Nakayama algebra");
  }
  const std::size_t r = dnak.rank();
  std::vector<RatFun> x(dnak.dim()), y(dnak.dim());
  for (std::size_t j = 0; j < r; ++j) {
    x[dnak.generators()[j].basis_index] = RatFun::q_power(static_cast<long>(r - j));
    y[dnak.generators()[r + j].basis_index] = RatFun(1);
  }
  return {x, y};
}

}  // namespace extfin
