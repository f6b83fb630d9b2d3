#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "extfin/errors.hpp"
#include "extfin/exactnum/json.hpp"
#include "extfin/linalg/elimination.hpp"
#include "extfin/linalg/json.hpp"
#include "extfin/linalg/spectral.hpp"

using namespace extfin;

namespace {

IntPolynomial ipoly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

QMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Rational> e;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    cols = r.size();
    for (long x : r) e.emplace_back(x);
  }
  return QMatrix(rows.size(), cols, std::move(e));
}

// Oracle: det(xI - E) by Laplace expansion along the first row.
IntPolynomial cofactor_char_poly(const std::vector<std::vector<IntPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial(1);
  if (n == 1) return m[0][0];
  IntPolynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPolynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    IntPolynomial term = m[0][j] * cofactor_char_poly(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

IntPolynomial oracle_char_poly(const QMatrix& e) {
  const std::size_t n = e.rows();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = IntPolynomial(std::vector<BigInt>{-e(i, j).numerator()});
      if (i == j) m[i][j] += IntPolynomial::variable();
    }
  }
  return cofactor_char_poly(m);
}

QMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long max_entry, long min_entry = 0) {
  std::uniform_int_distribution<long> d(min_entry, max_entry);
  QMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      e(i, j) = Rational(d(rng));
      e(j, i) = e(i, j);
    }
  }
  return e;
}

QMatrix path_adjacency(std::size_t k) {
  QMatrix a(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    a(i, i + 1) = Rational(1);
    a(i + 1, i) = Rational(1);
  }
  return a;
}

}  // namespace

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(QMatrix::identity(3)).empty());

  QMatrix ones = qmat({{1, 1}, {1, 1}});
  auto k = kernel_basis(ones);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{Rational(-1), Rational(1)});
  // (1, -1) spans the same line.
  CHECK(ones * std::vector<Rational>{Rational(1), Rational(-1)} == std::vector<Rational>(2));
  CHECK(k.size() == ones.cols() - rank(ones));

  ExactMatrix row{{RatFun::q(), RatFun(1)}};
  auto kq = kernel_basis(row);
  REQUIRE(kq.size() == 1);
  CHECK(row * kq[0] == std::vector<RatFun>(1));
  // Proportional to (1, -q).
  CHECK(kq[0][1] / kq[0][0] == -RatFun::q());
}

TEST_CASE("kernel_basis invariants on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-2, 2);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
    }
    auto k = kernel_basis(m);
    for (const auto& v : k) CHECK(m * v == std::vector<Rational>(r));
    CHECK(k.size() == c - rank(m));
    if (!k.empty()) CHECK(rank(from_columns(k, c)) == k.size());
  }
}

TEST_CASE("solve examples") {
  std::vector<Rational> b{Rational(3), Rational(-1), Rational(BigInt(2), BigInt(5))};
  CHECK(solve(QMatrix::identity(3), b) == b);
  CHECK(solve(qmat({{2}}), {Rational(1)}) == std::vector<Rational>{Rational(BigInt(1), BigInt(2))});
  CHECK_FALSE(solve(qmat({{1, 1}, {2, 2}}), {Rational(1), Rational(3)}).has_value());
  CHECK_THROWS_AS(solve(qmat({{1, 1}}), {Rational(1), Rational(2)}), InputError);
}

TEST_CASE("char_poly examples agree with cofactor expansion") {
  CHECK(char_poly(qmat({{2}})) == ipoly({-2, 1}));
  CHECK(char_poly(qmat({{0, 1}, {1, 0}})) == ipoly({-1, 0, 1}));
  CHECK(oracle_char_poly(qmat({{0, 1}, {1, 0}})) == ipoly({-1, 0, 1}));
  CHECK(char_poly(path_adjacency(3)) == ipoly({0, -2, 0, 1}));
  CHECK_THROWS_AS(char_poly(QMatrix(2, 3)), InputError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    QMatrix e = random_symmetric(rng, dim(rng), 3, -2);
    CHECK(char_poly(e) == oracle_char_poly(e));
  }
  // A matrix forcing a zero pivot in the Bareiss sweep.
  QMatrix z = qmat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  CHECK(char_poly(z) == oracle_char_poly(z));
}

TEST_CASE("Cayley-Hamilton on random symmetric integer matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix e = random_symmetric(rng, dim(rng), 3);
    IntPolynomial p = char_poly(e);
    QMatrix acc(e.rows(), e.cols());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = acc * e + QMatrix::identity(e.rows()) * Rational(*it);
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("sturm_root_count examples") {
  CHECK(sturm_root_count(ipoly({-1, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(sturm_root_count(ipoly({-2, 1}), Rational(2), Rational(10)) == 0);
  CHECK(sturm_root_count(ipoly({-2, 1}), Rational(1), Rational(2)) == 1);
  // sqrt(5) in (2, 3]: bisection oracle on the sign of x^2 - 5.
  Rational lo(2), hi(3);
  for (int i = 0; i < 20; ++i) {
    Rational mid = (lo + hi) / Rational(2);
    if ((mid * mid - Rational(5)).sign() < 0) lo = mid; else hi = mid;
  }
  CHECK(lo > Rational(2));
  CHECK(hi <= Rational(3));
  CHECK(sturm_root_count(ipoly({-5, 0, 1}), Rational(2), Rational(3)) == 1);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial(), Rational(0), Rational(1)), MathError);
  CHECK_THROWS_AS(sturm_root_count(ipoly({1, 1}), Rational(1), Rational(1)), InputError);
  // Repeated roots are counted once.
  CHECK(sturm_root_count(ipoly({1, -2, 1}), Rational(0), Rational(2)) == 1);
}

TEST_CASE("sturm counts are additive over a partition") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> cut(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial p = char_poly(random_symmetric(rng, dim(rng), 3, -3));
    std::vector<long> cuts{cut(rng), cut(rng), cut(rng)};
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Rational lo(-31), hi(31);
    int total = sturm_root_count(p, lo, hi);
    int sum = 0;
    Rational prev = lo;
    for (long c : cuts) {
      sum += sturm_root_count(p, prev, Rational(c));
      prev = Rational(c);
    }
    sum += sturm_root_count(p, prev, hi);
    CHECK(sum == total);
  }
}

TEST_CASE("spectral_classify examples") {
  auto one = spectral_classify(qmat({{2}}));
  CHECK(one.band == SpectralBand::equal_two);
  CHECK(one.perron_exact());
  CHECK(one.perron_root.lo == Rational(2));
  CHECK(one.perron_vector == std::vector<Interval>{Interval::point(Rational(1))});

  auto a2 = spectral_classify(qmat({{0, 1}, {1, 0}}));
  CHECK(a2.band == SpectralBand::below_two);
  CHECK(a2.perron_root.lo == Rational(1));

  auto big = spectral_classify(qmat({{0, 3}, {3, 0}}));
  CHECK(big.band == SpectralBand::above_two);
  CHECK(big.perron_root == Interval::point(Rational(3)));
  CHECK(big.perron_multiplicity_one);

  CHECK_THROWS_WITH_AS(spectral_classify(qmat({{0, 1}, {2, 0}})), "E must be symmetric", HypothesisError);
  CHECK_THROWS_WITH_AS(spectral_classify(qmat({{1, 0}, {0, 1}})), "algebra assumed indecomposable",
                       HypothesisError);
}

TEST_CASE("irrational Perron root is enclosed and certified") {
  // Loop at one vertex of the triangle: lambda is a root of x^3 - x^2 - 3x - 1
  // = (x + 1)(x^2 - 2x - 1), so lambda = 1 + sqrt(2).
  QMatrix e = qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto s = spectral_classify(e);
  CHECK(s.band == SpectralBand::above_two);
  CHECK_FALSE(s.perron_exact());
  CHECK(s.perron_root.width() <= perron_tolerance());
  // 1 + sqrt(2) in the enclosure: (lo - 1)^2 <= 2 <= (hi - 1)^2.
  Rational l = s.perron_root.lo - Rational(1), h = s.perron_root.hi - Rational(1);
  CHECK(l * l <= Rational(2));
  CHECK(h * h >= Rational(2));
  CHECK(s.perron_multiplicity_one);
  REQUIRE(s.perron_vector.size() == 3);
  for (const auto& v : s.perron_vector) CHECK(v.lo.sign() > 0);
  // By symmetry vertices 1 and 2 carry equal weight, sqrt(2) - 1 relative to vertex 0.
  CHECK(s.perron_vector[1].contains(Rational(BigInt(41421356237), BigInt(100000000000))) ==
        s.perron_vector[2].contains(Rational(BigInt(41421356237), BigInt(100000000000))));
  CHECK(s.perron_vector[1].width() < Rational(BigInt(1), BigInt(1000000000)));
}

TEST_CASE("eigenvector_exact examples") {
  CHECK(eigenvector_exact(qmat({{2}}), Rational(2)) == std::vector<Rational>{Rational(1)});
  CHECK(eigenvector_exact(qmat({{0, 2}, {2, 0}}), Rational(2)) == std::vector<Rational>{Rational(1), Rational(1)});
  QMatrix c4 = qmat({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
  CHECK(eigenvector_exact(c4, Rational(2)) == std::vector<Rational>(4, Rational(1)));
  CHECK_THROWS_AS(eigenvector_exact(qmat({{2}}), Rational(3)), HypothesisError);
}

TEST_CASE("spectral class is invariant under simultaneous permutation") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  int checked = 0;
  while (checked < 30) {
    std::size_t n = dim(rng);
    QMatrix e = random_symmetric(rng, n, 2);
    try {
      check_perron_hypotheses(e);
    } catch (const HypothesisError&) {
      continue;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    QMatrix pe = e.select(perm, perm);
    auto a = spectral_classify(e);
    auto b = spectral_classify(pe);
    CHECK(a.band == b.band);
    CHECK(a.perron_root == b.perron_root);
    if (a.perron_exact()) {
      for (std::size_t i = 0; i < n; ++i) CHECK(b.perron_vector[i] == a.perron_vector[perm[i]]);
      for (const auto& v : a.perron_vector) CHECK(v.lo.sign() > 0);
    }
    ++checked;
  }
}

TEST_CASE("matrix json round trip") {
  QMatrix e = qmat({{0, 3}, {3, 0}});
  auto j = matrix_to_json(e);
  CHECK(j.dump() == R"({"cols":2,"entries":[["0","3"],["3","0"]],"rows":2})");
  CHECK(matrix_from_json<Rational>(nlohmann::json::parse(j.dump())) == e);
  CHECK(matrix_from_json<Rational>(nlohmann::json::parse("[[0, 1], [1, 0]]")) == qmat({{0, 1}, {1, 0}}));
  ExactMatrix x{{RatFun(), RatFun::q()}, {RatFun(1), RatFun::q_power(-2)}};
  CHECK(matrix_from_json<RatFun>(matrix_to_json(x)) == x);
  CHECK_THROWS_AS(matrix_from_json<Rational>(nlohmann::json::parse(R"({"rows": 2, "cols": 2, "entries": [[1]]})")),
                  InputError);
}
