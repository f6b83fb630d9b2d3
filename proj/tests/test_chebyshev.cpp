#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "extfin/chebyshev/chebyshev.hpp"
#include "extfin/chebyshev/nonsingular.hpp"
#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"
#include "extfin/linalg/spectral.hpp"

using namespace extfin;

#ifndef EXTFIN_GOLDEN_DIR
#define EXTFIN_GOLDEN_DIR "tests/golden"
#endif

namespace {

ExactMatrix emat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatFun> e;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    cols = r.size();
    for (long x : r) e.emplace_back(Rational(x));
  }
  return ExactMatrix(rows.size(), cols, std::move(e));
}

QMatrix path_adjacency(std::size_t k) {
  QMatrix a(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    a(i, i + 1) = Rational(1);
    a(i + 1, i) = Rational(1);
  }
  return a;
}

ExactMatrix literal_x(const ExactMatrix& e) {
  const std::size_t n = e.rows();
  ExactMatrix x(2 * n, 2 * n);
  x.set_block(0, 0, e);
  x.set_block(0, n, -ExactMatrix::identity(n));
  x.set_block(n, 0, ExactMatrix::identity(n));
  return x;
}

ExactMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long max_entry) {
  std::uniform_int_distribution<long> d(0, max_entry);
  ExactMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      e(i, j) = RatFun(Rational(d(rng)));
      e(j, i) = e(i, j);
    }
  }
  return e;
}

// Oracle: the sequence f_k(x) at x evaluated from the closed pattern for
// x = 2 (k + 1) and x = 0 (1, 0, -1, 0 repeating).
Rational pattern_value(long k, long x) {
  if (x == 2) return Rational(k + 1);
  static const long cycle[] = {1, 0, -1, 0};
  return Rational(cycle[k % 4]);
}

// Exhaustive oracle for two eigenvalues: the first (N, i) in order of
// N + i, then N, with nonzero 2 x 2 determinant.
std::pair<long, long> exhaustive_pair(const Rational& a, const Rational& b, long n_floor) {
  for (long total = n_floor + 2;; ++total) {
    for (long n = n_floor + 1; n < total; ++n) {
      long i = total - n;
      Rational d = cheb_value(n, a) * cheb_value(n + i, b) - cheb_value(n, b) * cheb_value(n + i, a);
      if (!d.is_zero()) return {n, i};
    }
  }
}

}  // namespace

TEST_CASE("cheb_poly examples") {
  CHECK(cheb_poly(0) == IntPolynomial(1));
  CHECK(cheb_poly(1) == IntPolynomial::variable());
  CHECK(cheb_poly(4).eval(Rational(2)) == pattern_value(4, 2));
  CHECK(cheb_poly(4).to_string() == "x^4 - 3*x^2 + 1");
  CHECK_THROWS_AS(cheb_poly(-1), InputError);
}

TEST_CASE("cheb_poly matches characteristic polynomials of paths") {
  for (std::size_t k = 1; k <= 8; ++k) CHECK(cheb_poly(static_cast<long>(k)) == char_poly(path_adjacency(k)));
}

TEST_CASE("cheb_value against closed patterns") {
  for (long k = 0; k < 30; ++k) {
    CHECK(cheb_value(k, Rational(2)) == pattern_value(k, 2));
    CHECK(cheb_value(k, Rational(0)) == pattern_value(k, 0));
  }
  CHECK(cheb_value(-1, Rational(5)) == Rational(0));
  CHECK(cheb_value(-2, Rational(5)) == Rational(-1));
}

TEST_CASE("cheb_matrix_seq examples") {
  auto seq = cheb_matrix_seq(emat({{0, 1}, {1, 0}}), 2);
  CHECK(seq[2].is_zero());

  auto one = cheb_matrix_seq(emat({{1, 2}, {2, 0}}), 1);
  REQUIRE(one.matrices.size() == 2);
  CHECK(one[0] == ExactMatrix::identity(2));
  CHECK(one[1] == emat({{1, 2}, {2, 0}}));

  auto two = cheb_matrix_seq(emat({{2}}), 3);
  for (long k = 0; k <= 3; ++k) CHECK(two[static_cast<std::size_t>(k)] == emat({{k + 1}}));

  CHECK_THROWS_AS(cheb_matrix_seq(ExactMatrix(1, 2), 2), InputError);
  CHECK_THROWS_AS(cheb_matrix_seq(emat({{1}}), 0), InputError);
}

TEST_CASE("three-term recurrence holds in every sequence") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix e = random_symmetric(rng, dim(rng), 3);
    auto seq = cheb_matrix_seq(e, 12);
    for (std::size_t k = 2; k <= 12; ++k) CHECK(seq[k] == e * seq[k - 1] - seq[k - 2]);
  }
}

TEST_CASE("x_power_blocks examples") {
  ExactMatrix e = emat({{0, 1}, {1, 0}});
  CHECK(x_power_blocks(e, 1).assemble() == literal_x(e));
  auto b = x_power_blocks(emat({{2}}), 2);
  CHECK(b.top_left == emat({{3}}));
  CHECK(b.top_right == emat({{-2}}));
  CHECK(b.bottom_left == emat({{2}}));
  CHECK(b.bottom_right == emat({{-1}}));
  CHECK(literal_x(emat({{2}})).pow(2) == b.assemble());
}

TEST_CASE("x_power_blocks equals the literal power") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 12; ++trial) {
    ExactMatrix e = random_symmetric(rng, dim(rng), 3);
    ExactMatrix x = literal_x(e);
    ExactMatrix power = x;
    for (long k = 1; k <= 20; ++k) {
      CHECK(x_power_blocks(e, k).assemble() == power);
      power = power * x;
    }
  }
}

TEST_CASE("detect_periodicity examples") {
  auto a2 = detect_periodicity(emat({{0, 1}, {1, 0}}), 20);
  REQUIRE(a2.has_value());
  CHECK(a2->period == 6);
  CHECK(a2->preperiod == 0);
  CHECK_FALSE(detect_periodicity(emat({{2}}), 50).has_value());
  auto zero = detect_periodicity(emat({{0}}), 10);
  REQUIRE(zero.has_value());
  CHECK(zero->period == 4);
  CHECK_THROWS_AS(detect_periodicity(emat({{0}}), 1), InputError);
}

TEST_CASE("path adjacency sequences are periodic") {
  for (std::size_t r = 1; r <= 6; ++r) {
    auto p = detect_periodicity(to_exact(path_adjacency(r)), 40);
    REQUIRE(p.has_value());
    // f_r(E) = 0 and f_{r+1}(E) = -f_{r-1}(E) give f_{m + 2r + 2} = f_m.
    CHECK((2 * r + 2) % p->period == 0);
  }
}

TEST_CASE("eigenvalue_row_table reproduces the A2 table") {
  std::ifstream in(std::string(EXTFIN_GOLDEN_DIR) + "/alternating_rows.tsv");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  auto golden = parse_row_table(buf.str());
  auto rows = eigenvalue_row_table({Rational(1), Rational(-1)}, 1, 12);
  CHECK(rows == golden);
  CHECK(format_row_table(rows) == buf.str());

  auto two = eigenvalue_row_table({Rational(2)}, 0, 3);
  for (long k = 0; k <= 3; ++k) CHECK(two[static_cast<std::size_t>(k)][0] == pattern_value(k, 2));
  auto zero = eigenvalue_row_table({Rational(0)}, 0, 3);
  for (long k = 0; k <= 3; ++k) CHECK(zero[static_cast<std::size_t>(k)][0] == pattern_value(k, 0));
  CHECK_THROWS_AS(eigenvalue_row_table({Rational(1)}, 3, 2), InputError);
}

TEST_CASE("select_nonsingular examples") {
  auto one = select_nonsingular({Rational(1)}, 0);
  REQUIRE(one.has_value());
  CHECK(one->n == 1);
  CHECK(one->offsets.empty());

  auto pm = select_nonsingular({Rational(1), Rational(-1)}, 0);
  REQUIRE(pm.has_value());
  CHECK(pm->n == 1);
  CHECK(pm->offsets == std::vector<long>{3});
  CHECK(pm->det == Rational(-2));
  CHECK(exhaustive_pair(Rational(1), Rational(-1), 0) == std::pair<long, long>{1, 3});

  auto twozero = select_nonsingular({Rational(2), Rational(0)}, 5);
  REQUIRE(twozero.has_value());
  auto expect = exhaustive_pair(Rational(2), Rational(0), 5);
  CHECK(expect == std::pair<long, long>{6, 1});
  CHECK(twozero->n == expect.first);
  CHECK(twozero->offsets == std::vector<long>{expect.second});

  CHECK_THROWS_AS(select_nonsingular({Rational(1), Rational(1)}, 0), InputError);
  CHECK_FALSE(select_nonsingular({Rational(0)}, 0, 1).has_value());
}

TEST_CASE("select_nonsingular results re-verify under both strategies") {
  std::vector<std::vector<Rational>> sets{
      {Rational(1), Rational(-1)},
      {Rational(2), Rational(0)},
      {Rational(2), Rational(1), Rational(-1)},
      {Rational(2), Rational(0), Rational(-2)},
      {Rational(BigInt(1), BigInt(2)), Rational(3), Rational(-1), Rational(0)},
  };
  for (const auto& mu : sets) {
    for (long floor : {0L, 3L, 7L}) {
      for (auto strategy : {SelectionStrategy::search, SelectionStrategy::row_reduction}) {
        auto s = select_nonsingular(mu, floor, std::nullopt, strategy);
        REQUIRE(s.has_value());
        CHECK(s->n > floor);
        for (std::size_t a = 0; a < s->offsets.size(); ++a) {
          CHECK(s->offsets[a] > (a == 0 ? 0 : s->offsets[a - 1]));
        }
        Rational det = determinant(from_rows(cheb_row_matrix(mu, s->indices()), mu.size()));
        CHECK_FALSE(det.is_zero());
        CHECK(det == s->det);
      }
    }
  }
}
