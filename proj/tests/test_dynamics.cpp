#include <doctest.h>

#include <random>

#include "extfin/chebyshev/chebyshev.hpp"
#include "extfin/dynamics/dynamics.hpp"
#include "extfin/dynamics/json.hpp"
#include "extfin/errors.hpp"
#include "extfin/modcat/induction.hpp"

using namespace extfin;

namespace {

QMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Rational> e;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    cols = r.size();
    for (long x : r) e.emplace_back(x);
  }
  return QMatrix(rows.size(), cols, std::move(e));
}

QMatrix circulant(std::size_t r) {
  QMatrix e(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    e(i, (i + 1) % r) += Rational(1);
    e(i, (i + r - 1) % r) += Rational(1);
  }
  return e;
}

QMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  QMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) e(i, j) = e(j, i) = Rational(d(rng));
  }
  return e;
}

DimVector random_dimvector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(0, 4);
  std::vector<long> t(n), s(n);
  for (auto& x : t) x = d(rng);
  for (auto& x : s) x = d(rng);
  if (t[0] == 0 && s[0] == 0) t[0] = 1;
  return DimVector::from_longs(t, s);
}

// Independent evaluation of (s | -t) X^{k+1} (t | s) for 1x1 E through the
// closed form of X^{k+1} in terms of f_j(e).
Rational scalar_defect(long e, long t, long s, long k) {
  Rational x(e);
  Rational a = cheb_value(k + 1, x), b = -cheb_value(k, x), c = cheb_value(k, x), d = -cheb_value(k - 1, x);
  Rational nt = a * Rational(t) + b * Rational(s);
  Rational ns = c * Rational(t) + d * Rational(s);
  return Rational(s) * nt - Rational(t) * ns;
}

}  // namespace

TEST_CASE("build_X examples") {
  CHECK(build_X(qmat({{2}})) == qmat({{2, -1}, {1, 0}}));
  CHECK(build_X(qmat({{0, 1}, {1, 0}})) == qmat({{0, 1, -1, 0}, {1, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  for (const QMatrix& e : {qmat({{2}}), qmat({{0, 2}, {2, 0}}), circulant(4)}) {
    CHECK(to_exact(build_X(e)) == x_power_blocks(to_exact(e), 1).assemble());
  }
  CHECK_THROWS_AS(build_X(QMatrix(1, 2)), InputError);
}

TEST_CASE("iterate_dimvec examples") {
  auto c = iterate_dimvec(qmat({{2}}), DimVector::from_longs({1}, {1}), 5);
  CHECK(c.size() == 6);
  for (const auto& v : c) CHECK(v == DimVector::from_longs({1}, {1}));

  auto s = iterate_dimvec(qmat({{2}}), DimVector::from_longs({2}, {1}), 3);
  std::vector<DimVector> expect{DimVector::from_longs({2}, {1}), DimVector::from_longs({3}, {2}),
                                DimVector::from_longs({4}, {3}), DimVector::from_longs({5}, {4})};
  CHECK(s == expect);

  QMatrix e2 = qmat({{0, 2}, {2, 0}});
  auto d = iterate_dimvec(e2, DimVector::from_longs({1, 1}, {1, 1}), 4);
  for (std::size_t m = 0; m + 1 < d.size(); ++m) {
    CHECK(d[m + 1].s == d[m].t);
    for (std::size_t i = 0; i < 2; ++i) CHECK(d[m + 1].t[i] == 2 * d[m].t[1 - i] - d[m].s[i]);
  }

  try {
    iterate_dimvec(qmat({{1}}), DimVector::from_longs({1}, {1}), 4);
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& err) {
    CHECK(std::string(err.what()) ==
          "trajectory left the module cone — hypothesis 'Ω^r(M) not simple' violated or v0 not realizable");
  }
  CHECK_THROWS_AS(iterate_dimvec(qmat({{2}}), DimVector::from_longs({1, 1}, {1, 1}), 1), InputError);
}

TEST_CASE("iterate_dimvec agrees with syzygies built in modcat") {
  std::vector<ModuleRep> starts{make_C_module(RatFun::q())};
  for (std::size_t r = 2; r <= 3; ++r) starts.push_back(induce(make_C_module(RatFun::q()), r));
  starts.push_back(syzygy(simple_module(make_dnak_algebra(2), 0)));
  for (const auto& m : starts) {
    auto traj = iterate_dimvec(m.algebra->e_matrix(), dim_vector(m), 5);
    ModuleRep cur = m;
    for (std::size_t k = 1; k <= 5; ++k) {
      cur = syzygy(cur);
      CHECK(dim_vector(cur) == traj[k]);
    }
  }
}

TEST_CASE("orthogonality_defect examples") {
  for (std::size_t k = 0; k <= 10; ++k) {
    CHECK(orthogonality_defect(qmat({{2}}), DimVector::from_longs({1}, {1}), k).is_zero());
    CHECK(orthogonality_defect(qmat({{0, 2}, {2, 0}}), DimVector::from_longs({1, 1}, {1, 1}), k).is_zero());
  }
  // X^2 = [[8, -3], [3, -1]] for E = [[3]]; X^2 (1, 1) = (5, 2).
  CHECK(orthogonality_defect(qmat({{3}}), DimVector::from_longs({1}, {1}), 1) == Rational(3));
  for (long e = 0; e <= 4; ++e) {
    for (long k = 0; k <= 8; ++k) {
      CHECK(orthogonality_defect(qmat({{e}}), DimVector::from_longs({2}, {1}), static_cast<std::size_t>(k)) ==
            scalar_defect(e, 2, 1, k));
    }
  }
}

TEST_CASE("expand_3k examples and agreement with the defect") {
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(expand_3k(qmat({{2}}), DimVector::from_longs({1}, {1}), k).is_zero());
  }
  CHECK(expand_3k(qmat({{3}}), DimVector::from_longs({1}, {1}), 1) ==
        orthogonality_defect(qmat({{3}}), DimVector::from_longs({1}, {1}), 1));
  CHECK_THROWS_AS(expand_3k(qmat({{2}}), DimVector::from_longs({1}, {1}), 0), InputError);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> kd(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix e = random_symmetric(rng, 3, 0, 3);
    DimVector v = random_dimvector(rng, 3);
    std::size_t k = kd(rng);
    CHECK(expand_3k(e, v, k) == orthogonality_defect(e, v, k));
  }
}

TEST_CASE("perron_projection examples") {
  auto p = perron_projection(qmat({{2}}), DimVector::from_longs({1}, {1}));
  CHECK(p.exact());
  CHECK(p.alpha1 == Interval::point(Rational(1)));
  CHECK(p.beta1 == Interval::point(Rational(1)));
  CHECK(p.lam == Interval::point(Rational(2)));

  auto q2 = perron_projection(qmat({{0, 2}, {2, 0}}), DimVector::from_longs({1, 0}, {0, 1}));
  CHECK(q2.alpha1 == Interval::point(Rational(1)));
  CHECK(q2.beta1 == Interval::point(Rational(1)));

  auto s = perron_projection(qmat({{2}}), DimVector::from_longs({2}, {1}));
  CHECK(s.alpha1 == Interval::point(Rational(1)));
  CHECK(s.beta1 == Interval::point(Rational(2)));

  CHECK_THROWS_AS(perron_projection(qmat({{2}}), DimVector::from_longs({0}, {0})), InputError);

  auto irr = perron_projection(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}), DimVector::from_longs({1, 0, 0}, {0, 1, 1}));
  CHECK_FALSE(irr.exact());
  CHECK(irr.alpha1.lo.sign() > 0);
  CHECK(irr.beta1 == Interval::point(Rational(1)));
}

TEST_CASE("check_quadratic_constraint examples") {
  auto pt = [](long a, long b, Rational lam) {
    return PerronProjection{Interval::point(Rational(a)), Interval::point(Rational(b)), Interval::point(lam)};
  };
  CHECK(check_quadratic_constraint(pt(1, 1, Rational(2))) == Interval::point(Rational(0)));
  CHECK(check_quadratic_constraint(pt(1, 2, Rational(BigInt(5), BigInt(2)))) == Interval::point(Rational(0)));
  CHECK(check_quadratic_constraint(pt(1, 1, Rational(3))) == Interval::point(Rational(-1)));
  CHECK_THROWS_AS(check_quadratic_constraint(pt(0, 1, Rational(2))), InputError);

  auto irr = perron_projection(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}), DimVector::from_longs({1, 1, 1}, {1, 1, 1}));
  Interval res = check_quadratic_constraint(irr);
  CHECK_FALSE(res.is_point());
  CHECK(res.hi.sign() < 0);
}

TEST_CASE("lemma36_step examples") {
  CHECK(lemma36_step(perron_projection(qmat({{2}}), DimVector::from_longs({1}, {1}))) == Rational(1));
  auto p0 = perron_projection(qmat({{2}}), DimVector::from_longs({2}, {1}));
  CHECK(lemma36_step(p0) == Rational(3));
  auto traj = iterate_dimvec(qmat({{2}}), DimVector::from_longs({2}, {1}), 1);
  CHECK(perron_projection(qmat({{2}}), traj[1]).beta1 == Interval::point(Rational(3)));
  CHECK_THROWS_AS(lemma36_step(perron_projection(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                                                 DimVector::from_longs({1, 1, 1}, {1, 1, 1}))),
                  InputError);
}

TEST_CASE("lemma36_step predicts the next projection") {
  // Constant row sums give an integer Perron root.
  std::mt19937_64 rng(36);
  int used = 0;
  for (int trial = 0; trial < 60 && used < 15; ++trial) {
    std::size_t n = 2 + trial % 3;
    QMatrix e(n, n);
    for (int layer = 0; layer < 2; ++layer) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < n; ++i) {
        e(i, perm[i]) += Rational(1);
        e(perm[i], i) += Rational(1);
      }
    }
    SpectralClass sc;
    try {
      sc = spectral_classify(e);
    } catch (const HypothesisError&) {
      continue;
    }
    REQUIRE(sc.perron_exact());
    ++used;
    QMatrix x = build_X(e);
    std::vector<Rational> w = random_dimvector(rng, n).stacked();
    for (int m = 0; m < 5; ++m) {
      DimVector cur = DimVector::from_stacked(w);
      if (cur.is_zero()) break;
      w = x * w;
      DimVector next = DimVector::from_stacked(w);
      auto p = perron_projection(sc, cur);
      auto pn = perron_projection(sc, next);
      CHECK(Interval::point(lemma36_step(p)) == pn.beta1);
      CHECK(pn.alpha1 == p.beta1);
    }
  }
  CHECK(used >= 10);
}

TEST_CASE("rational_spectrum and projectors") {
  CHECK(rational_spectrum(qmat({{0, 2}, {2, 0}})) == std::vector<Rational>{Rational(-2), Rational(2)});
  CHECK(rational_spectrum(circulant(4)) == std::vector<Rational>{Rational(-2), Rational(0), Rational(2)});
  CHECK_FALSE(rational_spectrum(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}})).has_value());
  CHECK_FALSE(rational_spectrum(qmat({{0, 1}, {1, 1}})).has_value());

  QMatrix e = circulant(4);
  auto spectrum = *rational_spectrum(e);
  QMatrix sum(4, 4);
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    QMatrix p = eigenspace_projector(e, spectrum, j);
    CHECK(p * p == p);
    CHECK(p.is_symmetric());
    QMatrix ep = e * p;
    QMatrix mp = p;
    mp *= spectrum[j];
    CHECK(ep == mp);
    sum += p;
  }
  CHECK(sum == QMatrix::identity(4));
}

TEST_CASE("coefficient_vector_c examples") {
  auto c1 = coefficient_vector_c(qmat({{2}}), DimVector::from_longs({1}, {1}));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].eigenvalue == Rational(2));
  CHECK(c1[0].c.is_zero());

  auto c2 = coefficient_vector_c(qmat({{0, 2}, {2, 0}}), DimVector::from_longs({1, 1}, {1, 1}));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].c.is_zero());
  CHECK(c2[1].c.is_zero());

  auto c3 = coefficient_vector_c(qmat({{3}}), DimVector::from_longs({1}, {1}));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].c == Rational(1));

  try {
    coefficient_vector_c(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}), DimVector::from_longs({1, 1, 1}, {1, 1, 1}));
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& err) {
    CHECK(std::string(err.what()) == "exact c_j requires rational spectrum; use orthogonality_defect instead");
  }
}

TEST_CASE("defects expand in the coefficients c_j") {
  std::mt19937_64 rng(4);
  std::vector<QMatrix> panel{qmat({{3}}), qmat({{0, 3}, {3, 0}}), circulant(4), circulant(6), qmat({{1, 2}, {2, 1}}),
                             qmat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}})};
  for (const auto& e : panel) {
    for (int trial = 0; trial < 5; ++trial) {
      DimVector v = random_dimvector(rng, e.rows());
      auto cs = coefficient_vector_c(e, v);
      for (std::size_t k = 1; k <= 8; ++k) {
        Rational acc;
        for (const auto& entry : cs) acc += entry.c * cheb_value(static_cast<long>(k), entry.eigenvalue);
        CHECK(acc == orthogonality_defect(e, v, k));
      }
    }
  }
}

TEST_CASE("quadratic residual vanishes exactly with the Perron coefficient") {
  std::mt19937_64 rng(35);
  std::vector<QMatrix> panel{qmat({{2}}), qmat({{3}}), qmat({{0, 2}, {2, 0}}), qmat({{0, 3}, {3, 0}}), circulant(6),
                             qmat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}})};
  for (const auto& e : panel) {
    SpectralClass sc = spectral_classify(e);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<long> t(e.rows()), s(e.rows());
      std::uniform_int_distribution<long> d(1, 4);
      for (auto& x : t) x = d(rng);
      for (auto& x : s) x = d(rng);
      DimVector v = DimVector::from_longs(t, s);
      Interval res = check_quadratic_constraint(perron_projection(sc, v));
      REQUIRE(res.is_point());
      Rational perron_c;
      bool all_zero = true;
      for (const auto& entry : coefficient_vector_c(e, v)) {
        if (entry.eigenvalue == sc.perron_root.lo) perron_c = entry.c;
        all_zero = all_zero && entry.c.is_zero();
      }
      CHECK(res.lo.is_zero() == perron_c.is_zero());
      if (all_zero && sc.perron_multiplicity_one) CHECK(res.lo.is_zero());
      if (!res.lo.is_zero()) CHECK_FALSE(all_zero);
    }
  }
}

TEST_CASE("modules with vanishing higher self-extensions have vanishing defects") {
  std::vector<ModuleRep> modules{make_C_module(RatFun::q()), induce(make_C_module(RatFun::q()), 2),
                                 induce(make_C_module(RatFun::q()), 3)};
  for (const auto& m : modules) {
    QMatrix e = m.algebra->e_matrix();
    DimVector v = dim_vector(m);
    for (std::size_t k = 1; k <= 10; ++k) CHECK(orthogonality_defect(e, v, k).is_zero());
    CHECK_FALSE(certify_violation(e, v).has_value());
  }
}

TEST_CASE("alpha equals beta along realized orbits at lambda = 2") {
  std::vector<ModuleRep> modules{make_C_module(RatFun::q()), induce(make_C_module(RatFun::q()), 2),
                                 induce(make_C_module(RatFun::q()), 3)};
  for (const auto& m : modules) {
    SpectralClass sc = spectral_classify(m.algebra->e_matrix());
    ModuleRep cur = m;
    for (int k = 0; k < 5; ++k) {
      auto p = perron_projection(sc, dim_vector(cur));
      CHECK(p.alpha1 == p.beta1);
      CHECK(check_quadratic_constraint(p) == Interval::point(Rational(0)));
      cur = syzygy(cur);
    }
  }
}

TEST_CASE("certify_violation") {
  auto c = certify_violation(qmat({{3}}), DimVector::from_longs({1}, {1}));
  REQUIRE(c.has_value());
  CHECK(c->method == "coefficients");
  CHECK(c->value == Rational(1));

  auto d = certify_violation(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}), DimVector::from_longs({1, 1, 1}, {1, 1, 1}));
  REQUIRE(d.has_value());
  CHECK(d->method == "defect");
  CHECK(d->degree.has_value());

  CHECK_FALSE(certify_violation(qmat({{2}}), DimVector::from_longs({3}, {3})).has_value());
}

TEST_CASE("extfinite_verdict") {
  Verdict q = extfinite_verdict(qmat({{2}}), FamilyTag::q_exterior, true);
  CHECK(q.conclusion == Conclusion::ext_finite_exists);
  CHECK(q.spectral.band == SpectralBand::equal_two);

  Verdict big = extfinite_verdict(qmat({{0, 3}, {3, 0}}));
  CHECK(big.spectral.band == SpectralBand::above_two);
  CHECK(big.conclusion == Conclusion::none_exist);

  Verdict dn = extfinite_verdict(circulant(4), FamilyTag::double_nakayama, true);
  CHECK(dn.conclusion == Conclusion::ext_finite_exists);

  Verdict small = extfinite_verdict(qmat({{0, 1}, {1, 0}}));
  CHECK(small.spectral.band == SpectralBand::below_two);
  CHECK(small.conclusion == Conclusion::none_exist);

  CHECK(extfinite_verdict(qmat({{2}})).conclusion == Conclusion::needs_family_data);
  CHECK(extfinite_verdict(qmat({{2}}), FamilyTag::q_exterior).conclusion == Conclusion::needs_family_data);
  CHECK(extfinite_verdict(qmat({{2}}), FamilyTag::q_exterior, false).conclusion == Conclusion::none_exist);
  CHECK(extfinite_verdict(qmat({{2}}), FamilyTag::other, true).conclusion == Conclusion::none_exist);
  CHECK_THROWS_AS(extfinite_verdict(qmat({{2}}), FamilyTag::double_nakayama, true), HypothesisError);
  CHECK_THROWS_AS(extfinite_verdict(qmat({{0, 1}, {0, 0}})), HypothesisError);
  CHECK(q.evidence.size() >= 4);
}

TEST_CASE("verdict invariants across spectral classes") {
  std::vector<QMatrix> panel{qmat({{0}}),    qmat({{1}}),          qmat({{2}}),      qmat({{3}}),
                             circulant(3),  circulant(5),         qmat({{0, 1}, {1, 0}}), qmat({{1, 1}, {1, 1}}),
                             qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}})};
  for (const auto& e : panel) {
    Verdict v = extfinite_verdict(e);
    if (v.spectral.band == SpectralBand::equal_two) {
      CHECK(v.conclusion == Conclusion::needs_family_data);
    } else {
      CHECK(v.conclusion == Conclusion::none_exist);
    }
  }
}

TEST_CASE("dimension vector text and json") {
  DimVector v = DimVector::from_longs({1, 2}, {3, 4});
  CHECK(v.to_string() == "(1,2|3,4)");
  CHECK(parse_dimvector("(1,2|3,4)") == v);
  CHECK(parse_dimvector("1, 2 | 3, 4") == v);
  CHECK(dimvector_from_json(dimvector_to_json(v)) == v);
  CHECK(dimvector_to_json(v).dump() == R"({"s":[3,4],"t":[1,2]})");
  CHECK_THROWS_AS(parse_dimvector("1,2"), InputError);
  CHECK_THROWS_AS(parse_dimvector("1|1/2"), InputError);
  CHECK_THROWS_AS(dimvector_from_json(nlohmann::json::parse(R"({"t":[1],"s":[1,2]})")), InputError);
  CHECK(DimVector::from_stacked(v.stacked()) == v);
}

TEST_CASE("verdict json round trip") {
  for (const Verdict& v : {extfinite_verdict(circulant(4), FamilyTag::double_nakayama, true),
                           extfinite_verdict(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}))}) {
    nlohmann::json j = verdict_to_json(v);
    Verdict back = verdict_from_json(nlohmann::json::parse(j.dump()));
    CHECK(verdict_to_json(back) == j);
    CHECK(back.conclusion == v.conclusion);
    CHECK(back.spectral.perron_root == v.spectral.perron_root);
  }
  auto p = perron_projection(qmat({{2}}), DimVector::from_longs({2}, {1}));
  auto back = perron_projection_from_json(perron_projection_to_json(p));
  CHECK(back.alpha1 == p.alpha1);
  CHECK(back.beta1 == p.beta1);
  CHECK_THROWS_AS(verdict_from_json(nlohmann::json::parse("{}")), InputError);
}
