#include "extfin/report/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "extfin/chebyshev/chebyshev.hpp"
#include "extfin/chebyshev/nonsingular.hpp"
#include "extfin/dynamics/dynamics.hpp"
#include "extfin/dynamics/verdict.hpp"
#include "extfin/errors.hpp"
#include "extfin/linalg/elimination.hpp"
#include "extfin/linalg/spectral.hpp"
#include "extfin/modcat/homology.hpp"
#include "extfin/modcat/induction.hpp"

namespace extfin {

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  CheckOutcome outcome(const std::string& summary) const {
    if (!failure_.empty()) return {false, "failed: " + failure_};
    return {true, summary + " (" + std::to_string(count_) + " assertions)"};
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

Rational r(long v) { return Rational(v); }

QMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Rational> e;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    cols = row.size();
    for (long x : row) e.emplace_back(x);
  }
  return QMatrix(rows.size(), cols, std::move(e));
}

QMatrix path_adjacency(std::size_t k) {
  QMatrix a(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = a(i + 1, i) = r(1);
  return a;
}

ExactMatrix literal_x(const ExactMatrix& e) {
  const std::size_t n = e.rows();
  ExactMatrix x(2 * n, 2 * n);
  x.set_block(0, 0, e);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, n + i) = RatFun(-1);
    x(n + i, i) = RatFun(1);
  }
  return x;
}

ModuleRep c_like(const AlgebraPtr& a, const RatFun& lam) {
  ModuleRep c = make_C_module(lam);
  return a->family() == AlgebraFamily::q_exterior ? c : induce(c, a);
}

std::string q_text(long m) { return RatFun::q_power(m).to_string(); }

// Criterion checks.

CheckOutcome golden_table(std::uint64_t) {
  Tally t;
  const long pattern[6][2] = {{1, -1}, {0, 0}, {-1, 1}, {-1, -1}, {0, 0}, {1, 1}};
  auto rows = eigenvalue_row_table({r(1), r(-1)}, 1, 12);
  t.expect(rows.size() == 12, "table has 12 rows");
  for (std::size_t i = 0; i < rows.size() && i < 12; ++i) {
    t.expect(rows[i] == std::vector<Rational>{r(pattern[i % 6][0]), r(pattern[i % 6][1])},
             "row " + std::to_string(i + 1) + " of the (1, -1) table");
  }
  t.expect(parse_row_table(format_row_table(rows)) == rows, "row table text round trip");
  auto period = detect_periodicity(to_exact(qmat({{0, 1}, {1, 0}})), 64);
  t.expect(period.has_value() && period->period == 6, "period of [[0,1],[1,0]] is 6");
  return t.outcome("12 rows match, period 6");
}

CheckOutcome cheb_char_poly(std::uint64_t) {
  Tally t;
  for (long k = 1; k <= 8; ++k) {
    t.expect(cheb_poly(k) == char_poly(path_adjacency(static_cast<std::size_t>(k))),
             "f_" + std::to_string(k) + " = char poly of the path on " + std::to_string(k) + " vertices");
  }
  return t.outcome("k = 1..8");
}

CheckOutcome x_power_identity(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 5), entry(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = static_cast<std::size_t>(size(rng));
    ExactMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) e(i, j) = e(j, i) = RatFun(entry(rng));
    }
    ExactMatrix x = literal_x(e);
    ExactMatrix power = ExactMatrix::identity(2 * n);
    for (long k = 1; k <= 20; ++k) {
      power = power * x;
      t.expect(x_power_blocks(e, k).assemble() == power,
               "trial " + std::to_string(trial) + ", k = " + std::to_string(k));
    }
  }
  return t.outcome("50 matrices, k <= 20");
}

CheckOutcome dimvector_recursion(std::uint64_t) {
  Tally t;
  std::vector<ModuleRep> starts{make_C_module(RatFun::q())};
  for (std::size_t r = 2; r <= 4; ++r) starts.push_back(induce(make_C_module(RatFun::q()), r));
  for (const auto& m : starts) {
    QMatrix x = build_X(m.algebra->e_matrix());
    ModuleRep cur = m;
    for (int k = 1; k <= 8; ++k) {
      ModuleRep next = syzygy(cur);
      DimVector predicted = DimVector::from_stacked(x * dim_vector(cur).stacked());
      t.expect(dim_vector(next) == predicted, to_string(m.algebra->family()) + " rank " +
                                                  std::to_string(m.algebra->rank()) + " depth " + std::to_string(k));
      cur = next;
    }
  }
  return t.outcome("C(q) and induced modules r = 2, 3, 4 to depth 8");
}

CheckOutcome syzygy_shift(std::uint64_t) {
  Tally t;
  ModuleRep cur = make_C_module(RatFun::q());
  for (long m = 1; m <= 6; ++m) {
    cur = syzygy(cur);
    auto lam = c_module_parameter(cur);
    t.expect(lam.has_value() && *lam == RatFun::q_power(1 - m), "parameter of Omega^" + std::to_string(m) + " is " + q_text(1 - m));
  }
  return t.outcome("parameters q^(1-m) for m = 1..6");
}

CheckOutcome ext_c_modules(std::uint64_t) {
  Tally t;
  const RatFun lam = RatFun::q();
  ModuleRep target = make_C_module(lam);
  for (long j = -5; j <= 5; ++j) {
    if (j == 0 || j == 1) continue;
    ModuleRep mu = make_C_module(RatFun::q_power(j) * lam);
    t.expect(ext_dim(mu, target, 1) == 0, "Ext^1(C(q^" + std::to_string(j) + " q), C(q)) = 0");
    t.expect(ext_dim_cochain(mu, target, 1) == 0, "cochain Ext^1 at j = " + std::to_string(j));
  }
  for (const RatFun& mu : {lam, RatFun::q() * lam}) {
    t.expect(ext_dim(make_C_module(mu), target, 1) == 1, "Ext^1 = 1 at mu = " + mu.to_string());
    t.expect(ext_dim_cochain(make_C_module(mu), target, 1) == 1, "cochain Ext^1 = 1 at mu = " + mu.to_string());
  }
  for (std::size_t k = 2; k <= 8; ++k) {
    t.expect(ext_dim(target, target, k) == 0, "Ext^" + std::to_string(k) + "(C, C) = 0");
  }
  return t.outcome("9 generic mu, 2 exceptional mu, k = 2..8");
}

CheckOutcome embedding(std::uint64_t) {
  Tally t;
  for (std::size_t r = 2; r <= 4; ++r) {
    auto a = make_dnak_algebra(r);
    bool ok = true;
    try {
      verify_qext_embedding(*a);
    } catch (const InconsistencyError&) {
      ok = false;
    }
    t.expect(ok, "x, y relations at r = " + std::to_string(r));
    FreeRanks fr = qext_free_ranks(a);
    t.expect(fr.left == r && fr.right == r, "free of rank r on both sides at r = " + std::to_string(r));
    t.expect(induce(make_C_module(RatFun::q()), a).dim == 2 * r, "dim A(x)C = 2r at r = " + std::to_string(r));
  }
  return t.outcome("r = 2, 3, 4");
}

CheckOutcome induced_ext(std::uint64_t) {
  Tally t;
  const RatFun lam = RatFun::q();
  for (std::size_t r = 2; r <= 3; ++r) {
    auto a = make_dnak_algebra(r);
    ModuleRep target = induce(make_C_module(lam), a);
    for (long s = 1; s <= 4; ++s) {
      ModuleRep source = induce(make_C_module(RatFun::q_power(-s) * lam), a);
      t.expect(hom_space(source, target).dim() == r,
               "Hom dimension r at r = " + std::to_string(r) + ", shift " + std::to_string(s));
    }
    for (std::size_t k = 2; k <= 6; ++k) {
      std::size_t primary = ext_dim(target, target, k);
      std::size_t oracle = ext_dim_cochain(target, target, k);
      t.expect(primary == 0 && oracle == 0,
               "Ext^" + std::to_string(k) + " of the induced module at r = " + std::to_string(r));
    }
  }
  return t.outcome("r = 2, 3; shifts 1..4; k = 2..6");
}

CheckOutcome defects(std::uint64_t seed) {
  Tally t;
  std::vector<ModuleRep> modules{make_C_module(RatFun::q()), induce(make_C_module(RatFun::q()), 2),
                                 induce(make_C_module(RatFun::q()), 3)};
  for (const auto& m : modules) {
    QMatrix e = m.algebra->e_matrix();
    DimVector v = dim_vector(m);
    for (std::size_t k = 1; k <= 10; ++k) {
      t.expect(orthogonality_defect(e, v, k).is_zero(), "defect at " + v.to_string() + ", k = " + std::to_string(k));
    }
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> size(1, 4), entry(0, 3), comp(0, 5), degree(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(size(rng));
    QMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) e(i, j) = e(j, i) = r(entry(rng));
    }
    std::vector<long> tv(n), sv(n);
    for (auto& x : tv) x = comp(rng);
    for (auto& x : sv) x = comp(rng);
    DimVector v = DimVector::from_longs(tv, sv);
    std::size_t k = static_cast<std::size_t>(degree(rng));
    t.expect(expand_3k(e, v, k) == orthogonality_defect(e, v, k), "random triple " + std::to_string(trial));
  }
  return t.outcome("3 modules to k = 10, 100 random triples");
}

CheckOutcome certificates(std::uint64_t seed) {
  Tally t;
  std::vector<QMatrix> panel{qmat({{3}}), qmat({{0, 3}, {3, 0}}), qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}})};
  std::mt19937_64 rng(seed + 10);
  std::uniform_int_distribution<long> comp(0, 5);
  for (const auto& e : panel) {
    SpectralClass sc = spectral_classify(e);
    t.expect(sc.band == SpectralBand::above_two, "band of a panel matrix");
    t.expect(extfinite_verdict(e).conclusion == Conclusion::none_exist, "verdict of a panel matrix");
    for (int c = 0; c < 20; ++c) {
      std::vector<long> tv(e.rows()), sv(e.rows());
      for (auto& x : tv) x = comp(rng);
      for (auto& x : sv) x = comp(rng);
      if (std::all_of(tv.begin(), tv.end(), [](long x) { return x == 0; }) &&
          std::all_of(sv.begin(), sv.end(), [](long x) { return x == 0; })) {
        tv[0] = 1;
      }
      DimVector v = DimVector::from_longs(tv, sv);
      t.expect(certify_violation(e, v, 12).has_value(), "certificate for " + v.to_string());
    }
  }
  return t.outcome("3 matrices x 20 dimension vectors");
}

CheckOutcome perron_recursion(std::uint64_t) {
  Tally t;
  QMatrix two = qmat({{2}});
  SpectralClass sc = spectral_classify(two);
  auto traj = iterate_dimvec(two, DimVector::from_longs({2}, {1}), 8);
  for (std::size_t m = 0; m + 1 < traj.size(); ++m) {
    auto p = perron_projection(sc, traj[m]);
    auto pn = perron_projection(sc, traj[m + 1]);
    t.expect(Interval::point(lemma36_step(p)) == pn.beta1 && pn.alpha1 == p.beta1, "step " + std::to_string(m) + " from (2|1)");
  }
  std::vector<std::pair<ModuleRep, bool>> orbits{{make_C_module(RatFun::q()), true},
                                                 {induce(make_C_module(RatFun::q()), 2), true},
                                                 {induce(make_C_module(RatFun::q()), 3), true},
                                                 {syzygy(simple_module(make_qext_algebra(), 0)), false},
                                                 {syzygy(simple_module(make_dnak_algebra(3), 0)), false}};
  for (const auto& [m, fixed] : orbits) {
    SpectralClass msc = spectral_classify(m.algebra->e_matrix());
    ModuleRep cur = m;
    for (int k = 0; k < 6; ++k) {
      ModuleRep next = syzygy(cur);
      auto p = perron_projection(msc, dim_vector(cur));
      auto pn = perron_projection(msc, dim_vector(next));
      t.expect(Interval::point(lemma36_step(p)) == pn.beta1, "modcat orbit step " + std::to_string(k));
      if (fixed) t.expect(check_quadratic_constraint(p) == Interval::point(Rational()), "quadratic residual on a fixed orbit");
      cur = next;
    }
  }
  return t.outcome("trajectory from (2|1) and 5 module orbits");
}

CheckOutcome parity(std::uint64_t) {
  Tally t;
  std::vector<AlgebraPtr> algebras{make_qext_algebra(), make_dnak_algebra(2), make_dnak_algebra(3)};
  for (const auto& a : algebras) {
    std::vector<ModuleRep> simples;
    for (std::size_t v = 0; v < a->vertices(); ++v) simples.push_back(simple_module(a, v));
    ModuleRep c = c_like(a, RatFun::q());
    for (int k = 0; k <= 8; ++k) {
      for (auto& s : simples) {
        t.expect(s.dim % 2 == 1, "odd syzygy of a simple");
        s = syzygy(s);
      }
      t.expect(c.dim % 2 == 0, "even syzygy of C");
      c = syzygy(c);
    }
  }
  return t.outcome("qext and dnak r = 2, 3, k <= 8");
}

CheckOutcome nonsingular(std::uint64_t) {
  Tally t;
  std::vector<std::vector<Rational>> sets{{r(1), r(-1)}, {r(2), r(0)}, {r(2), r(1), r(-1)}, {r(2), r(0), r(-2)}};
  for (const auto& eig : sets) {
    for (long floor : {0L, 3L, 7L}) {
      for (auto strategy : {SelectionStrategy::search, SelectionStrategy::row_reduction}) {
        auto sel = select_nonsingular(eig, floor, std::nullopt, strategy);
        bool ok = sel.has_value() && sel->n > floor;
        if (ok) {
          auto rows = cheb_row_matrix(eig, sel->indices());
          Rational det = determinant(from_rows(rows, eig.size()));
          ok = !det.is_zero() && det == sel->det;
        }
        t.expect(ok, "selection for " + std::to_string(eig.size()) + " eigenvalues, floor " + std::to_string(floor));
      }
    }
  }
  return t.outcome("4 eigenvalue sets x 3 floors x 2 strategies");
}

// Suite-only sanity checks.

CheckOutcome ratfun_field(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<long> c(-3, 3), e(-3, 3);
  auto random_ratfun = [&] {
    RatFun f = RatFun(Rational(c(rng))) + RatFun(Rational(c(rng))) * RatFun::q_power(e(rng));
    return f.is_zero() ? RatFun(1) : f;
  };
  for (int trial = 0; trial < 60; ++trial) {
    RatFun a = random_ratfun(), b = random_ratfun(), d = random_ratfun();
    t.expect((a + b) * d == a * d + b * d, "distributivity");
    t.expect(a * a.inverse() == RatFun(1), "inverse");
    t.expect(parse_ratfun(a.to_string()) == a, "text round trip of " + a.to_string());
  }
  return t.outcome("60 random triples");
}

CheckOutcome cayley_hamilton(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed + 2);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(size(rng));
    QMatrix e(n, n);
    for (auto i = 0u; i < n; ++i) {
      for (auto j = 0u; j < n; ++j) e(i, j) = r(entry(rng));
    }
    IntPolynomial p = char_poly(e);
    QMatrix acc(n, n), power = QMatrix::identity(n);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      QMatrix term = power;
      term *= Rational(p.coeffs()[i]);
      acc += term;
      power = power * e;
    }
    t.expect(acc.is_zero(), "Cayley-Hamilton on trial " + std::to_string(trial));
  }
  return t.outcome("30 random matrices");
}

CheckOutcome spectral_examples(std::uint64_t) {
  Tally t;
  t.expect(spectral_classify(qmat({{2}})).band == SpectralBand::equal_two, "[[2]]");
  t.expect(spectral_classify(qmat({{0, 1}, {1, 0}})).band == SpectralBand::below_two, "[[0,1],[1,0]]");
  t.expect(spectral_classify(qmat({{0, 3}, {3, 0}})).band == SpectralBand::above_two, "[[0,3],[3,0]]");
  SpectralClass irr = spectral_classify(qmat({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  // 1 + sqrt 2 is the root of x^2 - 2x - 1 above 2.
  auto g = [](const Rational& x) { return x * x - Rational(2) * x - Rational(1); };
  t.expect(!irr.perron_exact() && g(irr.perron_root.lo).sign() <= 0 && g(irr.perron_root.hi).sign() >= 0 &&
               irr.perron_root.lo > Rational(2),
           "1 + sqrt 2 enclosure");
  return t.outcome("4 classifications");
}

CheckOutcome verdict_examples(std::uint64_t) {
  Tally t;
  t.expect(extfinite_verdict(qmat({{2}}), FamilyTag::q_exterior, true).conclusion == Conclusion::ext_finite_exists,
           "q-exterior verdict");
  QMatrix circ(4, 4);
  for (std::size_t i = 0; i < 4; ++i) circ(i, (i + 1) % 4) = circ(i, (i + 3) % 4) = r(1);
  t.expect(extfinite_verdict(circ, FamilyTag::double_nakayama, true).conclusion == Conclusion::ext_finite_exists,
           "Double Nakayama verdict");
  t.expect(extfinite_verdict(qmat({{2}})).conclusion == Conclusion::needs_family_data, "missing family data");
  t.expect(extfinite_verdict(qmat({{0, 1}, {1, 0}})).conclusion == Conclusion::none_exist, "below two");
  return t.outcome("4 verdicts");
}

CheckOutcome hom_stability(std::uint64_t) {
  Tally t;
  auto a2 = make_dnak_algebra(2);
  std::vector<std::pair<ModuleRep, ModuleRep>> pairs{
      {make_C_module(RatFun::q()), make_C_module(RatFun::q())},
      {simple_module(make_qext_algebra(), 0), make_C_module(RatFun::q())},
      {induce(make_C_module(RatFun::q()), a2), induce(make_C_module(RatFun(1)), a2)}};
  for (const auto& [m, n] : pairs) {
    t.expect(stable_hom_dim(m, n) == stable_hom_dim(syzygy(m), syzygy(n)), "stable Hom invariant under syzygy");
    for (std::size_t k = 1; k <= 3; ++k) t.expect(ext_dim(m, n, k) == ext_dim_cochain(m, n, k), "Ext engines agree");
  }
  return t.outcome("3 pairs");
}

std::vector<Check> build_checks() {
  return {
      {"exactnum.field", "exactnum", "rational functions form a field with stable text form", 10, ratfun_field},
      {"linalg.cayley_hamilton", "linalg", "characteristic polynomials annihilate their matrices", 10, cayley_hamilton},
      {"linalg.spectral", "linalg", "spectral classification examples", 5, spectral_examples},
      {"A1", "chebyshev", "row table for eigenvalues (1, -1) and period 6", 1, golden_table},
      {"A2", "chebyshev", "f_k equals the characteristic polynomial of the path", 5, cheb_char_poly},
      {"A3", "chebyshev", "X^k from Chebyshev blocks equals the literal power", 30, x_power_identity},
      {"A13", "chebyshev", "nonsingular Chebyshev row selections", 30, nonsingular},
      {"A4", "modcat", "dimension vectors follow the X-recursion", 60, dimvector_recursion},
      {"A5", "modcat", "syzygies of C(q) have parameters q^(1-m)", 10, syzygy_shift},
      {"A6", "modcat", "Ext between C-modules", 60, ext_c_modules},
      {"A7", "modcat", "q-exterior subalgebra of the Double Nakayama algebra", 30, embedding},
      {"A8", "modcat", "Hom and Ext of induced modules", 300, induced_ext},
      {"A12", "modcat", "parity of syzygy dimensions", 60, parity},
      {"modcat.stability", "modcat", "stable Hom and Ext engines", 30, hom_stability},
      {"A9", "dynamics", "orthogonality defects vanish and match the Chebyshev expansion", 60, defects},
      {"A10", "dynamics", "violation certificates for lambda > 2", 30, certificates},
      {"A11", "dynamics", "Perron projections obey the beta recursion", 10, perron_recursion},
      {"dynamics.verdict", "dynamics", "verdict examples", 5, verdict_examples},
  };
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = build_checks();
  return checks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exactnum", "linalg", "chebyshev", "modcat", "dynamics", "all"};
  return names;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

CheckResult run_check(const Check& check, std::uint64_t seed) {
  CheckResult res{check.id, check.suite, check.title, false, "", 0, check.budget_seconds};
  auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  try {
    out = check.run(seed);
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  res.seconds = seconds_since(start);
  res.passed = out.passed;
  res.detail = out.detail;
  if (res.passed && res.seconds > check.budget_seconds) {
    res.passed = false;
    res.detail += "; over the time budget";
  }
  return res;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InputError("unknown suite '" + suite + "'");
  }
  SuiteReport report;
  report.suite = suite;
  report.seed = seed;
  auto start = std::chrono::steady_clock::now();
  for (const auto& check : all_checks()) {
    if (suite == "all" || check.suite == suite) report.checks.push_back(run_check(check, seed));
  }
  report.total_seconds = seconds_since(start);
  return report;
}

nlohmann::json suite_report_to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"suite", c.suite},
                      {"title", c.title},
                      {"status", c.passed ? "pass" : "fail"},
                      {"detail", c.detail},
                      {"seconds", c.seconds},
                      {"budget_seconds", c.budget_seconds}});
  }
  return {{"schema", r.schema},         {"suite", r.suite},          {"seed", r.seed},
          {"passed", r.passed()},       {"checks", checks},          {"total_seconds", r.total_seconds}};
}

SuiteReport suite_report_from_json(const nlohmann::json& j) {
  try {
    SuiteReport r;
    r.schema = j.at("schema").get<int>();
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.total_seconds = j.at("total_seconds").get<double>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("id").get<std::string>(), c.at("suite").get<std::string>(), c.at("title").get<std::string>(),
                          c.at("status").get<std::string>() == "pass", c.at("detail").get<std::string>(),
                          c.at("seconds").get<double>(), c.at("budget_seconds").get<double>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed suite report: ") + e.what());
  }
}

nlohmann::json suite_report_fingerprint(const SuiteReport& r) {
  nlohmann::json j = suite_report_to_json(r);
  j.erase("total_seconds");
  for (auto& c : j["checks"]) c.erase("seconds");
  return j;
}

std::string format_suite_report(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " (seed " << r.seed << ")\n";
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    if (!c.passed) ++failed;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", c.seconds);
    out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << secs << "]  " << c.detail << "\n";
  }
  char total[32];
  std::snprintf(total, sizeof total, "%.2fs", r.total_seconds);
  out << (r.checks.size() - failed) << "/" << r.checks.size() << " checks passed in " << total << "\n";
  return out.str();
}

}  // namespace extfin
