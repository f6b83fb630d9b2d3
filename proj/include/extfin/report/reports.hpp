#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extfin/dynamics/verdict.hpp"
#include "extfin/modcat/module.hpp"

namespace extfin {

struct ClassificationReport {
  std::string source;
  Verdict verdict;
};

ClassificationReport classify_report(const QMatrix& e, const std::string& source, std::optional<FamilyTag> family,
                                     std::optional<bool> parameter_generic);
nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport classification_report_from_json(const nlohmann::json& j);
std::string to_text(const ClassificationReport& r);

struct OrbitStep {
  std::size_t m = 0;
  std::size_t dim = 0;
  std::optional<DimVector> dim_vector;
  std::optional<std::string> c_parameter;
  /// dim_vector(Ω^m M) == X dim_vector(Ω^{m-1} M); absent at m = 0.
  std::optional<bool> x_check;

  friend bool operator==(const OrbitStep&, const OrbitStep&) = default;
};

struct OrbitReport {
  std::string algebra;
  std::string start;
  std::vector<OrbitStep> steps;

  bool checks_pass() const;
  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

/// Ω^m M for m = 0..steps. Simple starting modules use the tolerant
/// dimension vector (1 | 0).
OrbitReport orbit_report(const ModuleRep& m, const std::string& start, std::size_t steps);
nlohmann::json to_json(const OrbitReport& r);
OrbitReport orbit_report_from_json(const nlohmann::json& j);
std::string to_text(const OrbitReport& r);

struct ExtRow {
  std::size_t k = 0;
  std::size_t primary = 0;
  std::size_t oracle = 0;
  bool agree() const { return primary == oracle; }
  friend bool operator==(const ExtRow&, const ExtRow&) = default;
};

struct ExtTableReport {
  std::string algebra;
  std::string source;
  std::string target;
  std::vector<ExtRow> rows;
  friend bool operator==(const ExtTableReport&, const ExtTableReport&) = default;
};

/// dim Ext^k(M, N) for 1 <= k <= max_k by the syzygy engine and the cochain
/// oracle. Throws InconsistencyError when they disagree.
ExtTableReport ext_table_report(const ModuleRep& m, const ModuleRep& n, const std::string& source,
                                const std::string& target, std::size_t max_k);
nlohmann::json to_json(const ExtTableReport& r);
ExtTableReport ext_table_report_from_json(const nlohmann::json& j);
std::string to_text(const ExtTableReport& r);

struct ChebReport {
  std::optional<long> poly_degree;
  std::optional<std::string> polynomial;
  std::optional<std::vector<std::string>> eigenvalues;
  long from = 0;
  long to = 0;
  std::vector<std::vector<std::string>> rows;
  std::optional<QMatrix> matrix;
  /// f_0(E), ..., f_depth(E) as text matrices, when a matrix was given.
  std::vector<std::string> matrix_sequence;
  bool period_searched = false;
  std::optional<std::size_t> period;
  std::size_t period_bound = 0;
  friend bool operator==(const ChebReport&, const ChebReport&) = default;
};

ChebReport cheb_poly_report(long k);
ChebReport cheb_rows_report(const std::vector<Rational>& eigvals, long from, long to);
/// f_0(E)..f_depth(E); with detect_period, the period search up to bound.
ChebReport cheb_matrix_report(const QMatrix& e, std::size_t depth, bool detect_period, std::size_t bound);
nlohmann::json to_json(const ChebReport& r);
ChebReport cheb_report_from_json(const nlohmann::json& j);
std::string to_text(const ChebReport& r);

/// "[[a, b], [c, d]]".
std::string matrix_text(const QMatrix& m);

}  // namespace extfin
