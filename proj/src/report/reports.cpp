#include "extfin/report/reports.hpp"

#include <sstream>

#include "extfin/chebyshev/chebyshev.hpp"
#include "extfin/dynamics/dynamics.hpp"
#include "extfin/dynamics/json.hpp"
#include "extfin/errors.hpp"
#include "extfin/linalg/json.hpp"
#include "extfin/modcat/homology.hpp"

namespace extfin {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

nlohmann::json optional_json(const std::optional<std::string>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::optional<std::string> optional_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::string>();
}

std::optional<DimVector> try_dim_vector(const ModuleRep& m) {
  if (m.dim == 1) return dim_vector(m, DimVectorMode::tolerant);
  try {
    return dim_vector(m);
  } catch (const HypothesisError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string matrix_text(const QMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

ClassificationReport classify_report(const QMatrix& e, const std::string& source, std::optional<FamilyTag> family,
                                     std::optional<bool> parameter_generic) {
  return {source, extfinite_verdict(e, family, parameter_generic)};
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j = verdict_to_json(r.verdict);
  j["schema"] = 1;
  j["command"] = "classify";
  j["source"] = r.source;
  return j;
}

ClassificationReport classification_report_from_json(const nlohmann::json& j) {
  return guarded("classification", [&] { return ClassificationReport{j.at("source").get<std::string>(), verdict_from_json(j)}; });
}

std::string to_text(const ClassificationReport& r) {
  const Verdict& v = r.verdict;
  std::ostringstream out;
  out << "source: " << r.source << "\n";
  out << "spectral class: " << to_string(v.spectral.band) << "\n";
  out << "lambda: " << v.spectral.perron_root.to_string() << "\n";
  if (v.family) out << "family: " << to_string(*v.family) << "\n";
  out << "conclusion: " << to_string(v.conclusion) << "\n";
  for (const auto& line : v.evidence) out << "  - " << line << "\n";
  return out.str();
}

bool OrbitReport::checks_pass() const {
  for (const auto& s : steps) {
    if (s.x_check && !*s.x_check) return false;
  }
  return true;
}

OrbitReport orbit_report(const ModuleRep& m, const std::string& start, std::size_t steps) {
  OrbitReport report{to_string(m.algebra->family()) +
                         (m.algebra->family() == AlgebraFamily::double_nakayama ? " r=" + std::to_string(m.algebra->rank()) : ""),
                     start,
                     {}};
  QMatrix x = build_X(m.algebra->e_matrix());
  ModuleRep cur = m;
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k > 0) cur = syzygy(cur);
    OrbitStep step;
    step.m = k;
    step.dim = cur.dim;
    step.dim_vector = try_dim_vector(cur);
    if (m.algebra->family() == AlgebraFamily::q_exterior) {
      if (auto lam = c_module_parameter(cur)) step.c_parameter = lam->to_string();
    }
    if (k > 0 && step.dim_vector && report.steps.back().dim_vector) {
      auto predicted = DimVector::from_stacked(x * report.steps.back().dim_vector->stacked());
      step.x_check = predicted == *step.dim_vector;
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

nlohmann::json to_json(const OrbitReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"m", s.m},
                     {"dim", s.dim},
                     {"dim_vector", s.dim_vector ? dimvector_to_json(*s.dim_vector) : nlohmann::json()},
                     {"c_parameter", optional_json(s.c_parameter)},
                     {"x_check", s.x_check ? nlohmann::json(*s.x_check) : nlohmann::json()}});
  }
  return {{"schema", 1}, {"command", "orbit"}, {"algebra", r.algebra}, {"start", r.start}, {"steps", steps},
          {"checks_pass", r.checks_pass()}};
}

OrbitReport orbit_report_from_json(const nlohmann::json& j) {
  return guarded("orbit report", [&] {
    OrbitReport r{j.at("algebra").get<std::string>(), j.at("start").get<std::string>(), {}};
    for (const auto& s : j.at("steps")) {
      OrbitStep step;
      step.m = s.at("m").get<std::size_t>();
      step.dim = s.at("dim").get<std::size_t>();
      if (!s.at("dim_vector").is_null()) step.dim_vector = dimvector_from_json(s["dim_vector"]);
      step.c_parameter = optional_string(s, "c_parameter");
      if (!s.at("x_check").is_null()) step.x_check = s["x_check"].get<bool>();
      r.steps.push_back(std::move(step));
    }
    return r;
  });
}

std::string to_text(const OrbitReport& r) {
  std::ostringstream out;
  out << "algebra: " << r.algebra << "\nstart: " << r.start << "\n";
  out << "m\tdim\tdim vector\tparameter\tX check\n";
  for (const auto& s : r.steps) {
    out << s.m << "\t" << s.dim << "\t" << (s.dim_vector ? s.dim_vector->to_string() : "-") << "\t"
        << s.c_parameter.value_or("-") << "\t" << (s.x_check ? (*s.x_check ? "ok" : "MISMATCH") : "-") << "\n";
  }
  return out.str();
}

ExtTableReport ext_table_report(const ModuleRep& m, const ModuleRep& n, const std::string& source,
                                const std::string& target, std::size_t max_k) {
  if (max_k < 1) throw InputError("max-k must be at least 1");
  ExtTableReport report{to_string(m.algebra->family()) +
                            (m.algebra->family() == AlgebraFamily::double_nakayama ? " r=" + std::to_string(m.algebra->rank()) : ""),
                        source, target, {}};
  for (std::size_t k = 1; k <= max_k; ++k) {
    ExtRow row{k, ext_dim(m, n, k), ext_dim_cochain(m, n, k)};
    if (!row.agree()) {
      throw InconsistencyError("Ext engines disagree at k = " + std::to_string(k) + ": syzygy " +
                               std::to_string(row.primary) + ", cochain " + std::to_string(row.oracle));
    }
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::json to_json(const ExtTableReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k}, {"ext", row.primary}, {"oracle", row.oracle}, {"agree", row.agree()}});
  }
  return {{"schema", 1}, {"command", "ext-table"}, {"algebra", r.algebra}, {"source", r.source},
          {"target", r.target}, {"rows", rows}};
}

ExtTableReport ext_table_report_from_json(const nlohmann::json& j) {
  return guarded("ext table", [&] {
    ExtTableReport r{j.at("algebra").get<std::string>(), j.at("source").get<std::string>(),
                     j.at("target").get<std::string>(), {}};
    for (const auto& row : j.at("rows")) {
      r.rows.push_back({row.at("k").get<std::size_t>(), row.at("ext").get<std::size_t>(), row.at("oracle").get<std::size_t>()});
    }
    return r;
  });
}

std::string to_text(const ExtTableReport& r) {
  std::ostringstream out;
  out << "algebra: " << r.algebra << "\nExt^k(" << r.source << ", " << r.target << ")\n";
  out << "k\tdim\toracle\n";
  for (const auto& row : r.rows) out << row.k << "\t" << row.primary << "\t" << row.oracle << "\n";
  return out.str();
}

ChebReport cheb_poly_report(long k) {
  ChebReport r;
  r.poly_degree = k;
  r.polynomial = cheb_poly(k).to_string();
  return r;
}

ChebReport cheb_rows_report(const std::vector<Rational>& eigvals, long from, long to) {
  ChebReport r;
  r.eigenvalues.emplace();
  for (const auto& e : eigvals) r.eigenvalues->push_back(e.to_string());
  r.from = from;
  r.to = to;
  for (const auto& row : eigenvalue_row_table(eigvals, from, to)) {
    std::vector<std::string> text;
    for (const auto& x : row) text.push_back(x.to_string());
    r.rows.push_back(std::move(text));
  }
  return r;
}

ChebReport cheb_matrix_report(const QMatrix& e, std::size_t depth, bool detect_period, std::size_t bound) {
  ChebReport r;
  r.matrix = e;
  ChebSequence seq = cheb_matrix_seq(to_exact(e), depth);
  for (const auto& f : seq.matrices) r.matrix_sequence.push_back(matrix_text(to_rational(f)));
  if (detect_period) {
    r.period_searched = true;
    r.period_bound = bound;
    if (auto p = detect_periodicity(to_exact(e), bound)) r.period = p->period;
  }
  return r;
}

nlohmann::json to_json(const ChebReport& r) {
  nlohmann::json j{{"schema", 1}, {"command", "cheb"}};
  j["poly_degree"] = r.poly_degree ? nlohmann::json(*r.poly_degree) : nlohmann::json();
  j["polynomial"] = optional_json(r.polynomial);
  j["eigenvalues"] = r.eigenvalues ? nlohmann::json(*r.eigenvalues) : nlohmann::json();
  j["from"] = r.from;
  j["to"] = r.to;
  j["rows"] = r.rows;
  j["matrix"] = r.matrix ? matrix_to_json(*r.matrix) : nlohmann::json();
  j["matrix_sequence"] = r.matrix_sequence;
  j["period_searched"] = r.period_searched;
  j["period"] = r.period ? nlohmann::json(*r.period) : nlohmann::json();
  j["period_bound"] = r.period_bound;
  return j;
}

ChebReport cheb_report_from_json(const nlohmann::json& j) {
  return guarded("cheb report", [&] {
    ChebReport r;
    if (!j.at("poly_degree").is_null()) r.poly_degree = j["poly_degree"].get<long>();
    r.polynomial = optional_string(j, "polynomial");
    if (!j.at("eigenvalues").is_null()) r.eigenvalues = j["eigenvalues"].get<std::vector<std::string>>();
    r.from = j.at("from").get<long>();
    r.to = j.at("to").get<long>();
    r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    if (!j.at("matrix").is_null()) r.matrix = matrix_from_json<Rational>(j["matrix"]);
    r.matrix_sequence = j.at("matrix_sequence").get<std::vector<std::string>>();
    r.period_searched = j.at("period_searched").get<bool>();
    if (!j.at("period").is_null()) r.period = j["period"].get<std::size_t>();
    r.period_bound = j.at("period_bound").get<std::size_t>();
    return r;
  });
}

std::string to_text(const ChebReport& r) {
  std::ostringstream out;
  if (r.polynomial) out << "f_" << *r.poly_degree << "(x) = " << *r.polynomial << "\n";
  if (r.eigenvalues) {
    out << "rows " << r.from << ".." << r.to << " for eigenvalues";
    for (const auto& e : *r.eigenvalues) out << " " << e;
    out << "\n";
    long m = r.from;
    for (const auto& row : r.rows) {
      out << m++;
      for (const auto& x : row) out << "\t" << x;
      out << "\n";
    }
  }
  if (r.matrix) {
    out << "E = " << matrix_text(*r.matrix) << "\n";
    for (std::size_t k = 0; k < r.matrix_sequence.size(); ++k) out << "f_" << k << "(E) = " << r.matrix_sequence[k] << "\n";
    if (r.period_searched) {
      if (r.period) {
        out << "period: " << *r.period << "\n";
      } else {
        out << "period: none up to " << r.period_bound << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace extfin
