#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "extfin/errors.hpp"
#include "extfin/linalg/json.hpp"
#include "extfin/modcat/induction.hpp"
#include "extfin/modcat/json.hpp"
#include "extfin/report/reports.hpp"
#include "extfin/report/verify.hpp"

using namespace extfin;

namespace {

enum ExitCode { kOk = 0, kInput = 2, kHypothesis = 3, kInconsistency = 4, kCheckFailure = 5 };

struct Common {
  std::string format = "text";
  std::string output;
};

struct ModuleArgs {
  std::string family;
  std::size_t rank = 0;
  std::string lambda;
  bool simple = false;
  std::size_t vertex = 0;
  std::string module_path;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Common& common, const nlohmann::json& j, const std::string& text) {
  std::string body = common.format == "json" ? j.dump(2) + "\n" : text;
  if (common.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(common.output);
  if (!out) throw InputError("cannot write '" + common.output + "'");
  out << body;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", common.output, "Write the report to this path instead of stdout");
}

void add_module_options(CLI::App* cmd, ModuleArgs& args) {
  cmd->add_option("--family", args.family, "Built-in algebra family")->check(CLI::IsMember({"qext", "dnak"}));
  cmd->add_option("--rank", args.rank, "Rank r of the Double Nakayama algebra");
  cmd->add_option("--lambda", args.lambda, "Parameter of C(lambda), an expression in q");
  cmd->add_flag("--simple", args.simple, "Start from a simple module");
  cmd->add_option("--vertex", args.vertex, "Vertex of the simple module");
  cmd->add_option("--module", args.module_path, "Module JSON file");
}

AlgebraPtr family_algebra(const ModuleArgs& args) {
  if (args.family == "qext") return make_qext_algebra();
  if (args.family == "dnak") {
    if (args.rank < 2) throw InputError("--family dnak needs --rank >= 2");
    return make_dnak_algebra(args.rank);
  }
  throw InputError("give --family qext|dnak or --module");
}

std::pair<ModuleRep, std::string> build_module(const ModuleArgs& args, const std::string& lambda) {
  if (!args.module_path.empty()) return {module_from_json(read_json(args.module_path)), args.module_path};
  AlgebraPtr a = family_algebra(args);
  if (args.simple) {
    if (args.vertex >= a->vertices()) throw InputError("--vertex out of range");
    return {simple_module(a, args.vertex), "S_" + std::to_string(args.vertex)};
  }
  if (lambda.empty()) throw InputError("give --lambda, --simple or --module");
  RatFun lam = parse_ratfun(lambda);
  ModuleRep c = make_C_module(lam);
  std::string name = "C(" + lam.to_string() + ")";
  if (a->family() == AlgebraFamily::q_exterior) return {c, name};
  return {induce(c, a), "A(x)" + name};
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in '" + text + "'");
    out.push_back(Rational::parse(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw InputError("empty eigenvalue list");
  return out;
}

std::optional<bool> parse_bool(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "true") return true;
  if (text == "false") return false;
  throw InputError("expected true or false, got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact syzygy, Ext and spectral computations for radical cube zero weakly symmetric algebras"};
  app.require_subcommand(1);

  Common common;

  auto* classify = app.add_subcommand("classify", "Spectral classification and existence verdict");
  std::string matrix_path, tag, generic;
  ModuleArgs classify_args;
  classify->add_option("--family", classify_args.family, "Built-in algebra family")->check(CLI::IsMember({"qext", "dnak"}));
  classify->add_option("--rank", classify_args.rank, "Rank r of the Double Nakayama algebra");
  classify->add_option("--matrix", matrix_path, "E-matrix JSON file");
  classify->add_option("--tag", tag, "Family tag for --matrix")->check(CLI::IsMember({"Q_EXTERIOR", "DOUBLE_NAKAYAMA", "OTHER"}));
  classify->add_option("--parameter-generic", generic, "Whether the deformation parameter is not a root of unity (true|false)");
  add_common(classify, common);

  auto* orbit = app.add_subcommand("orbit", "Syzygy orbit with dimension vectors");
  ModuleArgs orbit_args;
  std::size_t steps = 6;
  add_module_options(orbit, orbit_args);
  orbit->add_option("--steps", steps, "Number of syzygies")->check(CLI::Range(1, 1000));
  add_common(orbit, common);

  auto* ext = app.add_subcommand("ext-table", "dim Ext^k(M, N) by two independent methods");
  ModuleArgs ext_args;
  std::string target_lambda, target_module;
  std::size_t max_k = 6;
  add_module_options(ext, ext_args);
  ext->add_option("--target-lambda", target_lambda, "Parameter of the second module (default: --lambda)");
  ext->add_option("--target-module", target_module, "Module JSON file for the second module");
  ext->add_option("--max-k", max_k, "Largest degree")->check(CLI::Range(1, 1000));
  add_common(ext, common);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", seed, "Seed for randomized checks");
  add_common(verify, common);

  auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomials, matrix sequences and row tables");
  long poly = -1;
  std::string rows;
  long from = 0, to = 12;
  std::string cheb_matrix;
  bool detect_period = false;
  std::size_t bound = 64, depth = 4;
  cheb->add_option("--poly", poly, "Degree k of f_k");
  cheb->add_option("--rows", rows, "Comma separated eigenvalues for a row table");
  cheb->add_option("--from", from, "First row index");
  cheb->add_option("--to", to, "Last row index");
  cheb->add_option("--matrix", cheb_matrix, "Matrix JSON file");
  cheb->add_flag("--detect-period", detect_period, "Search for the period of f_k(E)");
  cheb->add_option("--bound", bound, "Period search bound")->check(CLI::Range(2, 100000));
  cheb->add_option("--depth", depth, "Largest k of f_k(E) to print")->check(CLI::Range(1, 1000));
  add_common(cheb, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (classify->parsed()) {
      QMatrix e;
      std::string source;
      std::optional<FamilyTag> family;
      std::optional<bool> param = parse_bool(generic);
      if (!matrix_path.empty()) {
        e = matrix_from_json<Rational>(read_json(matrix_path));
        source = matrix_path;
        if (!tag.empty()) family = family_tag_from_string(tag);
      } else {
        AlgebraPtr a = family_algebra(classify_args);
        e = a->e_matrix();
        source = a->family() == AlgebraFamily::q_exterior ? "qext" : "dnak r=" + std::to_string(a->rank());
        family = a->family() == AlgebraFamily::q_exterior ? FamilyTag::q_exterior : FamilyTag::double_nakayama;
        // The built-in families are defined over Q(q) with q transcendental.
        if (!param) param = true;
      }
      auto report = classify_report(e, source, family, param);
      emit(common, to_json(report), to_text(report));
      return kOk;
    }
    if (orbit->parsed()) {
      auto [m, name] = build_module(orbit_args, orbit_args.lambda);
      auto report = orbit_report(m, name, steps);
      emit(common, to_json(report), to_text(report));
      return report.checks_pass() ? kOk : kInconsistency;
    }
    if (ext->parsed()) {
      auto [m, name] = build_module(ext_args, ext_args.lambda);
      ModuleArgs target_args = ext_args;
      target_args.module_path = target_module;
      if (!target_module.empty() || !target_lambda.empty()) target_args.simple = false;
      auto [n, target_name] = build_module(target_args, target_lambda.empty() ? ext_args.lambda : target_lambda);
      auto report = ext_table_report(m, n, name, target_name, max_k);
      emit(common, to_json(report), to_text(report));
      return kOk;
    }
    if (verify->parsed()) {
      SuiteReport report = run_suite(suite, seed);
      emit(common, suite_report_to_json(report), format_suite_report(report));
      return report.passed() ? kOk : kCheckFailure;
    }
    if (cheb->parsed()) {
      ChebReport report;
      bool any = false;
      if (poly >= 0) {
        report = cheb_poly_report(poly);
        any = true;
      }
      if (!rows.empty()) {
        ChebReport r = cheb_rows_report(parse_list(rows), from, to);
        report.eigenvalues = r.eigenvalues;
        report.from = r.from;
        report.to = r.to;
        report.rows = r.rows;
        any = true;
      }
      if (!cheb_matrix.empty()) {
        ChebReport r = cheb_matrix_report(matrix_from_json<Rational>(read_json(cheb_matrix)), depth, detect_period, bound);
        report.matrix = r.matrix;
        report.matrix_sequence = r.matrix_sequence;
        report.period_searched = r.period_searched;
        report.period = r.period;
        report.period_bound = r.period_bound;
        any = true;
      }
      if (!any) throw InputError("cheb needs --poly, --rows or --matrix");
      emit(common, to_json(report), to_text(report));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const MathError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistency;
  }
  return kOk;
}
