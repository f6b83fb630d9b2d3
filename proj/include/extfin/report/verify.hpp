#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace extfin {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct Check {
  std::string id;
  std::string suite;
  std::string title;
  double budget_seconds = 0;
  std::function<CheckOutcome(std::uint64_t seed)> run;
};

/// Every registered check; acceptance criteria carry ids "A1" ... "A13".
const std::vector<Check>& all_checks();
/// exactnum, linalg, chebyshev, modcat, dynamics, all.
const std::vector<std::string>& suite_names();

struct CheckResult {
  std::string id;
  std::string suite;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct SuiteReport {
  int schema = 1;
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> checks;
  double total_seconds = 0;

  bool passed() const;
};

/// Runs the check and times it. Exceptions become failures; a run over
/// budget fails as well.
CheckResult run_check(const Check& check, std::uint64_t seed);
/// Throws InputError for an unknown suite name.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed);

nlohmann::json suite_report_to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const nlohmann::json& j);
/// The JSON form without timings, for determinism comparisons.
nlohmann::json suite_report_fingerprint(const SuiteReport& r);
std::string format_suite_report(const SuiteReport& r);

}  // namespace extfin
