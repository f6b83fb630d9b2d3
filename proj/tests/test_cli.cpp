#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "extfin/report/reports.hpp"

#ifndef EXTFIN_CLI
#define EXTFIN_CLI "extfin"
#endif
#ifndef EXTFIN_FIXTURES
#define EXTFIN_FIXTURES "tests/fixtures"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(EXTFIN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(EXTFIN_FIXTURES) + "/" + name; }

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
  Run r = run(args + " --format json");
  CHECK(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("classify") {
  auto q = run_json("classify --family qext");
  CHECK(q["spectral"]["band"] == "EQUAL_TWO");
  CHECK(q["conclusion"] == "EXT_FINITE_EXISTS");
  CHECK(q["schema"] == 1);

  auto swap = run_json("classify --matrix " + fixture("swap.json"));
  CHECK(swap["spectral"]["band"] == "BELOW_TWO");
  CHECK(swap["conclusion"] == "NONE_EXIST");

  auto three = run_json("classify --matrix " + fixture("three.json"));
  CHECK(three["spectral"]["band"] == "ABOVE_TWO");
  CHECK(three["conclusion"] == "NONE_EXIST");

  auto dn = run_json("classify --family dnak --rank 4");
  CHECK(dn["conclusion"] == "EXT_FINITE_EXISTS");
  auto cyc = run_json("classify --matrix " + fixture("cycle4.json"));
  CHECK(cyc["conclusion"] == "NEEDS_FAMILY_DATA");

  CHECK(run("classify --matrix " + fixture("malformed.json")).code == 2);
  CHECK(run("classify --matrix " + fixture("missing.json")).code == 2);
  CHECK(run("classify --matrix " + fixture("nonsymmetric.json")).code == 3);
  CHECK(run("classify --matrix " + fixture("reducible.json")).code == 3);
  CHECK(run("classify --family dnak").code == 2);
  CHECK(run("classify --family nope").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("text and json report the same verdict") {
  for (const std::string& args : {std::string("classify --family qext"), "classify --matrix " + fixture("three.json")}) {
    Run text = run(args);
    auto j = run_json(args);
    CHECK(text.code == 0);
    CHECK(text.out.find("conclusion: " + j["conclusion"].get<std::string>()) != std::string::npos);
    CHECK(text.out.find("spectral class: " + j["spectral"]["band"].get<std::string>()) != std::string::npos);
  }
}

TEST_CASE("orbit") {
  auto c = run_json("orbit --family qext --lambda q --steps 4");
  std::vector<std::string> params;
  for (const auto& s : c["steps"]) {
    CHECK(s["dim"] == 2);
    params.push_back(s["c_parameter"].get<std::string>());
  }
  CHECK(params == std::vector<std::string>{"q", "1", "1/q", "1/q^2", "1/q^3"});

  auto dn = run_json("orbit --family dnak --rank 2 --lambda 1 --steps 3");
  REQUIRE(dn["steps"].size() == 4);
  for (const auto& s : dn["steps"]) {
    CHECK(s["dim"] == 4);
    CHECK(s["dim_vector"] == nlohmann::json::parse(R"({"t":[1,1],"s":[1,1]})"));
  }

  auto simple = run_json("orbit --family qext --simple --steps 3");
  std::vector<int> dims;
  for (const auto& s : simple["steps"]) dims.push_back(s["dim"].get<int>());
  CHECK(dims == std::vector<int>{1, 3, 5, 7});

  CHECK(extfin::orbit_report_from_json(c).steps.size() == 5);
  CHECK(run("orbit --family qext --lambda 0 --steps 2").code == 2);
  CHECK(run("orbit --family qext --lambda 'q+' --steps 2").code == 2);
  CHECK(run("orbit --family qext --lambda 1/(q-q)").code == 2);
}

TEST_CASE("ext-table") {
  auto q = run_json("ext-table --family qext --lambda q --max-k 6");
  std::vector<int> dims;
  for (const auto& row : q["rows"]) {
    dims.push_back(row["ext"].get<int>());
    CHECK(row["agree"] == true);
  }
  CHECK(dims == std::vector<int>{1, 0, 0, 0, 0, 0});

  auto dn = run_json("ext-table --family dnak --rank 3 --lambda q --max-k 5");
  for (const auto& row : dn["rows"]) {
    if (row["k"].get<int>() >= 2) CHECK(row["ext"] == 0);
  }

  CHECK(run_json("ext-table --family qext --lambda q --target-lambda q^2 --max-k 1")["rows"][0]["ext"] == 0);
  CHECK(run_json("ext-table --family qext --lambda q^2 --target-lambda q --max-k 1")["rows"][0]["ext"] == 1);
  CHECK(run_json("ext-table --family qext --lambda q^3 --target-lambda q --max-k 1")["rows"][0]["ext"] == 0);
}

TEST_CASE("cheb") {
  Run poly = run("cheb --poly 4");
  CHECK(poly.code == 0);
  CHECK(poly.out.find("x^4 - 3*x^2 + 1") != std::string::npos);

  auto rows = run_json("cheb --rows 1,-1 --from 1 --to 12");
  REQUIRE(rows["rows"].size() == 12);
  const char* pattern[6][2] = {{"1", "-1"}, {"0", "0"}, {"-1", "1"}, {"-1", "-1"}, {"0", "0"}, {"1", "1"}};
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(rows["rows"][i][0] == pattern[i % 6][0]);
    CHECK(rows["rows"][i][1] == pattern[i % 6][1]);
  }

  auto period = run_json("cheb --matrix " + fixture("swap.json") + " --detect-period");
  CHECK(period["period"] == 6);
  auto none = run_json("cheb --matrix " + fixture("three.json") + " --detect-period --bound 20");
  CHECK(none["period"].is_null());
  CHECK(run("cheb").code == 2);
  CHECK(run("cheb --poly -1 --rows 1,,2").code == 2);
}

TEST_CASE("verify and output files") {
  auto path = std::filesystem::temp_directory_path() / "extfin_cli_verify.json";
  Run r = run("verify --suite chebyshev --seed 11 --format json --output " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["schema"] == 1);
  CHECK(j["seed"] == 11);
  CHECK(j["passed"] == true);
  bool golden = false;
  for (const auto& c : j["checks"]) golden = golden || c["id"] == "A1";
  CHECK(golden);
  std::filesystem::remove(path);
  CHECK(run("verify --suite nope").code == 2);
}
