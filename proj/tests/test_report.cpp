#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fekete/report.hpp"
#include "fekete/suites.hpp"

namespace fekete::test {

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fmt gives shortest round-trip text") {
  CHECK(fmt(0.1) == "0.1");
  CHECK(fmt(1e-300) == "1e-300");
  CHECK(std::stod(fmt(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(fmt(std::uint64_t{42}) == "42");
  CHECK(fmt(std::int64_t{-7}) == "-7");
  CHECK(fmt(true) == "true");
}

TEST_CASE("exit codes follow the findings") {
  RunReport r;
  r.command = "x";
  CHECK(r.exit_code() == 0);
  r.add(observe("S1-a", 1.0));
  CHECK(r.exit_code() == 0);
  r.add(check("S1-b", true, 1.0, 1.0, 0.0));
  CHECK(r.exit_code() == 0);
  r.add(check("S1-c", false, 2.0, 1.0, 0.0));
  CHECK(r.exit_code() == 1);
  r.numerical_failures.push_back("boom");
  CHECK(r.exit_code() == 3);
}

TEST_CASE("JSON report layout") {
  RunReport r;
  r.command = "demo";
  r.params = {{"p", 7}};
  r.add(check("L3.1-modulus", true, 1e-14, 0.0, 1e-8));
  const auto j = to_json(r);
  CHECK(j["command"] == "demo");
  CHECK(j["started"].is_null());
  CHECK(j["ended"].is_null());
  CHECK_FALSE(j.contains("seed"));
  CHECK(j["findings"][0]["check_id"] == "L3.1-modulus");
  CHECK(j["findings"][0]["status"] == "pass");
  CHECK(j["summary"]["pass"] == 1);
  r.seed = 5;
  r.generator = "splitmix64";
  const auto k = to_json(r);
  CHECK(k["seed"] == 5);
  CHECK(k["generator"] == "splitmix64");
}

TEST_CASE("CSV has a header row and LF line endings") {
  CsvTable t{"t", {"a", "b"}, {}};
  t.add_row({"1", "2"});
  t.add_row({"3", "4"});
  CHECK(to_csv(t) == "a,b\n1,2\n3,4\n");
}

TEST_CASE("reports are byte-identical across reruns") {
  namespace fs = std::filesystem;
  const fs::path a = fs::temp_directory_path() / "fekete_report_a";
  const fs::path b = fs::temp_directory_path() / "fekete_report_b";
  fs::remove_all(a);
  fs::remove_all(b);
  SieveParams prm;
  prm.instances = 50;
  prm.pmax = 50;
  prm.seed = 77;
  write_report(run_sieve(prm), a);
  prm.threads = 3;
  write_report(run_sieve(prm), b);
  for (const char* name : {"sieve.json", "sieve_random.csv", "sieve_chain.csv"}) {
    const auto x = slurp(a / name);
    CHECK_FALSE(x.empty());
    CHECK(x == slurp(b / name));
    CHECK(x.find('\r') == std::string::npos);
  }
}

TEST_CASE("suite reports carry traceable check ids") {
  GaussParams g;
  g.pmax = 101;
  const auto r = run_gauss(g);
  REQUIRE(r.findings.size() == 3);
  for (const auto& f : r.findings) {
    CHECK(f.check_id.rfind("L3.1-", 0) == 0);
    CHECK(f.status == Status::Pass);
  }
  REQUIRE(r.tables.size() == 1);
  CHECK(r.tables[0].header ==
        std::vector<std::string>{"p", "p_mod_4", "max_abs_error", "max_rel_error", "f_at_one", "sign_error"});
  CHECK(r.tables[0].rows.size() == 25);
}

TEST_CASE("ensemble limits") {
  CHECK(ensemble_limit(2.0) == doctest::Approx(1.0));
  CHECK(ensemble_limit(0.0) == doctest::Approx(0.749306).epsilon(1e-6));
  CHECK(ensemble_limit(4.0) == doctest::Approx(std::pow(2.0, 0.25)));
}

}  // namespace fekete::test
