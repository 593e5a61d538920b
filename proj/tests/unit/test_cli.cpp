#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "padic_ell/euler.hpp"
#include "padic_ell/euler_ell.hpp"
#include "padic_ell_cli.hpp"

using namespace padic_ell;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void check_golden(const std::string& name, const std::vector<std::string>& args) {
  auto r = run_cli(args);
  REQUIRE(r.code == 0);
  const fs::path golden = fs::path(PADIC_ELL_GOLDEN_DIR) / name;
  REQUIRE_MESSAGE(fs::exists(golden), golden.string());
  CHECK_MESSAGE(r.out == read_file(golden), "golden mismatch: " << name);
}

// Base-p digits of each unit coefficient, as rendered in "unit_digits".
Json expected_digits(const ExtElement& x) {
  Json out = Json::array();
  const u64 p = x.ring()->prime();
  for (u64 c : x.unit_coeffs()) {
    Json d = Json::array();
    for (int i = 0; i < x.relative_precision(); ++i, c /= p) d.push_back(c % p);
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("euler table") {
  auto r = run_cli({"euler", "--max", "11"});
  REQUIRE(r.code == 0);
  auto doc = Json::parse(r.out);
  REQUIRE(doc["rows"].size() == 12);
  CHECK(doc["rows"][7]["n"] == 7);
  CHECK(doc["rows"][7]["value"] == "17/8");
  auto zero = Json::parse(run_cli({"euler", "--max", "0"}).out);
  REQUIRE(zero["rows"].size() == 1);
  CHECK(zero["rows"][0]["value"] == "1");
  auto bad = run_cli({"euler", "--max", "-1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("ell at s = 1 and s = 0") {
  for (const char* chi_text : {"M=5;e=[1]", "M=7;e=[3]", "M=1;e=[]"}) {
    auto r = run_cli({"ell", "--p", "3", "--prec", "8", "--chi", chi_text, "--s", "1"});
    REQUIRE(r.code == 0);
    auto doc = Json::parse(r.out);
    auto chi = DirichletChar::parse(chi_text);
    EllContext ctx(3, chi, 8, 2);
    // (1 - chi(3)) E_{0,chi}.
    const int L = static_cast<int>(chi.order());
    CycRational e0 = generalized_euler_number(0, chi);
    if (e0.order() != L) e0 = e0.lift(L);
    if (auto c3 = chi.evaluate(3)) e0 -= CycRational::root_power(L, static_cast<i64>(*c3)) * e0;
    auto want = ExtElement::embed(ctx.ring(), e0).truncate(doc["certified_precision"].get<int>());
    CHECK(doc["value"]["unit_digits"] == expected_digits(want));
  }
  for (const char* chi_text : {"M=1;e=[]", "M=5;e=[1]"}) {
    auto doc = Json::parse(run_cli({"ell", "--p", "3", "--prec", "8", "--chi", chi_text, "--s", "0"}).out);
    auto chi = DirichletChar::parse(chi_text);
    EllContext ctx(3, chi, 8, 2);
    auto want = ExtElement::embed(ctx.ring(), epsilon(1, chi, 3)).truncate(6);
    CHECK(doc["value"]["unit_digits"] == expected_digits(want));
    CHECK(doc["value"]["relative_precision"] == want.relative_precision());
  }
}

TEST_CASE("s syntax") {
  auto a = Json::parse(run_cli({"ell", "--p", "5", "--prec", "8", "--chi", "M=3;e=[1]", "--s", "3/2"}).out);
  auto b = Json::parse(run_cli({"ell", "--p", "5", "--prec", "8", "--chi", "M=3;e=[1]", "--s", "-1"}).out);
  // -1 = 4 + 4*5 + 4*5^2 + ...
  auto c = Json::parse(
      run_cli({"ell", "--p", "5", "--prec", "8", "--chi", "M=3;e=[1]", "--s", "digits:4,4,4,4,4,4,4,4"}).out);
  CHECK(b["value"] == c["value"]);
  CHECK(a["value"] != b["value"]);
  CHECK(run_cli({"ell", "--p", "5", "--s", "1/5"}).code == 2);
  CHECK(run_cli({"ell", "--p", "5", "--s", "digits:7"}).code == 2);
  CHECK(run_cli({"ell", "--p", "5", "--s", "abc"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"ell", "--p", "3", "--chi", "bogus"}).code == 2);
  CHECK(run_cli({"ell", "--p", "4"}).code == 2);
  CHECK(run_cli({"ell", "--p", "2"}).code == 2);
  CHECK(run_cli({"ell", "--p", "3", "--chi", "M=4;e=[1]"}).code == 2);
  CHECK(run_cli({"ell", "--p", "3", "--prec", "3", "--guard", "2"}).code == 2);
  CHECK(run_cli({"ell", "--p", "3", "--chi", "M=9;e=[1]"}).code == 2);
  CHECK(run_cli({"verify", "nonsense"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify suites") {
  auto r = run_cli({"verify", "interpolation", "--p", "3", "--chi", "M=5;e=[1]", "--n", "1..6"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["cases"] == 6);
  CHECK(doc["failed"] == 0);
  CHECK(doc["vacuous"] == false);
  for (const auto& rec : doc["records"]) {
    CHECK(rec["pass"] == true);
    if (!rec["observed_valuation"].is_null()) CHECK(rec["observed_valuation"] >= rec["required_valuation"]);
  }
  auto k = Json::parse(run_cli({"verify", "kummer", "--p", "3", "--k", "1..3"}).out);
  CHECK(k["failed"] == 0);
  CHECK(k["cases"].get<int>() > 0);
  auto empty = run_cli({"verify", "interpolation", "--p", "3", "--n", "4..3"});
  CHECK(empty.code == 0);
  auto e = Json::parse(empty.out);
  CHECK(e["cases"] == 0);
  CHECK(e["vacuous"] == true);
  for (const char* suite : {"reflection", "gamma-functional-equations", "measures", "derivative"}) {
    auto s = run_cli({"verify", suite, "--p", "5", "--chi", "M=3;e=[1]", "--prec", "10", "--samples", "3"});
    CHECK_MESSAGE(s.code == 0, suite);
    CHECK(Json::parse(s.out)["failed"] == 0);
  }
}

TEST_CASE("output formats and determinism") {
  const std::vector<std::string> args{"verify", "reflection", "--p", "3", "--chi", "M=5;e=[1]", "--samples", "2"};
  CHECK(run_cli(args).out == run_cli(args).out);
  auto csv = run_cli({"euler", "--max", "2", "--format", "csv"});
  CHECK(csv.out == "n,E_n\n0,1\n1,-1/2\n2,0\n");
  auto pretty = run_cli({"euler", "--max", "1", "--format", "pretty"});
  CHECK(pretty.out.find("-1/2") != std::string::npos);
  CHECK(run_cli({"euler", "--format", "xml"}).code == 2);
  const fs::path out = fs::temp_directory_path() / "padic_ell_cli_out.json";
  fs::remove(out);
  auto r = run_cli({"euler", "--max", "3", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(read_file(out))["rows"].size() == 4);
  fs::remove(out);
}

TEST_CASE("golden outputs") {
  check_golden("euler_11.json", {"euler", "--max", "11"});
  check_golden("gen_euler_15.csv", {"gen-euler", "--max", "5", "--chi", "M=15;e=[1,1]", "--format", "csv"});
  check_golden("ell_p3_chi5.json", {"ell", "--p", "3", "--prec", "8", "--chi", "M=5;e=[1]", "--s", "1/2"});
  check_golden("verify_interpolation.json",
               {"verify", "interpolation", "--p", "3", "--chi", "M=5;e=[1]", "--n", "1..6"});
  check_golden("gamma_g.json", {"gamma-g", "--p", "5", "--prec", "8", "--x", "2/5"});
  check_golden("measure.json", {"measure", "--p", "3", "--prec", "8", "--chi", "M=5;e=[1]", "--n", "2", "--level", "4"});
}

TEST_CASE("Euler cache directory") {
  const fs::path dir = fs::temp_directory_path() / "padic_ell_cache_test";
  fs::remove_all(dir);
  ::setenv("PADIC_ELL_CACHE", dir.c_str(), 1);
  auto r = run_cli({"euler", "--max", "40"});
  CHECK(r.code == 0);
  const fs::path file = dir / "euler.txt";
  REQUIRE(fs::exists(file));
  std::ifstream is(file);
  auto table = load_euler_table(is);
  CHECK(table.max_n() >= 40);
  CHECK(table[39] == euler_numbers(39)[39]);
  CHECK(run_cli({"euler", "--max", "40"}).out == r.out);
  // A corrupted cache is reported and ignored.
  {
    std::ofstream os(file);
    os << "0 1\n1 1/2\n";
  }
  auto bad = run_cli({"euler", "--max", "5"});
  CHECK(bad.code == 0);
  CHECK(bad.err.find("warning") != std::string::npos);
  CHECK(Json::parse(bad.out)["rows"][1]["value"] == "-1/2");
  ::unsetenv("PADIC_ELL_CACHE");
  fs::remove_all(dir);
}
