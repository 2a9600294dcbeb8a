#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <vector>

#include "pkroots/cli.hpp"
#include "pkroots/errors.hpp"

using namespace pkroots;
using namespace pkroots::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "pkroots");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Result run_spec(const JobSpec& s) {
  std::ostringstream out, err;
  const int code = run(s, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expression parser") {
  CHECK(parse_polynomial("x^2+3*x") == UPoly{0, 3, 1});
  CHECK(parse_polynomial(" 3x^2 - 1 ") == UPoly{-1, 0, 3});
  CHECK(parse_polynomial("2(x+1)^2") == UPoly{2, 4, 2});
  CHECK(parse_polynomial("(x-1)(x+1)") == UPoly{-1, 0, 1});
  CHECK(parse_polynomial("-x") == UPoly{0, -1});
  CHECK(parse_polynomial("1") == UPoly{1});
  CHECK(parse_polynomial("x - x") == UPoly{});
  CHECK(parse_polynomial("123456789012345678901234567890") == UPoly{Int("123456789012345678901234567890")});
  CHECK_THROWS_AS(parse_polynomial("x^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y+1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x+1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^1000000"), ParseError);
}

TEST_CASE("coefficient parser") {
  CHECK(parse_coefficients("0,3,1") == UPoly{0, 3, 1});
  CHECK(parse_coefficients(" -1 , 0, 1 ") == UPoly{-1, 0, 1});
  CHECK_THROWS_AS(parse_coefficients("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_coefficients("1,a"), ParseError);
}

TEST_CASE("roots mode JSON") {
  const auto r = run_args({"--poly", "x^2+3*x", "--p", "3", "--k", "2", "--mode", "roots", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["root_count"] == "3");
  CHECK(j["p"] == "3");
  CHECK(j["k"] == 2);
  CHECK(j["degree"] == 2);
  REQUIRE(j["msis"].is_array());
  for (const auto& m : j["msis"]) {
    CHECK(m.contains("length"));
    CHECK(m.contains("degree"));
    CHECK(m["generators"].is_array());
  }
  CHECK(j["stats"].contains("pops"));
  CHECK(j["stats"].contains("splits"));
  CHECK(j["stats"].contains("dead_ends"));
}

TEST_CASE("keys are emitted sorted") {
  const auto r = run_args({"--coeffs", "0,0,1", "--p", "2", "--k", "3", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto a = r.out.find("\"degree\""), b = r.out.find("\"k\""), c = r.out.find("\"msis\""),
             d = r.out.find("\"p\""), e = r.out.find("\"root_count\""), f = r.out.find("\"stats\"");
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
  CHECK(d < e);
  CHECK(e < f);
}

TEST_CASE("text output and exit codes") {
  auto r = run_args({"--poly", "1", "--p", "2", "--k", "1", "--mode", "roots"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("root_count: 0") != std::string::npos);

  r = run_args({"--poly", "x^2", "--p", "2", "--k", "3", "--mode", "igusa", "--K", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("1 1 2 2 4") != std::string::npos);

  CHECK(run_args({"--poly", "x^", "--p", "3", "--k", "2"}).code == kExitUsage);
  CHECK(run_args({"--poly", "x", "--coeffs", "0,1", "--p", "3"}).code == kExitUsage);
  CHECK(run_args({"--poly", "x", "--p", "4"}).code == kExitUsage);
  CHECK(run_args({"--poly", "x", "--p", "3", "--k", "0"}).code == kExitUsage);
  CHECK(run_args({"--poly", "x", "--p", "3", "--mode", "cubes"}).code == kExitUsage);
  CHECK(run_args({"--poly", "3x^2+1", "--p", "3", "--k", "2"}).code == kExitNotMonic);
  CHECK(run_args({"--poly", "3x^2+x", "--p", "3", "--k", "2", "--no-normalize"}).code == kExitNotMonic);
  CHECK(run_args({"--poly", "0", "--p", "3", "--k", "2", "--mode", "factors"}).code == kExitUsage);
}

TEST_CASE("verify flag cross-checks every mode") {
  for (const char* mode : {"roots", "factors", "igusa"}) {
    const auto r = run_args({"--coeffs", "0,0,1,1,1", "--p", "2", "--k", "3", "--mode", mode, "--verify", "--json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verify"]["checked"] == true);
    CHECK(j["verify"]["ok"] == true);
  }
  const auto r = run_args({"--coeffs", "0,0,1,1,1", "--p", "2", "--k", "2", "--mode", "factors", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["factor_count"] == "3");
  CHECK(j["per_degree"]["1"] == "2");
  CHECK(j["per_degree"]["2"] == "1");
}

TEST_CASE("igusa mode JSON") {
  auto r = run_args({"--poly", "x^2-1", "--p", "3", "--k", "1", "--mode", "igusa", "--K", "3", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["N"] == nlohmann::json({"1", "2", "2", "2"}));
  CHECK(j["disc_valuation"] == 0);
  CHECK(j["padic_roots"]["count"] == "2");

  r = run_args({"--poly", "x^2", "--p", "2", "--mode", "igusa", "--json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["disc_valuation"] == "infinite");
  CHECK(j["padic_roots"].is_null());
}

TEST_CASE("large primes are accepted") {
  const auto r = run_args({"--poly", "(x-1)(x-2)", "--p", "1000000000039", "--k", "3", "--json"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["root_count"] == "2");
}

TEST_CASE("repeated runs are byte-identical") {
  JobSpec s;
  s.coeffs = "4,0,3,0,1";
  s.p = "2";
  s.k = 5;
  s.json = true;
  for (Mode m : {Mode::roots, Mode::factors, Mode::igusa}) {
    s.mode = m;
    const auto a = run_spec(s), b = run_spec(s);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}
