#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "circspec/io.hpp"
#include "support/process.hpp"

using circspec::io::Json;
using circspec::testing::run_command;

namespace {

circspec::testing::CommandResult cli(const std::string& args, bool merge_stderr = false) {
  return run_command(std::string(CIRCSPEC_CLI) + " " + args, merge_stderr);
}

}  // namespace

TEST_CASE("spectrum subcommand") {
  const auto r = cli("spectrum --n 12 --gens 1,2");
  REQUIRE(r.exit_code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["set"] == Json::parse("[1,2,10,11]"));
  CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(4.0));
  CHECK(j["inertia"] == Json::parse("[3,6,3]"));

  const auto t = Json::parse(cli("spectrum --n 3 --gens 1").out);
  CHECK(t["eigenvalues"][0].get<double>() == doctest::Approx(2.0));
  CHECK(t["eigenvalues"][1].get<double>() == doctest::Approx(-1.0));
  CHECK(t["eigenvalues"][2].get<double>() == doctest::Approx(-1.0));

  CHECK(cli("spectrum --n 12 --gens 0").exit_code == 1);
  CHECK(cli("spectrum --n 12 --gens 12").exit_code == 2);
  CHECK(cli("spectrum --n 12").exit_code == 1);
  CHECK(cli("bogus").exit_code == 1);

  const auto csv = cli("spectrum --n 6 --gens 1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("j,lambda\n0,2.0\n", 0) == 0);
}

TEST_CASE("check-pair subcommand") {
  const auto a = Json::parse(cli("check-pair --n 12 --gens1 1,2 --gens2 4,5").out);
  CHECK(a["verdict"]["class"] == "ncsc");
  CHECK(a["verdict"]["same_inertia"] == false);

  const auto b = cli("check-pair --n 5 --gens1 1 --gens2 2");
  CHECK(b.exit_code == 0);
  CHECK(Json::parse(b.out)["verdict"]["multiplier"] == 2);
  CHECK(cli("check-pair --n 5 --gens1 1 --gens2 2 --verdict-exit").exit_code == 10);
  CHECK(cli("check-pair --n 12 --gens1 1,2 --gens2 4,5 --verdict-exit").exit_code == 12);

  const auto c = Json::parse(cli("check-pair --n 12 --gens1 1 --gens2 2").out);
  CHECK(c["verdict"]["cospectral"] == false);
  CHECK(c["verdict"]["sc"] == false);
  CHECK(c["verdict"]["class"] == "unrelated");
}

TEST_CASE("family subcommand") {
  const auto a = cli("family thm31 --k 6");
  CHECK(a.exit_code == 0);
  const auto ja = Json::parse(a.out);
  CHECK(ja["graph1"]["set"] == Json::parse("[1,2,10,11]"));
  CHECK(ja["graph2"]["set"] == Json::parse("[4,5,7,8]"));
  CHECK(ja["verdict"]["ncsc"] == true);
  CHECK(ja["verdict"]["same_inertia"] == false);
  CHECK(ja["holds"] == true);

  const auto b = Json::parse(cli("family thm32 --alpha 0").out);
  CHECK(b["graph1"]["n"] == 18);
  CHECK(b["verdict"]["ncsc"] == true);
  CHECK(b["verdict"]["same_inertia"] == true);

  const auto c = cli("family thm31 --k 5", true);
  CHECK(c.exit_code == 2);
  CHECK(c.out.find("k ≥ 6") != std::string::npos);

  CHECK(cli("family thm44 --k 10").exit_code == 1);
  CHECK(cli("family lemma21 --n 14 --gens 1,3").exit_code == 0);
}

TEST_CASE("search subcommand") {
  const auto one = cli("search --n 12 --max-s 2");
  REQUIRE(one.exit_code == 0);
  CHECK(one.out.find(R"("set1":[1,2,10,11],"set2":[4,5,7,8])") != std::string::npos);
  CHECK(one.out == cli("search --n 12 --max-s 2 --workers 4").out);
  CHECK(one.out == cli("search --n 12 --max-s 2").out);

  std::istringstream lines(one.out);
  std::string line, last;
  while (std::getline(lines, line)) {
    CHECK(Json::accept(line));
    last = line;
  }
  CHECK(Json::parse(last)["summary"] == true);

  const auto seven = cli("search --n 7 --max-s 3");
  CHECK(Json::parse(seven.out)["ncsc_found"] == 0);

  const auto path = std::filesystem::temp_directory_path() / "circspec_search_test.csv";
  CHECK(cli("search --n 12 --max-s 2 --format csv --output " + path.string()).exit_code == 0);
  std::ifstream in(path);
  std::getline(in, line);
  CHECK(line == "n,set1,set2,cospectral,sc,same_inertia,isomorphic");
  std::filesystem::remove(path);
}

TEST_CASE("verify subcommand") {
  const auto r = cli("verify prime --max-p 13");
  CHECK(r.exit_code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(cli("verify prime --max-p 40").exit_code == 1);
}
