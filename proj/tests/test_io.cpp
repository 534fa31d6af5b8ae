#include <doctest.h>

#include <random>

#include "circspec/io.hpp"
#include "support/oracles.hpp"

namespace io = circspec::io;
namespace cs = circspec::cospectral;
namespace sp = circspec::spectra;
using circspec::CirculantGraph;
using circspec::ConnectionSet;

TEST_CASE("graph JSON round trip") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const auto s = circspec::oracle::random_set(n, rng);
    const auto text = io::graph_json(s).dump();
    CHECK(io::graph_from_json(io::Json::parse(text)) == s);
  }
  CHECK(io::graph_json(ConnectionSet::make(12, {1, 2})).dump() == R"({"n":12,"set":[1,2,10,11]})");
  CHECK_THROWS_AS(io::graph_from_json(io::Json::parse(R"({"n":12,"set":[1,2]})")), circspec::DomainError);
}

TEST_CASE("spectrum JSON schema") {
  const CirculantGraph g(12, {1, 2});
  const auto j = io::spectrum_json(g, sp::spectrum(g), sp::power_sums(g, 4), sp::inertia(g));
  const auto keys = {"n", "set", "eigenvalues", "power_sums", "inertia"};
  auto it = j.begin();
  for (const char* key : keys) {
    REQUIRE(it != j.end());
    CHECK(it.key() == key);
    ++it;
  }
  CHECK(j["eigenvalues"].size() == 12);
  CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(4.0));
  CHECK(j["power_sums"] == io::Json::parse(R"(["0","48","72","432"])"));
  CHECK(j["inertia"] == io::Json::parse("[3,6,3]"));
  CHECK(io::Json::parse(j.dump()) == j);
}

TEST_CASE("search record JSON and CSV share column order") {
  cs::SearchRecord r{ConnectionSet::make(12, {1, 2}), ConnectionSet::make(12, {4, 5}),
                     cs::classify_pair(CirculantGraph(12, {1, 2}), CirculantGraph(12, {4, 5}))};
  const auto j = io::search_record_json(r);
  CHECK(j.dump() ==
        R"({"n":12,"set1":[1,2,10,11],"set2":[4,5,7,8],"cospectral":false,"sc":true,"same_inertia":false,"isomorphic":"no"})");
  CHECK(io::csv_header_search() == "n,set1,set2,cospectral,sc,same_inertia,isomorphic");
  CHECK(io::search_record_csv(r) == R"(12,"[1,2,10,11]","[4,5,7,8]",false,true,false,no)");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "set1", "set2", "cospectral", "sc", "same_inertia", "isomorphic"});
}

TEST_CASE("verdict and verify report JSON") {
  const auto v = cs::classify_pair(CirculantGraph(5, {1}), CirculantGraph(5, {2}));
  const auto j = io::verdict_json(v);
  CHECK(j["class"] == "isomorphic");
  CHECK(j["multiplier"] == 2);
  CHECK(j["inertia1"] == j["inertia2"]);
  const auto r = io::verify_report_json(circspec::prime::verify_sc_implies_iso(5));
  CHECK(r["p"] == 5);
  CHECK(r["num_sets"] == 4);
  CHECK(r["violations"] == io::Json::array());
}

TEST_CASE("output is bit-stable across calls") {
  const CirculantGraph g(30, {1, 4, 7});
  const auto a = io::spectrum_json(g, sp::spectrum(g), sp::power_sums(g, 30), sp::inertia(g)).dump();
  const auto b = io::spectrum_json(g, sp::spectrum(g), sp::power_sums(g, 30), sp::inertia(g)).dump();
  CHECK(a == b);
}
