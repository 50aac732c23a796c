#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nck/json_io.hpp"

using namespace nck;

namespace {

const std::string dir = "json_cli_tmp";

void make_dir() {
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(NCK_CLI_PATH) + " " + args + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

json two_cycle_json() {
  json j;
  j["schema"] = "sset/v1";
  j["truncation"] = 1;
  j["levels"] = json::array();
  json l0;
  l0["count"] = 2;
  l0["faces"] = json::array();
  l0["degeneracies"] = json::array({{2}, {3}});
  json l1;
  l1["count"] = 4;
  l1["faces"] = json::array({{1, 0}, {0, 1}, {0, 0}, {1, 1}});
  l1["degeneracies"] = json::array();
  j["levels"].push_back(l0);
  j["levels"].push_back(l1);
  return j;
}

}  // namespace

TEST_CASE("sset payload round trips") {
  auto P = product(standard_simplex(1, 3), standard_simplex(2, 3), 3).prod;
  auto j = sset_to_json(P);
  auto back = sset_from_json(j);
  CHECK(back->counts == P->counts);
  CHECK(back->faces == P->faces);
  CHECK(back->degen == P->degen);
  CHECK(dump_stable(sset_to_json(back)) == dump_stable(j));
}

TEST_CASE("strict parsing") {
  auto j = sset_to_json(standard_simplex(1, 1));
  j["extra"] = 1;
  CHECK_THROWS_AS(sset_from_json(j), precondition_error);
  j.erase("extra");
  j["schema"] = "sset/v2";
  CHECK_THROWS_AS(sset_from_json(j), precondition_error);
  json p;
  p["schema"] = "pair/v1";
  p["Y"] = {"a"};
  p["X"] = {"b"};
  CHECK_THROWS_AS(pair_from_json(p), precondition_error);
}

TEST_CASE("pair payload round trips") {
  FinSetPair pr;
  pr.y = {"a", "b", "c"};
  pr.in_x = {1, 0, 1};
  auto back = pair_from_json(pair_to_json(pr));
  CHECK(back.y == pr.y);
  CHECK(back.in_x == pr.in_x);
  CHECK(back.x_size() == 2);
}

TEST_CASE("labels survive the round trip") {
  auto X = discrete_sset(2, 1, {"p", "q"});
  auto back = sset_from_json(sset_to_json(X));
  CHECK(back->vertex_labels == std::vector<std::string>{"p", "q"});
}

TEST_CASE("cli: hom of a standard simplex") {
  make_dir();
  write_file(dir + "/delta3.json", dump_stable(sset_to_json(standard_simplex(3, 3))));
  int rc = run_cli("hom --space " + dir + "/delta3.json --from 0 --to 3 --trunc 3 --out " +
                   dir + "/hom.json");
  REQUIRE(rc == 0);
  auto out = sset_from_json(json::parse(read_file(dir + "/hom.json")));
  auto sq = product(standard_simplex(1, 3), standard_simplex(1, 3), 3).prod;
  CHECK(out->counts == sq->counts);
  CHECK(out->nd_counts() == sq->nd_counts());
}

TEST_CASE("cli: deterministic bytes") {
  make_dir();
  write_file(dir + "/delta2.json", dump_stable(sset_to_json(standard_simplex(2, 2))));
  REQUIRE(run_cli("necklaces --space " + dir + "/delta2.json --from 0 --to 2 --out " + dir +
                  "/n1.json") == 0);
  REQUIRE(run_cli("necklaces --space " + dir + "/delta2.json --from 0 --to 2 --out " + dir +
                  "/n2.json") == 0);
  CHECK(read_file(dir + "/n1.json") == read_file(dir + "/n2.json"));
}

TEST_CASE("cli: classify") {
  make_dir();
  write_file(dir + "/twocycle.json", dump_stable(two_cycle_json()));
  REQUIRE(run_cli("classify --space " + dir + "/twocycle.json --out " + dir + "/cls.json") == 0);
  auto j = json::parse(read_file(dir + "/cls.json"));
  CHECK(j.at("ordered") == false);
  CHECK(j.at("one_ordered") == false);
}

TEST_CASE("cli: certificates and exit codes") {
  make_dir();
  CHECK(run_cli("certify-hm --m 3 --kmax 4 --out " + dir + "/hm.json") == 0);
  auto j = json::parse(read_file(dir + "/hm.json"));
  CHECK(j.at("verdict") == "pass");

  write_file(dir + "/pair.json", dump_stable(pair_to_json({{"a", "b"}, {1, 1}})));
  CHECK(run_cli("certify-gx --m 2 --pair " + dir + "/pair.json --out " + dir + "/gx.json") == 0);

  CHECK(run_cli("no-such-verb") == 2);
  CHECK(run_cli("hom --space " + dir + "/missing.json --from 0 --to 1") == 2);
  write_file(dir + "/bad.json", "{\"schema\": \"sset/v1\"}\n");
  CHECK(run_cli("classify --space " + dir + "/bad.json") == 2);
  // tnd homs require a 1-ordered space
  CHECK(run_cli("hom --space " + dir + "/twocycle.json --from 0 --to 1") == 2);
}
