#include "doctest.h"

#include <sstream>

#include "isokit/boxfree.hpp"
#include "isokit/cli.hpp"
#include "isokit/io.hpp"

using namespace isokit;
using io::Json;

namespace {

struct Run {
  int code;
  Json json;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  Json j;
  if (!out.str().empty() && (out.str()[0] == '{' || out.str()[0] == '[')) j = Json::parse(out.str());
  return {code, j, err.str()};
}

}  // namespace

TEST_CASE("tensor JSON round trip") {
  const auto t = random_tensor(Field::make(3, 2), 2, 2, 2, 5);
  const auto back = io::tensor_from_json(io::to_json(t));
  REQUIRE(std::holds_alternative<Tensor>(back));
  CHECK(std::get<Tensor>(back) == t);
  const auto a = random_alt_tensor(Field::make(2, 1), 4, 3, 1, 5);
  const auto back_a = io::tensor_from_json(io::to_json(a));
  REQUIRE(std::holds_alternative<AltTensor>(back_a));
  CHECK(std::get<AltTensor>(back_a) == a);
  CHECK(io::field_spec_from_json(io::to_json(Field::make(5, 2).spec())) == Field::make(5, 2).spec());
}

TEST_CASE("big integers serialise as strings") {
  const BigInt v = big_pow(3, 80);
  CHECK(io::big(v).is_string());
  CHECK(io::parse_big(io::big(v)) == v);
}

TEST_CASE("hypergraph JSON round trip") {
  const auto g = build_G(Tensor(Field::make(2, 1), 2, 2, 1, Vec{1, 0, 0, 1}));
  const auto back = io::hypergraph_from_json(io::to_json(g));
  CHECK(back.edges == g.edges);
  CHECK(back.parts == g.parts);
  CHECK(io::edge_list_text(g, 2, 1, 1).rfind("# 2 1 2 1", 0) == 0);
  auto bad = io::to_json(g);
  bad["edges"].push_back(Json::array({0, 7}));
  CHECK_THROWS_AS(io::hypergraph_from_json(bad), PreconditionError);
}

TEST_CASE("subspace JSON round trip") {
  const auto f = Field::make(3, 1);
  const std::vector<Vec> gens{{1, 2, 0}, {0, 1, 1}};
  const auto s = Subspace::span(f, 3, gens);
  CHECK(io::subspace_from_json(f, io::to_json(s)) == s);
}

TEST_CASE("cli formula examples") {
  const auto gq = run({"formula", "gq", "--n", "5", "--d", "2"});
  CHECK(gq.code == 0);
  CHECK(gq.json["value"] == 7);
  const auto alt = run({"formula", "alpha-alt", "--n", "7", "--d", "3", "--m", "1", "--char-zero"});
  CHECK(alt.code == 0);
  CHECK(alt.json["value"] == 4);
  CHECK(alt.json["branch"] == "exceptional:(3,7)");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"formula", "alpha-alt", "--n", "7", "--d", "3", "--m", "1"}).code == kExitPrecondition);
  CHECK(run({"formula", "nope"}).code == kExitPrecondition);
  CHECK(run({"grassmann", "count", "--q", "6", "--n", "3", "--k", "1"}).code == kExitPrecondition);
  CHECK(run({"grassmann", "count", "--q", "4", "--p", "2", "--n", "3", "--k", "1"}).code == kExitPrecondition);
  CHECK(run({"rank", "zeros", "--q", "2", "--n", "8", "--d", "3", "--m", "1", "--cap", "100"}).code == kExitCap);
  CHECK(run({"formula", "gq", "--n", "5", "--d", "2", "--format", "csv"}).code == kExitPrecondition);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"boxfree", "gen", "--q", "2", "--n", "3", "--d", "2", "--m", "1", "--seed", "42"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.json == b.json);
  CHECK(a.json["freeness_verified"] == true);
  const auto r1 = run({"tensor", "random", "--q", "3", "--n", "3", "--d", "2", "--m", "2", "--seed", "9"});
  const auto r2 = run({"tensor", "random", "--q", "3", "--n", "3", "--d", "2", "--m", "2", "--seed", "9"});
  CHECK(r1.json == r2.json);
}

TEST_CASE("cli threads do not change results") {
  const std::vector<std::string> base{"rank", "ar", "--q", "3", "--n", "3", "--d", "2", "--m", "2", "--seed", "4"};
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(run(base).json == run(threaded).json);
}
