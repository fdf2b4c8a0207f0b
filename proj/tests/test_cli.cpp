#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "doctest.h"
#include "tamelift/corpus.hpp"
#include "tamelift/json_io.hpp"
#include "tamelift/poly_io.hpp"
#include "test_support.hpp"

using namespace tamelift;
using tamelift::testing::random_poly;

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI with `args` and captures stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(TAMELIFT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("tamelift_cli_" + name);
  std::ofstream(path) << j.dump();
  return path.string();
}

/// Binomial coefficient by Pascal's rule.
long binom(int n, int k) {
  std::vector<long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j)];
    row = next;
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("parser examples") {
  const QPoly f = parse_poly("x1^2*p1 - 3/2", 2);
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient(Monomial{2, 1}) == Rational(1));
  CHECK(f.coefficient(Monomial{0, 0}) == Rational(Integer(-3), Integer(2)));

  try {
    parse_poly("x1 + + p1", 2);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_poly("x1 + q1", 2), Error);

  // (x1 + p1)^3 against Pascal's triangle
  const QPoly cube = parse_poly("(x1+p1)^3", 2);
  CHECK(cube.terms().size() == 4);
  for (unsigned k = 0; k <= 3; ++k) {
    CHECK(cube.coefficient(Monomial{k, 3 - k}) == Rational(binom(3, static_cast<int>(k))));
  }
  CHECK(to_string(cube) == "x1^3 + 3*x1^2*p1 + 3*x1*p1^2 + p1^3");
}

TEST_CASE("text and JSON round trips") {
  std::mt19937_64 rng(181);
  for (std::size_t nv : {2u, 4u}) {
    for (int t = 0; t < 30; ++t) {
      const QPoly f = random_poly<Rational>(rng, nv, 4, 6, {}, true);
      CHECK(parse_poly(to_string(f), nv) == f);
      CHECK(poly_from_json(to_json(f)) == f);
      CHECK(poly_from_json(Json::parse(to_json(f).dump())) == f);
    }
  }
  CorpusSpec spec;
  spec.seed = 191;
  spec.rational_share = 0.5;
  for (const auto& w : generate_corpus(spec, 20)) {
    CHECK(word_from_json(Json::parse(to_json(w).dump())) == w);
    const QEndo phi = tame_evaluate(w);
    CHECK(endo_from_json(to_json(phi)) == phi);
    const auto psi = lift_tame(w);
    CHECK(hbar_auto_from_json(to_json(psi)) == psi);
    const auto trunc = truncate_auto(psi, 3);
    CHECK(to_json(trunc).at("K") == 3);
    CHECK(hbar_auto_from_json(to_json(trunc)) == trunc);
  }
  const HbarPoly h = parse_hbar_poly("x1*p1 + 1/2*h - h^2*p1", 2);
  CHECK(h.coefficient(1) == parse_poly("1/2", 2));
  CHECK(h.coefficient(2) == parse_poly("-p1", 2));
  CHECK(hbar_poly_from_json(to_json(h), 2) == h);
  CHECK(to_json(h).dump() == R"({"coeffs":{"0":{"n_vars":2,"terms":[{"coeff":"1","exp":[1,1]}]},"1":{"n_vars":2,"terms":[{"coeff":"1/2","exp":[0,0]}]},"2":{"n_vars":2,"terms":[{"coeff":"-1","exp":[0,1]}]}},"n":1})");
}

TEST_CASE("malformed JSON inputs") {
  CHECK_THROWS_AS(poly_from_json(Json{{"terms", Json::array()}}), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n_vars":2,"terms":[{"exp":[1],"coeff":"1"}]})")), Error);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n_vars":2,"terms":[{"exp":[1,0],"coeff":"1/0"}]})")), Error);
  CHECK_THROWS_AS(word_from_json(Json::parse(R"({"word":[{"shear":1}]})")), Error);
  // text polynomials do not fix the arity on their own
  CHECK_THROWS_AS(word_from_json(Json::parse(R"({"word":[{"transvection":{"target":0,"poly":"p1^2"}}]})")), Error);
  CHECK_THROWS_AS(endo_from_json(Json::parse(R"({"n_vars":2,"images":["x1"]})")), Error);
}

TEST_CASE("cli verify example") {
  const auto in = write_temp("endo.json", Json::parse(R"({"n_vars":2,"images":["x1 + p1^2","p1"]})"));
  const Run r = cli("verify --symplectic --input " + in);
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == Json{{"symplectic", true}, {"jacobian_one", true}});
  const auto bad = write_temp("bad.json", Json::parse(R"({"n_vars":2,"images":["2*x1","p1"]})"));
  CHECK(Json::parse(cli("verify --input " + bad).out) == Json{{"symplectic", false}, {"jacobian_one", false}});
}

TEST_CASE("cli modp example") {
  const auto in = write_temp("w.json", Json::parse(R"({"n_vars":2,"word":[{"transvection":{"target":0,"poly":"p1^2"}}]})"));
  const Run r = cli("modp --p 2 --word " + in + " --restrict-center");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("p") == 2);
  // center map (X + Y^2, Y) in the center coordinates X = x^2, Y = y^2
  CHECK(j.at("images")[0] == Json::parse(R"({"n_vars":2,"terms":[{"coeff":"1","exp":[1,0]},{"coeff":"1","exp":[0,2]}]})"));
  CHECK(j.at("images")[1] == Json::parse(R"({"n_vars":2,"terms":[{"coeff":"1","exp":[0,1]}]})"));
  const Run bad = cli("modp --p 4 --word " + in);
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out).at("error") == "BadPrime");
}

TEST_CASE("cli approximate example") {
  std::mt19937_64 rng(197);
  const QEndo sigma = random_flow_composition(rng, 1, 4, 2);
  const auto in = write_temp("sigma.json", to_json(sigma));
  const Run r = cli("approximate --height 6 --seed 42 --input " + in);
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("target") == 6);
  CHECK(j.at("seed") == 42);
  const QTameWord w = word_from_json(j.at("word"));
  // certificate recomputed here from a truncated evaluation
  CHECK(height_of(tame_evaluate(w, 6), sigma) > 6);
  if (j.at("achieved_height").is_number()) CHECK(j.at("achieved_height").get<int>() > 6);
  // byte-identical on a rerun
  CHECK(cli("approximate --height 6 --seed 42 --input " + in).out == r.out);
}

TEST_CASE("cli usage and domain errors") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  const auto in = write_temp("endo2.json", Json::parse(R"({"n_vars":2,"images":["x1 + + p1","p1"]})"));
  const Run syntax = cli("verify --input " + in);
  CHECK(syntax.code == 1);
  CHECK(Json::parse(syntax.out).at("error") == "SyntaxError");
  const auto ok = write_temp("endo3.json", Json::parse(R"({"n_vars":2,"images":["x1","p1 + x1^2"]})"));
  const Run missing_seed = cli("approximate --height 4 --input " + ok);
  CHECK(missing_seed.code == 2);
  CHECK(Json::parse(missing_seed.out).at("error") == "UsageError");
  CHECK(cli("star --input " + ok + " --product bogus").code == 2);
  CHECK(cli("verify --input /nonexistent/file.json").code == 1);
}

TEST_CASE("cli lift, limit, star, center and gauge") {
  const auto w = write_temp("w2.json", Json::parse(R"({"n_vars":2,"word":[{"transvection":{"target":0,"poly":"p1^2"}}]})"));
  const Run lift = cli("lift --input " + w);
  REQUIRE(lift.code == 0);
  const auto lifted = write_temp("lifted.json", Json::parse(lift.out));
  const Run limit = cli("limit --input " + lifted);
  REQUIRE(limit.code == 0);
  CHECK(endo_from_json(Json::parse(limit.out)) == QEndo({parse_poly("x1 + p1^2", 2), parse_poly("p1", 2)}));

  const auto st = write_temp("star.json", Json::parse(R"({"n":1,"f":"p1","g":"x1"})"));
  const Run normal = cli("star --input " + st + " --product normal");
  CHECK(hbar_poly_from_json(Json::parse(normal.out), 2) == parse_hbar_poly("x1*p1 + h", 2));
  const Run moyal = cli("star --input " + st + " --product moyal");
  CHECK(hbar_poly_from_json(Json::parse(moyal.out), 2) == parse_hbar_poly("x1*p1 + 1/2*h", 2));

  const Json center = Json::parse(cli("center --p 2 --n 1").out);
  CHECK(center.at("central") == Json::array({true, true}));
  CHECK(center.at("bracket")[1][0] == "1");

  const Run lift2 = cli("lift --input " + w + " --order 3");
  CHECK(Json::parse(lift2.out).at("K") == 3);
  const auto defect = write_temp("defect.json", Json::parse(R"({"n":1,"K":4,"images":[
    {"terms":[{"x_exp":[1],"y_exp":[0],"coeff":{"0":"1"}}]},
    {"terms":[{"x_exp":[0],"y_exp":[1],"coeff":{"0":"1"}},{"x_exp":[2],"y_exp":[0],"coeff":{"2":"1"}}]}]})"));
  const Run g = cli("gauge-normalize --input " + defect);
  REQUIRE(g.code == 0);
  const Json gj = Json::parse(g.out);
  CHECK(gj.at("defect_order") == "none");
  CHECK(gj.at("steps")[0].at("defect_order") == 2);
}
