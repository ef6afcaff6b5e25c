#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using namespace pcrank;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& id) { return run({"example", "--id", id}).out; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("rank") {
  const auto ex33 = example("3.3");
  const auto ls = run({"rank", "--method", "ls", "--input", "-"}, ex33);
  CHECK(ls.code == cli::ok);
  CHECK(ls.out == "q = (1/8, -1/8, -3/8, 3/8); ranking X4 ≻ X1 ≻ X2 ≻ X3\n");

  const auto grs = run({"rank", "--method", "grs", "--epsilon", "1", "--input", "-", "--json"}, ex33);
  CHECK(grs.code == cli::ok);
  const auto j = nlohmann::json::parse(grs.out);
  CHECK(j["ratings"] == nlohmann::json::array({"1/3", "-1/3", "-4/3", "4/3"}));

  CHECK(run({"rank", "--method", "grs", "--input", "-"}, ex33).code == cli::usage_error);
  CHECK(run({"rank", "--method", "grs", "--epsilon", "abc", "--input", "-"}, ex33).code == cli::usage_error);
  CHECK(run({"rank", "--method", "grs", "--epsilon", "0", "--input", "-"}, ex33).code == cli::usage_error);
  CHECK(run({"rank", "--method", "ls", "--epsilon", "1", "--input", "-"}, ex33).code == cli::usage_error);
  CHECK(run({"rank", "--method", "elo", "--input", "-"}, ex33).code == cli::usage_error);
  CHECK(run({"rank", "--method", "ls", "--input", "-", "--bogus"}, ex33).code == cli::usage_error);
}

TEST_CASE("unconnected note") {
  const std::string csv = "object_a,object_b,score_a,score_b\nA,B,1,0\nC,D,1,0\n";
  const auto r = run({"rank", "--method", "ls", "--input", "-"}, csv);
  CHECK(r.code == cli::ok);
  CHECK(has(r.out, "unconnected: cross-component order is conventional"));
}

TEST_CASE("check exit codes") {
  const auto ex33 = example("3.3");
  const auto sc = run({"check", "--axiom", "sc", "--method", "rowsum", "--input", "-"}, ex33);
  CHECK(sc.code == cli::violation);
  CHECK(has(sc.out, "witness pair (X1, X2)"));

  CHECK(run({"check", "--axiom", "sc", "--method", "grs", "--epsilon", "1", "--input", "-"}, ex33).code == cli::ok);
  CHECK(run({"check", "--axiom", "wsc", "--method", "rowsum", "--input", "-"}, ex33).code == cli::ok);
  CHECK(run({"check", "--axiom", "iim", "--method", "ls", "--input", "-"}, ex33).code == cli::violation);
  CHECK(run({"check", "--axiom", "iim", "--method", "rowsum", "--input", "-"}, ex33).code == cli::ok);
  CHECK(run({"check", "--axiom", "sc", "--method", "rowsum", "--input", "-", "--budget", "0"}, ex33).code ==
        cli::budget_exceeded);

  const auto ex41 = example("4.1");
  CHECK(run({"check", "--axiom", "mva", "--method", "ls", "--input", "-", "--budget", "500"}, ex41).code == cli::ok);
  const std::string lone = R"({"version":1,"R":[["0","0","0"],["0","0","0"],["0","0","0"]],"M":[[0,1,2],[1,0,3],[2,3,0]]})";
  CHECK(run({"check", "--axiom", "mvi", "--method", "rowsum", "--input", "-"}, lone).code == cli::usage_error);

  const auto js = run({"check", "--axiom", "sc", "--method", "rowsum", "--input", "-", "--json"}, ex33);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["verdict"] == "violated");
  CHECK(j["witness"]["kind"] == "dominance");
}

TEST_CASE("classify, macrovertices, enumerate") {
  const auto cls = run({"classify", "--input", "-", "--json"}, example("3.1"));
  CHECK(cls.code == cli::ok);
  const auto flags = nlohmann::json::parse(cls.out);
  CHECK(flags["balanced"] == true);
  CHECK(flags["round_robin"] == false);

  const auto mv = run({"macrovertices", "--input", "-"}, example("4.1"));
  CHECK(mv.code == cli::ok);
  CHECK(has(mv.out, "{X1, X2, X3}"));

  const auto en = run({"enumerate-sc", "--input", "-"}, example("3.1"));
  CHECK(en.code == cli::ok);
  CHECK(en.out == "X1 ≻ (X2 ∼ X3) ≻ X4\n");
}

TEST_CASE("example and theorem31") {
  CHECK(run({"example", "--id", "9.9"}).code == cli::usage_error);
  CHECK_FALSE(has(example("3.3"), "note"));
  CHECK(has(run({"example", "--id", "3.3", "--emit"}).out, "note"));

  const auto th = run({"theorem31", "--json"});
  CHECK(th.code == cli::ok);
  const auto j = nlohmann::json::parse(th.out);
  CHECK(j["contradiction"] == true);
  CHECK(j["verdict"] == "contradiction established");
}

TEST_CASE("help and missing subcommand") {
  CHECK(run({"--help"}).code == cli::ok);
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"rank", "--method", "ls", "--input", "/nonexistent/file.json"}).code == cli::usage_error);
}

TEST_SUITE_END();
