#include <doctest.h>

#include <sstream>

#include "pcrank/io.hpp"
#include "pcrank/registry.hpp"

using namespace pcrank;

namespace {

LabeledProblem csv(const std::string& text) {
  std::istringstream in(text);
  return ingest_matches_csv(in);
}

std::string error_of(const std::string& doc) {
  try {
    parse_problem_json(doc);
  } catch (const ParseError& e) {
    return e.what();
  } catch (const InvalidProblem& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("rationals") {
  CHECK(*parse_rational("3/6") == Rational(1, 2));
  CHECK(*parse_rational("-1.25") == Rational(-5, 4));
  CHECK(*parse_rational("1e-6") == Rational(1, 1000000));
  CHECK(*parse_rational("7") == 7);
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("abc").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK(to_string(Rational(-3, 8)) == "-3/8");
  Rational two(4, 2);
  two.canonicalize();
  CHECK(to_string(two) == "2");
  CHECK(format_vector({Rational(1, 8), Rational(-1, 8), 0}) == "(1/8, -1/8, 0)");
}

TEST_CASE("CSV ingestion") {
  SUBCASE("wins and draws") {
    const auto lp = csv("object_a,object_b,score_a,score_b\nA,B,1,0\nB,C,1/2,1/2\n");
    CHECK(lp.labels == std::vector<std::string>{"A", "B", "C"});
    CHECK(lp.problem.result(0, 1) == 1);
    CHECK(lp.problem.matches(0, 1) == 1);
    CHECK(lp.problem.result(1, 2) == 0);
    CHECK(lp.problem.matches(1, 2) == 1);
  }
  SUBCASE("example 3.1 wins") {
    const auto lp = csv("object_a,object_b,score_a,score_b\r\nX1,X2,1,0\r\nX1,X3,1,0\r\nX2,X4,1,0\r\nX3,X4,1,0\r\n");
    CHECK(lp.problem == registry_entry("3.1").problem);
  }
  SUBCASE("repeated pair accumulates") {
    const auto lp = csv("object_a,object_b,score_a,score_b\nA,B,1,0\nA,B,1,0\n");
    CHECK(lp.problem.matches(0, 1) == 2);
    CHECK(lp.problem.result(0, 1) == 2);
  }
  SUBCASE("intensities") {
    const auto lp = csv("object_a,object_b,score_a,score_b\nA,B,0.75,0.25\n");
    CHECK(lp.problem.result(0, 1) == Rational(1, 2));
  }
  SUBCASE("errors carry line numbers") {
    const auto fails_at = [](const std::string& text, const std::string& needle) {
      try {
        csv(text);
      } catch (const ParseError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
      }
      return false;
    };
    CHECK(fails_at("a,b,c,d\n", "header"));
    CHECK(fails_at("object_a,object_b,score_a,score_b\nA,B,1,0\nA,A,1,0\n", "line 3"));
    CHECK(fails_at("object_a,object_b,score_a,score_b\nA,B,1,1\n", "line 2"));
    CHECK(fails_at("object_a,object_b,score_a,score_b\nA,B,1\n", "line 2"));
    CHECK(fails_at("object_a,object_b,score_a,score_b\nA,B,-1,2\n", "line 2"));
  }
}

TEST_CASE("JSON round trip") {
  for (const auto& id : registry_ids()) {
    const auto e = registry_entry(id);
    const LabeledProblem lp{e.problem, e.labels, e.note};
    const auto back = parse_problem_json(emit_problem_json(lp));
    CHECK(back.problem == e.problem);
    CHECK(back.labels == e.labels);
    CHECK(back.note == e.note);
  }
}

TEST_CASE("JSON schema diagnostics") {
  CHECK(error_of(R"({"version":2,"R":[],"M":[]})").find("version") != std::string::npos);
  CHECK(error_of(R"({"version":1,"R":[["0","2"],["-2","0"]],"M":[[0,1],[1,0]]})").find("(1,2)") !=
        std::string::npos);
  CHECK(error_of(R"({"version":1,"R":[["0",0.5],["-1/2","0"]],"M":[[0,1],[1,0]]})").find("$.R[0][1]") !=
        std::string::npos);
  CHECK(error_of(R"({"version":1,"R":[["0","0"],["0","0"]],"M":[[0,-1],[-1,0]]})").find("$.M[0][1]") !=
        std::string::npos);
  CHECK(error_of(R"({"version":1,"labels":["a","a"],"R":[["0","0"],["0","0"]],"M":[[0,0],[0,0]]})")
            .find("labels") != std::string::npos);
  CHECK_FALSE(error_of("{not json").empty());

  const auto half = parse_problem_json(R"({"version":1,"R":[["0","1/2"],["-1/2","0"]],"M":[[0,1],[1,0]]})");
  CHECK(half.problem.result(0, 1) == Rational(1, 2));
  CHECK(half.labels == std::vector<std::string>{"X1", "X2"});
}

TEST_CASE("format sniffing") {
  CHECK(parse_problem("  {\"version\":1,\"R\":[[\"0\"]],\"M\":[[0]]}").problem.size() == 1);
  CHECK(parse_problem("object_a,object_b,score_a,score_b\nA,B,1,0\n").problem.size() == 2);
}

TEST_SUITE_END();
