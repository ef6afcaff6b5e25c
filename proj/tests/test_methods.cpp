#include <doctest.h>

#include "pcrank/methods.hpp"
#include "pcrank/registry.hpp"

using namespace pcrank;

namespace {

std::vector<Rational> v(std::initializer_list<Rational> xs) { return xs; }

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("methods");

TEST_CASE("method naming") {
  CHECK(Method::row_sum().name() == "rowsum");
  CHECK(Method::generalized_row_sum(q(1, 10)).name() == "grs(1/10)");
  CHECK(Method::least_squares().name() == "ls");
  CHECK(std::string(Method::generalized_row_sum(1).symbol()) == "x");
  CHECK_THROWS_AS(Method::generalized_row_sum(0), std::invalid_argument);
  CHECK_THROWS_AS(Method::generalized_row_sum(-1), std::invalid_argument);
}

TEST_CASE("row sum") {
  CHECK(row_sum(registry_entry("3.1").problem).values == v({2, 0, 0, -2}));
  CHECK(row_sum(registry_entry("3.3").problem).values == v({0, 0, -1, 1}));
  CHECK(row_sum(registry_entry("3.2").problem).values == v({1, 0, 1, -1, 0, -1}));
  CHECK(row_sum(RankingProblem::empty(3)).values == v({0, 0, 0}));
}

TEST_CASE("generalized row sum") {
  const auto p = registry_entry("3.3").problem;
  CHECK(generalized_row_sum(p, 1).values == v({q(1, 3), q(-1, 3), q(-4, 3), q(4, 3)}));
  CHECK(generalized_row_sum(RankingProblem::empty(4), 5).values == v({0, 0, 0, 0}));
  CHECK_THROWS_AS(generalized_row_sum(p, 0), std::invalid_argument);
  const auto x = generalized_row_sum(p, q(1, 10));
  CHECK(x.method == Method::generalized_row_sum(q(1, 10)));
  CHECK(x.problem_fingerprint == p.fingerprint());
}

TEST_CASE("least squares") {
  const auto p = registry_entry("3.3").problem;
  const auto ls = least_squares(p);
  CHECK(ls.values == v({q(1, 8), q(-1, 8), q(-3, 8), q(3, 8)}));
  CHECK_FALSE(ls.cross_component_conventional);

  SUBCASE("isolated object gets zero") {
    const auto iso = RankingProblem::from_results_matches(Matrix<Rational>{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
                                                          Matrix<Count>{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    const auto r = least_squares(iso);
    CHECK(r.values == v({q(1, 2), q(-1, 2), 0}));
    CHECK(r.cross_component_conventional);
  }
  SUBCASE("round robin equals s over mn") {
    const auto rr = RankingProblem::from_results_matches(Matrix<Rational>{{0, 2, -1}, {-2, 0, 0}, {1, 0, 0}},
                                                         Matrix<Count>{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
    CHECK(least_squares(rr).values == v({q(1, 6), q(-2, 6), q(1, 6)}));
    CHECK(generalized_row_sum(rr, 7).values == row_sum(rr).values);
  }
}

TEST_CASE("evaluate dispatches") {
  const auto p = registry_entry("3.3").problem;
  CHECK(evaluate(Method::least_squares(), p).values == least_squares(p).values);
  CHECK(evaluate(Method::row_sum(), p).values == row_sum(p).values);
  CHECK(evaluate(Method::generalized_row_sum(1), p).values == generalized_row_sum(p, 1).values);
}

TEST_CASE("induced ranking") {
  CHECK(induce_ranking(v({2, 0, 0, -2})).to_string() == "X1 ≻ (X2 ∼ X3) ≻ X4");
  CHECK(induce_ranking(v({3, 3, 3})).level_count() == 1);
  CHECK(induce_ranking(v({q(1, 8), q(-1, 8), q(-3, 8), q(3, 8)})).to_string() == "X4 ≻ X1 ≻ X2 ≻ X3");
}

TEST_SUITE_END();
