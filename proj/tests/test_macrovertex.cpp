#include <doctest.h>

#include "pcrank/macrovertex.hpp"
#include "pcrank/registry.hpp"

using namespace pcrank;

namespace {

std::vector<std::vector<Index>> members_of(const std::vector<Macrovertex>& list) {
  std::vector<std::vector<Index>> out;
  for (const auto& mv : list) out.push_back(mv.members);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("macrovertex");

TEST_CASE("predicate on example 4.1") {
  const auto p = registry_entry("4.1").problem;
  const std::vector<Index> inner{0, 1, 2}, outer{3, 4, 5}, single{4}, bad{0, 9};
  CHECK(is_macrovertex(p, inner));
  CHECK_FALSE(is_macrovertex(p, outer));
  CHECK(is_macrovertex(p, single));
  CHECK_THROWS_AS(is_macrovertex(p, bad), std::invalid_argument);
}

TEST_CASE("enumeration") {
  const auto found = find_macrovertices(registry_entry("4.1").problem);
  CHECK(members_of(found) == std::vector<std::vector<Index>>{{1, 2}, {0, 1, 2}, {0, 1, 2, 3}});
  REQUIRE(found.size() == 3);
  CHECK(found[1].outside == std::vector<std::pair<Index, Count>>{{3, 2}, {4, 1}, {5, 0}});

  const auto rr = RankingProblem::from_results_matches(
      Matrix<Rational>(4, 4), Matrix<Count>{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  CHECK(find_macrovertices(rr).size() == 6 + 4);

  CHECK_THROWS_AS(find_macrovertices(RankingProblem::empty(21)), std::invalid_argument);
}

TEST_CASE("MVA instances on example 4.1") {
  const auto p = registry_entry("4.1").problem;
  const std::vector<Index> v{0, 1, 2};
  const auto changed = p.with_pair(4, 5, 1, 3);
  for (const auto& m : {Method::row_sum(), Method::least_squares(), Method::generalized_row_sum(1)})
    CHECK(check_mva_instance(m, p, changed, v, 0, 1).verdict == Verdict::satisfied);

  const auto cut = p.with_pair(3, 4, 0, 0);
  CHECK(check_mva_instance(Method::least_squares(), p, cut, v, 0, 1).verdict == Verdict::satisfied);

  CHECK_THROWS_AS(check_mva_instance(Method::row_sum(), p, changed, v, 0, 3), PreconditionError);
  const auto inside = p.with_pair(1, 2, 1, 3);
  CHECK_THROWS_AS(check_mva_instance(Method::row_sum(), p, inside, v, 0, 1), PreconditionError);
}

TEST_CASE("MVI instances on example 4.1") {
  const auto p = registry_entry("4.1").problem;
  const std::vector<Index> v{0, 1, 2};
  for (Count r = -3; r <= 3; ++r) {
    const auto changed = p.with_pair(1, 2, r, 3);
    if (changed == p) continue;
    CHECK(check_mvi_instance(Method::generalized_row_sum(1), p, changed, v, 3, 4).verdict == Verdict::satisfied);
    CHECK(check_mvi_instance(Method::row_sum(), p, changed, v, 3, 5).verdict == Verdict::satisfied);
  }
  const std::vector<Index> not_mv{3, 4, 5};
  CHECK_THROWS_AS(check_mvi_instance(Method::row_sum(), p, p.with_pair(3, 4, 1, 1), not_mv, 0, 1),
                  PreconditionError);
  CHECK_THROWS_AS(check_mvi_instance(Method::row_sum(), p, p.with_pair(0, 3, 0, 1), v, 4, 5), PreconditionError);
}

TEST_CASE("search driver") {
  const auto p = registry_entry("4.1").problem;
  for (const auto& m : {Method::row_sum(), Method::least_squares(), Method::generalized_row_sum(1)}) {
    for (auto which : {Axiom::mva, Axiom::mvi}) {
      const auto r = search_mv_violation(m, p, which, 2000);
      CHECK(r.verdict == Verdict::satisfied);
      CHECK(r.instances_checked > 0);
    }
  }
  const auto zero = search_mv_violation(Method::row_sum(), p, Axiom::mva, 0);
  CHECK(zero.instances_checked == 0);
  CHECK(zero.verdict == Verdict::satisfied);

  const auto lone = RankingProblem::from_results_matches(
      Matrix<Rational>(3, 3), Matrix<Count>{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  CHECK_THROWS_AS(search_mv_violation(Method::row_sum(), lone, Axiom::mva), PreconditionError);
}

TEST_SUITE_END();
