#include <doctest.h>

#include "pcrank/dominance.hpp"
#include "pcrank/methods.hpp"
#include "pcrank/registry.hpp"

using namespace pcrank;

namespace {

WeakOrder order(std::initializer_list<std::size_t> levels) {
  const std::vector<std::size_t> lv(levels);
  return WeakOrder::from_levels(lv);
}

}  // namespace

TEST_SUITE_BEGIN("dominance");

TEST_CASE("example 3.1 premises") {
  const auto p = registry_entry("3.1").problem;
  const auto w = order({0, 1, 1, 2});

  SUBCASE("X1 strictly dominates X4") {
    const auto r = sc_dominance(p, w, 0, 3);
    CHECK(r.verdict == Dominance::strict);
    REQUIRE(r.witness.has_value());
    CHECK(verify_dominance_witness(p, w, *r.witness, Strictness::results_or_opponents) == Dominance::strict);
    CHECK(sc_dominance(p, w, 3, 0).verdict == Dominance::none);
  }
  SUBCASE("X2 and X3 weakly dominate each other under any order") {
    for (const auto& any : enumerate_weak_orders(4)) {
      CHECK(sc_dominance(p, any, 1, 2).verdict != Dominance::none);
      CHECK(sc_dominance(p, any, 2, 1).verdict != Dominance::none);
    }
    CHECK(sc_dominance(p, w, 1, 2).verdict == Dominance::weak);
  }
}

TEST_CASE("vacuous premise between isolated objects") {
  const auto p = RankingProblem::empty(3);
  const auto w = order({0, 1, 2});
  CHECK(sc_dominance(p, w, 0, 1).verdict == Dominance::weak);
  CHECK(sc_dominance(p, w, 1, 0).verdict == Dominance::weak);
}

TEST_CASE("unequal degrees are never comparable") {
  const auto p = registry_entry("4.1").problem;
  const auto w = order({0, 0, 0, 0, 0, 0});
  CHECK(sc_dominance(p, w, 0, 1).verdict == Dominance::none);
  CHECK(sc_dominance(p, w, 0, 5).verdict != Dominance::none);
}

TEST_CASE("example 3.2 under the row-sum order") {
  const auto p = registry_entry("3.2").problem;
  const auto w = induce_ranking(row_sum(p));
  const auto sc = sc_dominance(p, w, 1, 4, Strictness::results_or_opponents);
  CHECK(sc.verdict == Dominance::strict);
  const auto wsc = sc_dominance(p, w, 1, 4, Strictness::results_only);
  CHECK(wsc.verdict == Dominance::weak);
  REQUIRE(sc.witness.has_value());
  CHECK(verify_dominance_witness(p, w, *sc.witness, Strictness::results_only) == Dominance::weak);
}

TEST_CASE("example 3.3 forced inequalities") {
  const auto p = registry_entry("3.3").problem;
  const auto w = order({0, 1, 1, 0});
  CHECK(sc_dominance(p, w, 0, 2).verdict == Dominance::strict);
  CHECK(sc_dominance(p, w, 3, 1).verdict == Dominance::strict);
  CHECK(sc_dominance(p, w, 0, 1).verdict == Dominance::weak);

  // With X2 ⪰ X1 the mirrored match plus X4 ≻ X3 makes the premise strict.
  const auto v = order({1, 1, 2, 0});
  CHECK(sc_dominance(p, v, 0, 1).verdict == Dominance::strict);
  CHECK(sc_dominance(p, v, 0, 1, Strictness::results_only).verdict == Dominance::weak);
}

TEST_CASE("weighted problems use a layer assignment") {
  const auto p = registry_entry("4.1").problem;
  const auto w = induce_ranking(least_squares(p));
  const auto r = sc_dominance(p, w, 1, 2);
  CHECK(r.verdict == Dominance::weak);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->decomposition.layers.size() == 3);
  CHECK(r.witness->bijections.size() == 3);
  CHECK(verify_dominance_witness(p, w, *r.witness, Strictness::results_or_opponents) == Dominance::weak);
}

TEST_CASE("tampered witnesses are rejected") {
  const auto p = registry_entry("3.1").problem;
  const auto w = order({0, 1, 1, 2});
  auto witness = *sc_dominance(p, w, 0, 3).witness;
  SUBCASE("wrong direction") {
    std::swap(witness.i, witness.j);
    CHECK(verify_dominance_witness(p, w, witness, Strictness::results_or_opponents) == Dominance::none);
  }
  SUBCASE("bijection onto a non-opponent") {
    witness.bijections[0].pairs[0].second = 3;
    CHECK(verify_dominance_witness(p, w, witness, Strictness::results_or_opponents) == Dominance::none);
  }
  SUBCASE("missing layer") {
    witness.bijections.clear();
    CHECK(verify_dominance_witness(p, w, witness, Strictness::results_or_opponents) == Dominance::none);
  }
}

TEST_CASE("limits are reported") {
  SearchLimits tight;
  tight.max_objects = 3;
  const auto p = registry_entry("3.1").problem;
  CHECK(exceeds_limits(p, tight));
  CHECK_FALSE(exceeds_limits(p, SearchLimits{}));
  const auto r = sc_dominance(p, order({0, 1, 1, 2}), 0, 3, Strictness::results_or_opponents, tight);
  CHECK(r.budget_exceeded);

  SearchLimits starved;
  starved.max_candidates = 0;
  const auto s = sc_dominance(registry_entry("3.2").problem, order({0, 0, 0, 1, 1, 1}), 1, 4,
                              Strictness::results_or_opponents, starved);
  CHECK(s.budget_exceeded);
}

TEST_SUITE_END();
