#include "pcrank/theorem.hpp"

#include <array>
#include <string>

#include "pcrank/axioms.hpp"
#include "pcrank/dominance.hpp"
#include "pcrank/registry.hpp"
#include "pcrank/weak_order.hpp"

namespace pcrank {

namespace {

std::string object(Index i) { return default_label(i); }

/// Premise of (i, j) is strict under every weak order, so any SC ranking
/// has f_i > f_j.
TraceStep forced_strict(const std::string& id, const RankingProblem& p, Index i, Index j) {
  std::size_t orders = 0;
  bool holds = true;
  for (const WeakOrder& order : enumerate_weak_orders(p.size())) {
    ++orders;
    if (sc_dominance(p, order, i, j).verdict != Dominance::strict) holds = false;
  }
  return {id, "f_" + std::to_string(i + 1) + " > f_" + std::to_string(j + 1), holds,
          "strict premise " + object(i) + " over " + object(j) + " under all " + std::to_string(orders) +
              " weak orders"};
}

/// Under every order with a > b_lo, c > d and b ⪰ a the premise of (a, b) is
/// strict, so such orders are not self-consistent and f_a > f_b.
TraceStep forced_by_case(const std::string& id, const RankingProblem& p, Index a, Index b, Index a2, Index b2) {
  std::size_t cases = 0;
  bool holds = true;
  for (const WeakOrder& order : enumerate_weak_orders(p.size())) {
    if (!order.strictly_above(a, a2) || !order.strictly_above(b2, b) || !order.weakly_above(b, a)) continue;
    ++cases;
    if (sc_dominance(p, order, a, b).verdict != Dominance::strict) holds = false;
  }
  return {id, "f_" + std::to_string(a + 1) + " > f_" + std::to_string(b + 1), holds && cases > 0,
          "every order with " + object(a) + " > " + object(a2) + ", " + object(b2) + " > " + object(b) + " and " +
              object(b) + " >= " + object(a) + " (" + std::to_string(cases) + " orders) has a strict premise " +
              object(a) + " over " + object(b)};
}

TraceStep enumeration_agrees(const std::string& id, const RankingProblem& p, Index a, Index b) {
  const ScEnumeration sc = enumerate_sc_rankings(p);
  bool holds = !sc.budget_exceeded && !sc.orders.empty();
  for (const WeakOrder& order : sc.orders) {
    if (!order.strictly_above(a, b)) holds = false;
  }
  return {id, "every self-consistent ranking has " + object(a) + " > " + object(b), holds,
          std::to_string(sc.orders.size()) + " self-consistent rankings"};
}

}  // namespace

Theorem31Trace theorem31_witness() {
  const RankingProblem p = registry_entry("3.3").problem;
  const RankingProblem p_prime = registry_entry("3.3-prime").problem;
  Theorem31Trace trace;
  auto& steps = trace.steps;

  steps.push_back(forced_strict("a", p, 0, 2));
  steps.push_back(forced_strict("b", p, 3, 1));
  steps.push_back(forced_by_case("c", p, 0, 1, 2, 3));
  steps.push_back(enumeration_agrees("c-check", p, 0, 1));

  const std::array<Index, 4> sigma{1, 0, 3, 2};
  const bool relabel = p.permuted(sigma) == p_prime;
  steps.push_back({"sigma", "(N,R',M) is (N,R,M) relabelled by sigma = (12)(34)", relabel,
                   "X1 <-> X2, X3 <-> X4 maps R onto R' and keeps M"});

  // The argument under sigma: objects 1,2,3,4 play the roles of 2,1,4,3.
  steps.push_back(forced_strict("a'", p_prime, 1, 3));
  steps.push_back(forced_strict("b'", p_prime, 2, 0));
  steps.push_back(forced_by_case("c'", p_prime, 1, 0, 3, 2));
  steps.push_back(enumeration_agrees("c'-check", p_prime, 1, 0));

  // IIM: the problems differ only in {X3, X4}, which misses {X1, X2}, so
  // the order of X1 and X2 must be kept. Every pair of SC rankings breaks it.
  const auto diff = differing_pairs(p, p_prime);
  const bool iim_applies =
      p.size() >= 4 && diff.size() == 1 && diff.front() == std::pair<Index, Index>{2, 3};
  steps.push_back({"iim", "IIM applies to (X1, X2) across the two problems", iim_applies,
                   "single changed pair {X3, X4}, disjoint from {X1, X2}"});

  const auto sc = enumerate_sc_rankings(p).orders;
  const auto sc_prime = enumerate_sc_rankings(p_prime).orders;
  std::size_t pairs = 0;
  bool all_flip = !sc.empty() && !sc_prime.empty();
  for (const WeakOrder& o : sc) {
    for (const WeakOrder& o2 : sc_prime) {
      ++pairs;
      std::vector<Rational> before(4), after(4);
      for (Index x = 0; x < 4; ++x) {
        before[x] = -static_cast<long>(o.level(x));
        after[x] = -static_cast<long>(o2.level(x));
      }
      if (!order_flipped(before, after, 0, 1)) all_flip = false;
    }
  }
  steps.push_back({"conflict", "every SC ranking pair violates IIM on (X1, X2)", all_flip,
                   std::to_string(pairs) + " pairs of self-consistent rankings checked"});

  const ClassFlags flags = classify(p);
  const ClassFlags flags_prime = classify(p_prime);
  const bool domain = flags.balanced && flags.unweighted && flags.extremal && flags_prime.balanced &&
                      flags_prime.unweighted && flags_prime.extremal;
  steps.push_back({"domain", "both problems are balanced, unweighted and extremal", domain, ""});

  trace.contradiction = true;
  for (const TraceStep& step : steps) trace.contradiction = trace.contradiction && step.holds;
  trace.verdict = trace.contradiction ? "contradiction established" : "contradiction not established";
  return trace;
}

}  // namespace pcrank
