#include "pcrank/axioms.hpp"

#include <algorithm>
#include <set>

#include "pcrank/macrovertex.hpp"

namespace pcrank {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::iim: return "iim";
    case Axiom::sc: return "sc";
    case Axiom::wsc: return "wsc";
    case Axiom::mva: return "mva";
    case Axiom::mvi: return "mvi";
  }
  return "?";
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::satisfied: return "satisfied-on-instances-checked";
    case Verdict::violated: return "violated";
    case Verdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

bool order_flipped(const std::vector<Rational>& before, const std::vector<Rational>& after, Index i, Index j) {
  return (before[i] >= before[j] && after[i] < after[j]) || (before[j] >= before[i] && after[j] < after[i]);
}

namespace {

constexpr const char* restricted_space_note =
    "premises searched over decompositions with layer results in {-1,0,1}";

void require_single_difference(const RankingProblem& p, const RankingProblem& p_prime,
                               std::pair<Index, Index>& changed) {
  if (p.size() != p_prime.size()) throw PreconditionError("problems differ in size");
  const auto diff = differing_pairs(p, p_prime);
  if (diff.empty()) throw PreconditionError("problems are identical");
  if (diff.size() > 1) throw PreconditionError("problems differ in more than one pair");
  changed = diff.front();
}

struct Perturbation {
  Index k;
  Index l;
  Rational r;
  Count m;
};

/// Integer perturbations of pair {k, l} in search order.
std::vector<Perturbation> pair_perturbations(const RankingProblem& p, Index k, Index l) {
  std::vector<Perturbation> out;
  const Count m0 = p.matches(k, l);
  for (Count m = m0 - 1; m <= m0 + 1; ++m) {
    if (m < 0) continue;
    for (Count r = -m; r <= m; ++r) {
      if (m == m0 && p.result(k, l) == r) continue;
      out.push_back({k, l, Rational(static_cast<long>(r)), m});
    }
  }
  return out;
}

AxiomReport dominance_check(const RankingProblem& problem, const WeakOrder& order, Strictness strictness,
                            const SearchLimits& limits) {
  AxiomReport report;
  report.axiom = strictness == Strictness::results_or_opponents ? Axiom::sc : Axiom::wsc;
  report.subject = "order";
  report.note = restricted_space_note;
  const Index n = problem.size();
  if (order.size() != n) throw std::invalid_argument("order and problem differ in size");
  if (!problem.has_integer_results()) throw InvalidProblem("self-consistency checks require integer results");
  if (exceeds_limits(problem, limits)) {
    report.verdict = Verdict::budget_exceeded;
    report.search_complete = false;
    return report;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j || problem.degree(i) != problem.degree(j)) continue;
      // A premise can only be contradicted when i is not strictly above j.
      if (order.strictly_above(i, j)) continue;
      ++report.instances_checked;
      const DominanceResult d = sc_dominance(problem, order, i, j, strictness, limits);
      report.candidates += d.candidates;
      if (d.budget_exceeded) {
        report.verdict = Verdict::budget_exceeded;
        report.search_complete = false;
        return report;
      }
      const bool violated = (d.verdict == Dominance::strict) ||
                            (d.verdict == Dominance::weak && order.strictly_above(j, i));
      if (violated) {
        report.verdict = Verdict::violated;
        report.dominance = DominanceViolation{problem, i, j, d.verdict, order, *d.witness};
        return report;
      }
    }
  }
  return report;
}

AxiomReport ratings_check(const RatingVector& ratings, const RankingProblem& problem, Strictness strictness,
                          const SearchLimits& limits) {
  if (ratings.problem_fingerprint != problem.fingerprint() || ratings.values.size() != problem.size()) {
    throw std::invalid_argument("ratings were computed for another problem");
  }
  AxiomReport report = dominance_check(problem, induce_ranking(ratings), strictness, limits);
  report.subject = ratings.method.name();
  report.ratings = ratings.values;
  return report;
}

}  // namespace

AxiomReport check_iim_instance(const Method& method, const RankingProblem& p, const RankingProblem& p_prime, Index i,
                               Index j) {
  if (p.size() < 4) throw PreconditionError("IIM has a meaning only if n >= 4");
  if (i == j || i >= p.size() || j >= p.size()) throw PreconditionError("target pair must be two distinct objects");
  std::pair<Index, Index> changed;
  require_single_difference(p, p_prime, changed);
  if (changed.first == i || changed.first == j || changed.second == i || changed.second == j) {
    throw PreconditionError("changed pair touches the target pair");
  }
  AxiomReport report;
  report.axiom = Axiom::iim;
  report.subject = method.name();
  report.instances_checked = 1;
  const auto before = evaluate(method, p).values;
  const auto after = evaluate(method, p_prime).values;
  if (order_flipped(before, after, i, j)) {
    report.verdict = Verdict::violated;
    report.perturbation = PerturbationWitness{p, p_prime, changed, {i, j}, before, after, {}};
  }
  return report;
}

AxiomReport search_iim_violation(const Method& method, const RankingProblem& p, std::uint64_t budget) {
  const Index n = p.size();
  if (n < 4) throw PreconditionError("IIM has a meaning only if n >= 4");
  AxiomReport report;
  report.axiom = Axiom::iim;
  report.subject = method.name();
  if (budget == 0) {
    report.search_complete = false;
    return report;
  }
  const auto before = evaluate(method, p).values;
  for (Index k = 0; k < n; ++k) {
    for (Index l = k + 1; l < n; ++l) {
      for (const Perturbation& change : pair_perturbations(p, k, l)) {
        const RankingProblem perturbed = p.with_pair(k, l, change.r, change.m);
        const auto after = evaluate(method, perturbed).values;
        for (Index i = 0; i < n; ++i) {
          for (Index j = i + 1; j < n; ++j) {
            if (i == k || i == l || j == k || j == l) continue;
            if (report.instances_checked == budget) {
              report.search_complete = false;
              return report;
            }
            ++report.instances_checked;
            if (order_flipped(before, after, i, j)) {
              report.verdict = Verdict::violated;
              report.perturbation = PerturbationWitness{p, perturbed, {k, l}, {i, j}, before, after, {}};
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_order_consistency(const RankingProblem& problem, const WeakOrder& order, Strictness strictness,
                                    const SearchLimits& limits) {
  return dominance_check(problem, order, strictness, limits);
}

AxiomReport check_sc(const Method& method, const RankingProblem& problem, const SearchLimits& limits) {
  return check_sc(evaluate(method, problem), problem, limits);
}

AxiomReport check_wsc(const Method& method, const RankingProblem& problem, const SearchLimits& limits) {
  return check_wsc(evaluate(method, problem), problem, limits);
}

AxiomReport check_sc(const RatingVector& ratings, const RankingProblem& problem, const SearchLimits& limits) {
  return ratings_check(ratings, problem, Strictness::results_or_opponents, limits);
}

AxiomReport check_wsc(const RatingVector& ratings, const RankingProblem& problem, const SearchLimits& limits) {
  return ratings_check(ratings, problem, Strictness::results_only, limits);
}

bool order_is_self_consistent(const RankingProblem& problem, const WeakOrder& order, const SearchLimits& limits) {
  const AxiomReport report = dominance_check(problem, order, Strictness::results_or_opponents, limits);
  if (report.verdict == Verdict::budget_exceeded) throw std::runtime_error("self-consistency search budget exceeded");
  return report.verdict == Verdict::satisfied;
}

ScEnumeration enumerate_sc_rankings(const RankingProblem& problem, const SearchLimits& limits) {
  if (problem.size() > 6) throw std::invalid_argument("enumeration of self-consistent rankings needs n <= 6");
  ScEnumeration out;
  for (const WeakOrder& order : enumerate_weak_orders(problem.size())) {
    const AxiomReport report = dominance_check(problem, order, Strictness::results_or_opponents, limits);
    if (report.verdict == Verdict::budget_exceeded) {
      out.budget_exceeded = true;
      continue;
    }
    if (report.verdict == Verdict::satisfied) out.orders.push_back(order);
  }
  return out;
}

bool recheck_violation(const AxiomReport& report, const Method& method) {
  if (report.verdict != Verdict::violated) return false;
  if (report.perturbation) {
    const PerturbationWitness& w = report.perturbation.value();
    const Index n = w.original.size();
    const auto diff = differing_pairs(w.original, w.perturbed);
    if (diff.size() != 1 || diff.front() != w.changed) return false;
    const auto [i, j] = w.target;
    const auto [k, l] = w.changed;
    if (i >= n || j >= n || i == j) return false;
    const std::set<Index> changed_set{k, l};
    const bool i_inside = changed_set.count(i) > 0;
    const bool j_inside = changed_set.count(j) > 0;
    if (report.axiom == Axiom::iim) {
      if (n < 4 || i_inside || j_inside) return false;
    } else {
      const auto& v = w.macrovertex;
      if (!is_macrovertex(w.original, v) || !is_macrovertex(w.perturbed, v)) return false;
      auto in_v = [&](Index x) { return std::find(v.begin(), v.end(), x) != v.end(); };
      if (report.axiom == Axiom::mvi && !(in_v(k) && in_v(l) && !in_v(i) && !in_v(j))) return false;
      if (report.axiom == Axiom::mva && !(!in_v(k) && !in_v(l) && in_v(i) && in_v(j))) return false;
    }
    const auto before = evaluate(method, w.original).values;
    const auto after = evaluate(method, w.perturbed).values;
    return before == w.before && after == w.after && order_flipped(before, after, i, j);
  }
  if (report.dominance) {
    const DominanceViolation& v = report.dominance.value();
    const RankingProblem& parent = v.problem;
    if (v.witness.decomposition.parent_fingerprint != parent.fingerprint()) return false;
    const WeakOrder order = induce_ranking(evaluate(method, parent));
    if (!(order == v.order)) return false;
    const Strictness strictness =
        report.axiom == Axiom::sc ? Strictness::results_or_opponents : Strictness::results_only;
    const Dominance premise = verify_dominance_witness(parent, order, v.witness, strictness);
    if (premise == Dominance::strict) return !order.strictly_above(v.i, v.j);
    if (premise == Dominance::weak) return order.strictly_above(v.j, v.i);
    return false;
  }
  return false;
}

}  // namespace pcrank
