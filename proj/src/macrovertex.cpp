#include "pcrank/macrovertex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace pcrank {

namespace {

std::vector<char> membership(const RankingProblem& problem, std::span<const Index> members) {
  std::vector<char> in(problem.size(), 0);
  for (Index v : members) {
    if (v >= problem.size()) throw std::invalid_argument("macrovertex member out of range");
    in[v] = 1;
  }
  return in;
}

void require_macrovertex(const RankingProblem& p, const RankingProblem& p_prime, std::span<const Index> members) {
  if (p.size() != p_prime.size()) throw PreconditionError("problems differ in size");
  if (!is_macrovertex(p, members) || !is_macrovertex(p_prime, members)) {
    throw PreconditionError("object set is not a macrovertex in both problems");
  }
}

std::pair<Index, Index> single_difference(const RankingProblem& p, const RankingProblem& p_prime) {
  const auto diff = differing_pairs(p, p_prime);
  if (diff.empty()) throw PreconditionError("problems are identical");
  if (diff.size() > 1) throw PreconditionError("problems differ in more than one pair");
  return diff.front();
}

AxiomReport instance(Axiom axiom, const Method& method, const RankingProblem& p, const RankingProblem& p_prime,
                     std::span<const Index> members, std::pair<Index, Index> changed, Index a, Index b) {
  AxiomReport report;
  report.axiom = axiom;
  report.subject = method.name();
  report.instances_checked = 1;
  const auto before = evaluate(method, p).values;
  const auto after = evaluate(method, p_prime).values;
  if (order_flipped(before, after, a, b)) {
    report.verdict = Verdict::violated;
    report.perturbation = PerturbationWitness{p,      p_prime, changed, {a, b}, before, after,
                                              std::vector<Index>(members.begin(), members.end())};
  }
  return report;
}

}  // namespace

bool is_macrovertex(const RankingProblem& problem, std::span<const Index> members) {
  const auto in = membership(problem, members);
  if (members.empty()) return true;
  const Index first = members.front();
  for (Index k = 0; k < problem.size(); ++k) {
    if (in[k]) continue;
    for (Index i : members) {
      if (problem.matches(i, k) != problem.matches(first, k)) return false;
    }
  }
  return true;
}

std::vector<Macrovertex> find_macrovertices(const RankingProblem& problem) {
  const Index n = problem.size();
  if (n > 20) throw std::invalid_argument("macrovertex enumeration needs n <= 20");
  std::vector<Macrovertex> out;
  for (Index size = 2; size < n; ++size) {
    // Combinations of `size` objects in lexicographic order.
    std::vector<Index> pick(size);
    for (Index t = 0; t < size; ++t) pick[t] = t;
    for (;;) {
      if (is_macrovertex(problem, pick)) {
        Macrovertex v{pick, {}};
        std::vector<char> in(n, 0);
        for (Index x : pick) in[x] = 1;
        for (Index k = 0; k < n; ++k) {
          if (!in[k]) v.outside.emplace_back(k, problem.matches(pick.front(), k));
        }
        out.push_back(std::move(v));
      }
      Index t = size;
      while (t > 0 && pick[t - 1] == n - size + t - 1) --t;
      if (t == 0) break;
      ++pick[t - 1];
      for (Index u = t; u < size; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  return out;
}

AxiomReport check_mvi_instance(const Method& method, const RankingProblem& p, const RankingProblem& p_prime,
                               std::span<const Index> members, Index k, Index l) {
  require_macrovertex(p, p_prime, members);
  const auto in = membership(p, members);
  const auto changed = single_difference(p, p_prime);
  if (!in[changed.first] || !in[changed.second]) throw PreconditionError("changed pair is not inside the macrovertex");
  if (k >= p.size() || l >= p.size() || k == l || in[k] || in[l]) {
    throw PreconditionError("target pair must be two distinct objects outside the macrovertex");
  }
  return instance(Axiom::mvi, method, p, p_prime, members, changed, k, l);
}

AxiomReport check_mva_instance(const Method& method, const RankingProblem& p, const RankingProblem& p_prime,
                               std::span<const Index> members, Index i, Index j) {
  require_macrovertex(p, p_prime, members);
  const auto in = membership(p, members);
  const auto changed = single_difference(p, p_prime);
  if (in[changed.first] || in[changed.second]) throw PreconditionError("changed pair is not outside the macrovertex");
  if (i >= p.size() || j >= p.size() || i == j || !in[i] || !in[j]) {
    throw PreconditionError("target pair must be two distinct members of the macrovertex");
  }
  return instance(Axiom::mva, method, p, p_prime, members, changed, i, j);
}

AxiomReport search_mv_violation(const Method& method, const RankingProblem& p, Axiom which, std::uint64_t budget) {
  if (which != Axiom::mva && which != Axiom::mvi) throw std::invalid_argument("axiom must be mva or mvi");
  const auto macrovertices = find_macrovertices(p);
  if (macrovertices.empty()) throw PreconditionError("problem has no nontrivial macrovertex");
  const Index n = p.size();
  AxiomReport report;
  report.axiom = which;
  report.subject = method.name();
  if (budget == 0) {
    report.search_complete = false;
    return report;
  }
  const auto before = evaluate(method, p).values;
  // Perturbed ratings are shared between macrovertices.
  std::map<std::tuple<Index, Index, Count, Count>, std::vector<Rational>> cache;
  auto ratings_after = [&](Index a, Index b, Count r, Count m) -> const std::vector<Rational>& {
    const auto key = std::make_tuple(a, b, r, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, evaluate(method, p.with_pair(a, b, Rational(static_cast<long>(r)), m)).values).first;
    }
    return it->second;
  };

  for (const Macrovertex& v : macrovertices) {
    std::vector<char> in(n, 0);
    for (Index x : v.members) in[x] = 1;
    const bool perturb_inside = which == Axiom::mvi;
    for (Index a = 0; a < n; ++a) {
      for (Index b = a + 1; b < n; ++b) {
        if (static_cast<bool>(in[a]) != perturb_inside || static_cast<bool>(in[b]) != perturb_inside) continue;
        const Count m0 = p.matches(a, b);
        for (Count m = m0 - 1; m <= m0 + 1; ++m) {
          if (m < 0) continue;
          for (Count r = -m; r <= m; ++r) {
            if (m == m0 && p.result(a, b) == r) continue;
            for (Index i = 0; i < n; ++i) {
              for (Index j = i + 1; j < n; ++j) {
                if (static_cast<bool>(in[i]) == perturb_inside || static_cast<bool>(in[j]) == perturb_inside) continue;
                if (report.instances_checked == budget) {
                  report.search_complete = false;
                  return report;
                }
                ++report.instances_checked;
                const auto& after = ratings_after(a, b, r, m);
                if (order_flipped(before, after, i, j)) {
                  report.verdict = Verdict::violated;
                  report.perturbation = PerturbationWitness{
                      p, p.with_pair(a, b, Rational(static_cast<long>(r)), m), {a, b}, {i, j}, before, after,
                      v.members};
                  return report;
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace pcrank
