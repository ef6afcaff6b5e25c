#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pcrank/axioms.hpp"
#include "pcrank/methods.hpp"
#include "pcrank/problem.hpp"

namespace pcrank {

/// Objects sharing the match count against every outside object.
struct Macrovertex {
  std::vector<Index> members;
  /// (k, c_k) for each outside object k, where c_k = m_ik for any member i.
  std::vector<std::pair<Index, Count>> outside;
};

/// Depends on M only. Throws std::invalid_argument for an index out of range.
bool is_macrovertex(const RankingProblem& problem, std::span<const Index> members);

/// Nontrivial macrovertices (2 <= |V| <= n-1) by size, then lexicographically.
/// Throws std::invalid_argument for n > 20.
std::vector<Macrovertex> find_macrovertices(const RankingProblem& problem);

/// p and p' differ in one pair inside V; k, l lie outside V.
AxiomReport check_mvi_instance(const Method& method, const RankingProblem& p, const RankingProblem& p_prime,
                               std::span<const Index> members, Index k, Index l);

/// p and p' differ in one pair outside V; i, j lie inside V.
AxiomReport check_mva_instance(const Method& method, const RankingProblem& p, const RankingProblem& p_prime,
                               std::span<const Index> members, Index i, Index j);

/// Macrovertices in find order, then perturbed pairs {a < b} (inside V for
/// MVI, outside for MVA) with the IIM perturbation caps, then target pairs.
/// Throws PreconditionError when the problem has no nontrivial macrovertex.
AxiomReport search_mv_violation(const Method& method, const RankingProblem& p, Axiom which,
                                std::uint64_t budget = unlimited_budget);

}  // namespace pcrank
