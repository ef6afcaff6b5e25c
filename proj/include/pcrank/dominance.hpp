#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pcrank/problem.hpp"
#include "pcrank/weak_order.hpp"

namespace pcrank {

/// Strength of the self-consistency premise "i is at least as good as j".
enum class Dominance { none, weak, strict };

/// Which inequalities make the premise strict: results or stronger
/// opponents (self-consistency), or results only (weak self-consistency).
enum class Strictness { results_or_opponents, results_only };

struct SearchLimits {
  Index max_objects = 8;
  Count max_multiplicity = 3;
  std::uint64_t max_candidates = 1'000'000;
};

bool exceeds_limits(const RankingProblem& problem, const SearchLimits& limits);

/// Opponent map of one layer: (k, g(k)) with k ascending.
struct LayerBijection {
  std::vector<std::pair<Index, Index>> pairs;
};

/// A decomposition into unweighted layers plus one bijection O_i^(p) -> O_j^(p)
/// per layer, every pair satisfying r_ik^(p) >= r_jg(k)^(p) and k ⪰ g(k).
struct DominanceWitness {
  Index i = 0;
  Index j = 0;
  UnweightedDecomposition decomposition;
  std::vector<LayerBijection> bijections;
};

struct DominanceResult {
  Dominance verdict = Dominance::none;
  bool budget_exceeded = false;
  std::uint64_t candidates = 0;
  std::optional<DominanceWitness> witness;
};

/// Decides whether the premise of self-consistency holds for (i, j) under
/// `order`, searching decompositions whose layer results lie in {-1, 0, 1}.
/// `none` is therefore relative to that space. Objects of different degree
/// are never comparable. Requires integer results.
DominanceResult sc_dominance(const RankingProblem& problem, const WeakOrder& order, Index i, Index j,
                             Strictness strictness = Strictness::results_or_opponents,
                             const SearchLimits& limits = {});

/// Re-checks a witness from scratch against the problem and order. Returns
/// `none` when the witness is malformed or any inequality fails.
Dominance verify_dominance_witness(const RankingProblem& problem, const WeakOrder& order,
                                   const DominanceWitness& witness, Strictness strictness);

}  // namespace pcrank
