#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcrank/dominance.hpp"
#include "pcrank/methods.hpp"
#include "pcrank/problem.hpp"
#include "pcrank/weak_order.hpp"

namespace pcrank {

enum class Axiom { iim, sc, wsc, mva, mvi };

const char* axiom_name(Axiom axiom);

enum class Verdict { satisfied, violated, budget_exceeded };

const char* verdict_name(Verdict verdict);

/// Raised when an instance check is handed inputs outside its premises.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two problems differing in one pair, with ratings on both and the target
/// pair whose order flipped.
struct PerturbationWitness {
  RankingProblem original;
  RankingProblem perturbed;
  std::pair<Index, Index> changed;
  std::pair<Index, Index> target;
  std::vector<Rational> before;
  std::vector<Rational> after;
  /// Macrovertex involved (MVA/MVI only).
  std::vector<Index> macrovertex;
};

/// A pair (i, j) whose premise holds under the order while the conclusion fails.
struct DominanceViolation {
  RankingProblem problem;
  Index i = 0;
  Index j = 0;
  Dominance premise = Dominance::none;
  WeakOrder order;
  DominanceWitness witness;
};

struct AxiomReport {
  Axiom axiom = Axiom::iim;
  /// Method name, or "order" when a candidate weak order was checked.
  std::string subject;
  Verdict verdict = Verdict::satisfied;
  std::uint64_t instances_checked = 0;
  /// False when the instance budget stopped the search early.
  bool search_complete = true;
  /// Premise-search candidates consumed (SC/WSC).
  std::uint64_t candidates = 0;
  /// Ratings of the checked problem (SC/WSC with a method).
  std::vector<Rational> ratings;
  std::optional<PerturbationWitness> perturbation;
  std::optional<DominanceViolation> dominance;
  std::string note;
};

inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

/// True iff the order of (i, j) under `before` is not kept under `after`.
bool order_flipped(const std::vector<Rational>& before, const std::vector<Rational>& after, Index i, Index j);

AxiomReport check_iim_instance(const Method& method, const RankingProblem& p, const RankingProblem& p_prime, Index i,
                               Index j);

/// Single-pair perturbations in the order: pair {k < l} lexicographic, then
/// m' in {m-1, m, m+1}, then integer r' ascending in [-m', m']; for each,
/// disjoint targets {i < j} lexicographic. `budget` caps instances.
AxiomReport search_iim_violation(const Method& method, const RankingProblem& p,
                                 std::uint64_t budget = unlimited_budget);

/// Every ordered pair of equal degree is tested against `order`; the first
/// violation in lexicographic (i, j) order is reported.
AxiomReport check_order_consistency(const RankingProblem& problem, const WeakOrder& order, Strictness strictness,
                                    const SearchLimits& limits = {});

AxiomReport check_sc(const Method& method, const RankingProblem& problem, const SearchLimits& limits = {});
AxiomReport check_wsc(const Method& method, const RankingProblem& problem, const SearchLimits& limits = {});

/// Same checks on precomputed ratings; throws std::invalid_argument when the
/// ratings belong to another problem.
AxiomReport check_sc(const RatingVector& ratings, const RankingProblem& problem, const SearchLimits& limits = {});
AxiomReport check_wsc(const RatingVector& ratings, const RankingProblem& problem, const SearchLimits& limits = {});

bool order_is_self_consistent(const RankingProblem& problem, const WeakOrder& order, const SearchLimits& limits = {});

struct ScEnumeration {
  std::vector<WeakOrder> orders;
  /// Set when some premise search hit its limit; `orders` is then incomplete.
  bool budget_exceeded = false;
};

/// Weak orders under which no SC implication fails, in level-vector order.
/// Throws std::invalid_argument for n > 6.
ScEnumeration enumerate_sc_rankings(const RankingProblem& problem, const SearchLimits& limits = {});

/// Re-evaluates a violation from its witness alone.
bool recheck_violation(const AxiomReport& report, const Method& method);

}  // namespace pcrank
