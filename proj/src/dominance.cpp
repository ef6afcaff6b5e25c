#include "pcrank/dominance.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace pcrank {

bool exceeds_limits(const RankingProblem& problem, const SearchLimits& limits) {
  return problem.size() > limits.max_objects || problem.max_multiplicity() > limits.max_multiplicity;
}

namespace {

struct BudgetHit {};

struct Unit {
  Index opponent;
  int result;
};

/// Multisets of c results in {-1,0,1} netting r, least spread (canonical) first.
std::vector<std::vector<int>> result_splits(Count c, long r) {
  std::vector<std::vector<int>> out;
  for (long plus = std::max(r, 0L); 2 * plus - r <= c; ++plus) {
    const long minus = plus - r;
    std::vector<int> split;
    split.insert(split.end(), static_cast<std::size_t>(plus), 1);
    split.insert(split.end(), static_cast<std::size_t>(c - plus - minus), 0);
    split.insert(split.end(), static_cast<std::size_t>(minus), -1);
    out.push_back(std::move(split));
  }
  return out;
}

long integer_result(const RankingProblem& problem, Index a, Index b) {
  return problem.result(a, b).get_num().get_si();
}

/// One placed comparison of a layer: i meets k with result ri, j meets l
/// with result rj, and g(k) = l.
struct Placement {
  Index k;
  int ri;
  Index l;
  int rj;
};

class PremiseSearch {
 public:
  PremiseSearch(const RankingProblem& problem, const WeakOrder& order, Index i, Index j, const SearchLimits& limits)
      : problem_(problem), order_(order), i_(i), j_(j), limits_(limits), layers_(problem.max_multiplicity()) {
    for (Index k = 0; k < problem.size(); ++k) {
      if (k != i && problem.matches(i, k) > 0) i_opponents_.push_back(k);
      if (k != j && problem.matches(j, k) > 0) j_opponents_.push_back(k);
    }
    coupled_ = problem.matches(i, j);
  }

  std::uint64_t candidates() const { return candidates_; }

  std::optional<DominanceWitness> run() {
    // Split slots: every opponent of i, then every opponent of j except i,
    // whose split is the mirror of i's split against j.
    std::vector<std::vector<std::vector<int>>> slots;
    for (Index k : i_opponents_) slots.push_back(result_splits(problem_.matches(i_, k), integer_result(problem_, i_, k)));
    std::vector<Index> j_free;
    for (Index l : j_opponents_) {
      if (l == i_) continue;
      j_free.push_back(l);
      slots.push_back(result_splits(problem_.matches(j_, l), integer_result(problem_, j_, l)));
    }

    std::vector<std::size_t> choice(slots.size(), 0);
    for (;;) {
      tick();
      std::vector<Unit> iu;
      std::vector<Unit> ju;
      std::vector<int> coupled_results;
      for (std::size_t a = 0; a < i_opponents_.size(); ++a) {
        for (int r : slots[a][choice[a]]) iu.push_back({i_opponents_[a], r});
        if (i_opponents_[a] == j_) coupled_results = slots[a][choice[a]];
      }
      for (std::size_t b = 0; b < j_free.size(); ++b) {
        for (int r : slots[i_opponents_.size() + b][choice[i_opponents_.size() + b]]) ju.push_back({j_free[b], r});
      }
      for (int r : coupled_results) ju.push_back({i_, -r});
      std::sort(ju.begin(), ju.end(), [](const Unit& x, const Unit& y) {
        return std::tie(x.opponent, y.result) < std::tie(y.opponent, x.result);
      });

      if (auto matching = perfect_matching(iu, ju)) {
        if (coupled_ == 0 || layers_ == 1) return colour_layers(iu, ju, *matching);
        if (auto w = layered_search(coupled_results, iu, ju)) return w;
      }

      std::size_t pos = slots.size();
      while (pos > 0) {
        --pos;
        if (++choice[pos] < slots[pos].size()) break;
        choice[pos] = 0;
        if (pos == 0) return std::nullopt;
      }
      if (slots.empty()) return std::nullopt;
    }
  }

 private:
  void tick() {
    if (++candidates_ > limits_.max_candidates) throw BudgetHit{};
  }

  bool admissible(Index k, int ri, Index l, int rj) const { return ri >= rj && order_.weakly_above(k, l); }

  /// Kuhn's augmenting paths; match[u] is the j-unit paired with i-unit u.
  std::optional<std::vector<std::size_t>> perfect_matching(const std::vector<Unit>& iu, const std::vector<Unit>& ju) {
    if (iu.size() != ju.size()) return std::nullopt;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(ju.size(), none);
    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t u) -> bool {
      for (std::size_t v = 0; v < ju.size(); ++v) {
        if (seen[v] || !admissible(iu[u].opponent, iu[u].result, ju[v].opponent, ju[v].result)) continue;
        seen[v] = 1;
        if (owner[v] == none || self(self, owner[v])) {
          owner[v] = u;
          return true;
        }
      }
      return false;
    };
    for (std::size_t u = 0; u < iu.size(); ++u) {
      seen.assign(ju.size(), 0);
      if (!augment(augment, u)) return std::nullopt;
    }
    std::vector<std::size_t> match(iu.size());
    for (std::size_t v = 0; v < ju.size(); ++v) match[owner[v]] = v;
    return match;
  }

  /// Splits the matched pairs into layers by a proper edge colouring of the
  /// bipartite multigraph (opponents of i) x (opponents of j); every vertex
  /// has degree <= m, so m colours suffice.
  DominanceWitness colour_layers(const std::vector<Unit>& iu, const std::vector<Unit>& ju,
                                 const std::vector<std::size_t>& match) {
    const auto colours = static_cast<std::size_t>(layers_);
    auto node_of = [](const std::vector<Index>& opponents, Index v) {
      return static_cast<std::size_t>(std::find(opponents.begin(), opponents.end(), v) - opponents.begin());
    };
    constexpr int free_slot = -1;
    std::vector<std::vector<int>> at_left(i_opponents_.size(), std::vector<int>(colours, free_slot));
    std::vector<std::vector<int>> at_right(j_opponents_.size(), std::vector<int>(colours, free_slot));
    std::vector<std::size_t> left(iu.size()), right(iu.size()), colour(iu.size());
    for (std::size_t e = 0; e < iu.size(); ++e) {
      left[e] = node_of(i_opponents_, iu[e].opponent);
      right[e] = node_of(j_opponents_, ju[match[e]].opponent);
    }
    auto first_free = [&](const std::vector<int>& slots) {
      return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), free_slot) - slots.begin());
    };
    auto assign = [&](std::size_t e, std::size_t c) {
      colour[e] = c;
      at_left[left[e]][c] = static_cast<int>(e);
      at_right[right[e]][c] = static_cast<int>(e);
    };
    for (std::size_t e = 0; e < iu.size(); ++e) {
      const std::size_t alpha = first_free(at_left[left[e]]);
      const std::size_t beta = first_free(at_right[right[e]]);
      if (at_right[right[e]][alpha] == free_slot) {
        assign(e, alpha);
        continue;
      }
      if (at_left[left[e]][beta] == free_slot) {
        assign(e, beta);
        continue;
      }
      // Swap alpha/beta along the alternating path leaving right[e] on alpha.
      std::vector<std::size_t> path;
      std::size_t node = right[e];
      bool on_right = true;
      std::size_t want = alpha;
      for (;;) {
        const int f = on_right ? at_right[node][want] : at_left[node][want];
        if (f == free_slot) break;
        path.push_back(static_cast<std::size_t>(f));
        node = on_right ? left[static_cast<std::size_t>(f)] : right[static_cast<std::size_t>(f)];
        on_right = !on_right;
        want = want == alpha ? beta : alpha;
      }
      for (std::size_t f : path) {
        at_left[left[f]][colour[f]] = free_slot;
        at_right[right[f]][colour[f]] = free_slot;
      }
      for (std::size_t f : path) assign(f, colour[f] == alpha ? beta : alpha);
      assign(e, alpha);
    }

    std::vector<std::vector<Placement>> placed(colours);
    for (std::size_t e = 0; e < iu.size(); ++e) {
      placed[colour[e]].push_back({iu[e].opponent, iu[e].result, ju[match[e]].opponent, ju[match[e]].result});
    }
    return assemble(placed);
  }

  // --- exact layered search, used when i and j share comparisons --------

  using Residual = std::vector<std::array<int, 3>>;  // counts of results -1, 0, +1

  std::optional<DominanceWitness> layered_search(std::vector<int> coupled_results, const std::vector<Unit>& iu,
                                                 const std::vector<Unit>& ju) {
    std::sort(coupled_results.begin(), coupled_results.end(), std::greater<>());
    coupled_results_ = coupled_results;
    free_i_.clear();
    free_j_.clear();
    for (Index k : i_opponents_) {
      if (k != j_) free_i_.push_back(k);
    }
    for (Index l : j_opponents_) {
      if (l != i_) free_j_.push_back(l);
    }
    res_i_.assign(free_i_.size(), {0, 0, 0});
    res_j_.assign(free_j_.size(), {0, 0, 0});
    for (const Unit& u : iu) {
      if (u.opponent != j_) ++res_i_[index_in(free_i_, u.opponent)][u.result + 1];
    }
    for (const Unit& u : ju) {
      if (u.opponent != i_) ++res_j_[index_in(free_j_, u.opponent)][u.result + 1];
    }
    failed_.clear();
    record_.clear();
    if (!search_layer(0)) return std::nullopt;
    return assemble(record_);
  }

  static std::size_t index_in(const std::vector<Index>& v, Index x) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
  }

  static int total(const std::array<int, 3>& r) { return r[0] + r[1] + r[2]; }

  std::string state_key(std::size_t layer) const {
    std::string key(1, static_cast<char>(layer));
    for (const auto& r : res_i_) key.append({static_cast<char>(r[0]), static_cast<char>(r[1]), static_cast<char>(r[2])});
    for (const auto& r : res_j_) key.append({static_cast<char>(r[0]), static_cast<char>(r[1]), static_cast<char>(r[2])});
    return key;
  }

  bool search_layer(std::size_t layer) {
    if (layer == static_cast<std::size_t>(layers_)) return true;
    const std::string key = state_key(layer);
    if (failed_.count(key)) return false;
    layer_ = layer;
    used_j_.assign(free_j_.size(), 0);
    coupled_j_used_ = false;
    current_.clear();
    const bool ok = fill(layer, 0);
    if (!ok) failed_.insert(key);
    return ok;
  }

  int remaining_layers(std::size_t layer) const { return static_cast<int>(layers_) - static_cast<int>(layer); }

  bool has_coupled(std::size_t layer) const { return layer < coupled_results_.size(); }

  /// Slot 0 is i's comparison against j when this layer carries one; the
  /// following slots are the other opponents of i in order.
  bool fill(std::size_t layer, std::size_t slot) {
    tick();
    const std::size_t offset = has_coupled(layer) ? 1 : 0;
    const std::size_t slot_count = offset + free_i_.size();

    // Prune: forced opponents of j still waiting need enough remaining slots.
    {
      int waiting = 0;
      for (std::size_t b = 0; b < free_j_.size(); ++b) {
        if (!used_j_[b] && total(res_j_[b]) == remaining_layers(layer)) ++waiting;
      }
      if (has_coupled(layer) && !coupled_j_used_) ++waiting;
      int open = 0;
      for (std::size_t s = slot; s < slot_count; ++s) {
        if (s < offset || total(res_i_[s - offset]) > 0) ++open;
      }
      if (waiting > open) return false;
    }

    if (slot == slot_count) {
      for (std::size_t b = 0; b < free_j_.size(); ++b) {
        if (!used_j_[b] && total(res_j_[b]) == remaining_layers(layer)) return false;
      }
      if (has_coupled(layer) && !coupled_j_used_) return false;
      // Commit this layer: consumed units were already removed from the
      // residuals when placed.
      record_.push_back(current_);
      const auto saved_used = used_j_;
      const bool saved_coupled = coupled_j_used_;
      const auto saved_current = current_;
      if (search_layer(layer + 1)) return true;
      record_.pop_back();
      layer_ = layer;
      used_j_ = saved_used;
      coupled_j_used_ = saved_coupled;
      current_ = saved_current;
      return false;
    }

    Index k;
    std::vector<int> options;
    bool may_skip;
    if (slot < offset) {
      k = j_;
      options = {coupled_results_[layer]};
      may_skip = false;
    } else {
      const std::size_t a = slot - offset;
      k = free_i_[a];
      const int t = total(res_i_[a]);
      if (t == 0) return fill(layer, slot + 1);
      for (int r = 1; r >= -1; --r) {
        if (res_i_[a][r + 1] > 0) options.push_back(r);
      }
      may_skip = t < remaining_layers(layer);
    }

    for (int ri : options) {
      if (slot >= offset) --res_i_[slot - offset][ri + 1];
      // Partner: j's comparison against i, when carried by this layer.
      if (has_coupled(layer) && !coupled_j_used_) {
        const int rj = -coupled_results_[layer];
        if (admissible(k, ri, i_, rj)) {
          coupled_j_used_ = true;
          current_.push_back({k, ri, i_, rj});
          if (fill(layer, slot + 1)) return true;
          current_.pop_back();
          coupled_j_used_ = false;
        }
      }
      for (std::size_t b = 0; b < free_j_.size(); ++b) {
        if (used_j_[b]) continue;
        for (int rj = 1; rj >= -1; --rj) {
          if (res_j_[b][rj + 1] == 0 || !admissible(k, ri, free_j_[b], rj)) continue;
          used_j_[b] = 1;
          --res_j_[b][rj + 1];
          current_.push_back({k, ri, free_j_[b], rj});
          if (fill(layer, slot + 1)) return true;
          current_.pop_back();
          ++res_j_[b][rj + 1];
          used_j_[b] = 0;
        }
      }
      if (slot >= offset) ++res_i_[slot - offset][ri + 1];
    }
    if (may_skip) return fill(layer, slot + 1);
    return false;
  }

  // --- witness assembly -------------------------------------------------

  DominanceWitness assemble(const std::vector<std::vector<Placement>>& placed) const {
    const Index n = problem_.size();
    const auto canonical = canonical_unweighted_decomposition(problem_);
    std::vector<Matrix<Rational>> r;
    std::vector<Matrix<Count>> m;
    for (const auto& layer : canonical.layers) {
      r.push_back(layer.results());
      m.push_back(layer.matches());
    }
    for (std::size_t p = 0; p < r.size(); ++p) {
      for (Index v = 0; v < n; ++v) {
        for (Index side : {i_, j_}) {
          r[p](side, v) = r[p](v, side) = 0;
          m[p](side, v) = m[p](v, side) = 0;
        }
      }
    }
    auto place = [&](std::size_t p, Index a, Index b, int result) {
      m[p](a, b) = m[p](b, a) = 1;
      r[p](a, b) = result;
      r[p](b, a) = -result;
    };
    DominanceWitness w;
    w.i = i_;
    w.j = j_;
    w.bijections.resize(r.size());
    for (std::size_t p = 0; p < placed.size() && p < r.size(); ++p) {
      for (const Placement& pl : placed[p]) {
        place(p, i_, pl.k, pl.ri);
        place(p, j_, pl.l, pl.rj);
        w.bijections[p].pairs.emplace_back(pl.k, pl.l);
      }
      std::sort(w.bijections[p].pairs.begin(), w.bijections[p].pairs.end());
    }
    w.decomposition.parent_fingerprint = problem_.fingerprint();
    for (std::size_t p = 0; p < r.size(); ++p) {
      w.decomposition.layers.push_back(RankingProblem::from_results_matches(std::move(r[p]), std::move(m[p])));
    }
    return w;
  }

  const RankingProblem& problem_;
  const WeakOrder& order_;
  Index i_;
  Index j_;
  SearchLimits limits_;
  Count layers_;
  Count coupled_ = 0;
  std::vector<Index> i_opponents_;
  std::vector<Index> j_opponents_;
  std::uint64_t candidates_ = 0;

  // layered search state
  std::vector<int> coupled_results_;
  std::vector<Index> free_i_;
  std::vector<Index> free_j_;
  Residual res_i_;
  Residual res_j_;
  std::set<std::string> failed_;
  std::vector<std::vector<Placement>> record_;
  std::vector<Placement> current_;
  std::vector<char> used_j_;
  bool coupled_j_used_ = false;
  std::size_t layer_ = 0;
};

std::vector<std::size_t> opponent_levels(const RankingProblem& problem, const WeakOrder& order, Index i) {
  std::vector<std::size_t> levels;
  for (Index k = 0; k < problem.size(); ++k) {
    if (k == i) continue;
    levels.insert(levels.end(), static_cast<std::size_t>(problem.matches(i, k)), order.level(k));
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

Rational row_total(const RankingProblem& problem, Index i) {
  Rational s = 0;
  for (Index k = 0; k < problem.size(); ++k) s += problem.result(i, k);
  return s;
}

}  // namespace

DominanceResult sc_dominance(const RankingProblem& problem, const WeakOrder& order, Index i, Index j,
                             Strictness strictness, const SearchLimits& limits) {
  const Index n = problem.size();
  if (i >= n || j >= n || i == j) throw std::invalid_argument("sc_dominance needs two distinct objects");
  if (order.size() != n) throw std::invalid_argument("order and problem differ in size");
  if (!problem.has_integer_results()) throw InvalidProblem("self-consistency search requires integer results");

  DominanceResult result;
  if (exceeds_limits(problem, limits)) {
    result.budget_exceeded = true;
    return result;
  }
  if (problem.degree(i) != problem.degree(j)) return result;
  // Any witness sums to s_i >= s_j and pairs opponents level by level.
  if (row_total(problem, i) < row_total(problem, j)) return result;
  const auto li = opponent_levels(problem, order, i);
  const auto lj = opponent_levels(problem, order, j);
  for (std::size_t t = 0; t < li.size(); ++t) {
    if (li[t] > lj[t]) return result;
  }

  PremiseSearch search(problem, order, i, j, limits);
  try {
    result.witness = search.run();
  } catch (const BudgetHit&) {
    result.candidates = search.candidates();
    result.budget_exceeded = true;
    return result;
  }
  result.candidates = search.candidates();
  if (result.witness) {
    // s_i and the multiset of opponent levels are fixed by (R, M), so every
    // witness agrees on strictness; the found one decides it.
    result.verdict = verify_dominance_witness(problem, order, *result.witness, strictness);
    if (result.verdict == Dominance::none) throw std::logic_error("premise search produced an invalid witness");
  }
  return result;
}

Dominance verify_dominance_witness(const RankingProblem& problem, const WeakOrder& order,
                                   const DominanceWitness& witness, Strictness strictness) {
  const Index n = problem.size();
  if (witness.i >= n || witness.j >= n || witness.i == witness.j || order.size() != n) return Dominance::none;
  if (!is_decomposition_of(witness.decomposition, problem)) return Dominance::none;
  if (witness.decomposition.layers.size() != static_cast<std::size_t>(problem.max_multiplicity())) {
    return Dominance::none;
  }
  if (witness.bijections.size() != witness.decomposition.layers.size()) return Dominance::none;

  bool strict = false;
  for (std::size_t p = 0; p < witness.bijections.size(); ++p) {
    const RankingProblem& layer = witness.decomposition.layers[p];
    std::vector<char> in_domain(n, 0), in_range(n, 0);
    for (const auto& [k, l] : witness.bijections[p].pairs) {
      if (k >= n || l >= n || in_domain[k] || in_range[l]) return Dominance::none;
      if (layer.matches(witness.i, k) != 1 || layer.matches(witness.j, l) != 1) return Dominance::none;
      in_domain[k] = 1;
      in_range[l] = 1;
      const Rational& ri = layer.result(witness.i, k);
      const Rational& rj = layer.result(witness.j, l);
      if (ri < rj || !order.weakly_above(k, l)) return Dominance::none;
      if (ri > rj) strict = true;
      if (strictness == Strictness::results_or_opponents && order.strictly_above(k, l)) strict = true;
    }
    for (Index v = 0; v < n; ++v) {
      if ((layer.matches(witness.i, v) == 1) != static_cast<bool>(in_domain[v])) return Dominance::none;
      if ((layer.matches(witness.j, v) == 1) != static_cast<bool>(in_range[v])) return Dominance::none;
    }
  }
  return strict ? Dominance::strict : Dominance::weak;
}

}  // namespace pcrank
