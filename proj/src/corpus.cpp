#include "pcrank/corpus.hpp"

#include "pcrank/methods.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace pcrank {

namespace {

Count draw(CorpusRng& rng, Count lo, Count hi) {
  return lo + static_cast<Count>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Builder {
  explicit Builder(Index n) : r(Matrix<Rational>::square(n)), m(Matrix<Count>::square(n)) {}

  void set(Index a, Index b, const Rational& result, Count matches) {
    r(a, b) = result;
    r(b, a) = -result;
    m(a, b) = m(b, a) = matches;
  }

  void set_random(CorpusRng& rng, Index a, Index b, Count matches) {
    set(a, b, Rational(static_cast<long>(draw(rng, -matches, matches))), matches);
  }

  RankingProblem done() { return RankingProblem::from_results_matches(std::move(r), std::move(m)); }

  Matrix<Rational> r;
  Matrix<Count> m;
};

/// Random tree over 0..n-1: each vertex after the first attaches to an earlier one.
std::vector<std::pair<Index, Index>> spanning_tree(CorpusRng& rng, Index n) {
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  for (Index t = n; t > 1; --t) std::swap(order[t - 1], order[rng() % t]);
  std::vector<std::pair<Index, Index>> edges;
  for (Index t = 1; t < n; ++t) edges.emplace_back(order[t], order[rng() % t]);
  return edges;
}

}  // namespace

RankingProblem random_problem(CorpusRng& rng, Index n, Count max_multiplicity, unsigned density_percent) {
  Builder b(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (rng() % 100 < density_percent) b.set_random(rng, i, j, draw(rng, 1, max_multiplicity));
    }
  }
  return b.done();
}

RankingProblem random_connected_problem(CorpusRng& rng, Index n, Count max_multiplicity, unsigned density_percent) {
  Builder b(n);
  for (const auto& [x, y] : spanning_tree(rng, n)) b.set_random(rng, x, y, draw(rng, 1, max_multiplicity));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (b.m(i, j) == 0 && rng() % 100 < density_percent) b.set_random(rng, i, j, draw(rng, 1, max_multiplicity));
    }
  }
  return b.done();
}

RankingProblem random_generic_connected_problem(CorpusRng& rng, Index n, Count max_multiplicity) {
  Builder b(n);
  auto set_generic = [&](Index x, Index y) {
    const Count m = draw(rng, 1, max_multiplicity);
    const Count q = draw(rng, 2, 6);
    const Count p = draw(rng, -m * q, m * q);
    b.set(x, y, Rational(static_cast<long>(p), static_cast<unsigned long>(q)), m);
    b.r(x, y).canonicalize();
    b.r(y, x).canonicalize();
  };
  for (const auto& [x, y] : spanning_tree(rng, n)) set_generic(x, y);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (b.m(i, j) == 0 && rng() % 100 < 40) set_generic(i, j);
    }
  }
  return b.done();
}

RankingProblem random_round_robin(CorpusRng& rng, Index n, Count m) {
  Builder b(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) b.set_random(rng, i, j, m);
  }
  return b.done();
}

RankingProblem random_planted_macrovertex(CorpusRng& rng, Index n, Index size, Count max_multiplicity) {
  Builder b(n);
  for (Index k = size; k < n; ++k) {
    const Count c = draw(rng, 0, max_multiplicity);
    for (Index i = 0; i < size; ++i) {
      if (c > 0) b.set_random(rng, i, k, c);
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool crossing = (i < size) != (j < size);
      if (!crossing && rng() % 100 < 60) b.set_random(rng, i, j, draw(rng, 1, max_multiplicity));
    }
  }
  return b.done();
}

std::vector<RankingProblem> standard_corpus(std::uint64_t seed, std::size_t count) {
  CorpusRng rng(seed);
  std::vector<RankingProblem> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const Index n = static_cast<Index>(draw(rng, 4, 7));
    const Count m = draw(rng, 1, 3);
    switch (t % 4) {
      case 0: out.push_back(random_problem(rng, n, m, 50)); break;
      case 1: out.push_back(random_connected_problem(rng, n, m, 40)); break;
      case 2: out.push_back(random_round_robin(rng, n, m)); break;
      default: out.push_back(random_planted_macrovertex(rng, n, static_cast<Index>(draw(rng, 2, n - 1)), m)); break;
    }
  }
  return out;
}

std::vector<RankingProblem> tie_free_corpus(std::uint64_t seed, std::size_t count) {
  CorpusRng rng(seed);
  auto distinct = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  std::vector<RankingProblem> out;
  while (out.size() < count) {
    const Index n = static_cast<Index>(draw(rng, 3, 8));
    RankingProblem p = random_generic_connected_problem(rng, n, draw(rng, 1, 3));
    if (distinct(row_sum(p).values) && distinct(least_squares(p).values)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pcrank
