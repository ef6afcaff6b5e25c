#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pcrank/problem.hpp"

namespace pcrank {

/// Reproducible generators. Draws use `rng() % k` so sequences do not depend
/// on the standard library's distribution implementations.
using CorpusRng = std::mt19937_64;

/// Each pair is compared with probability density_percent / 100, with
/// multiplicity uniform in [1, max_multiplicity] and integer result uniform
/// in [-m, m].
RankingProblem random_problem(CorpusRng& rng, Index n, Count max_multiplicity, unsigned density_percent);

/// As random_problem, plus a random spanning tree so the problem is connected.
RankingProblem random_connected_problem(CorpusRng& rng, Index n, Count max_multiplicity, unsigned density_percent);

/// Connected problem whose results are rationals with random denominators
/// in [2, 6].
RankingProblem random_generic_connected_problem(CorpusRng& rng, Index n, Count max_multiplicity);

/// Every pair compared exactly m times, integer results.
RankingProblem random_round_robin(CorpusRng& rng, Index n, Count m);

/// Objects 0..size-1 form a macrovertex: they share a random multiplicity
/// against each outside object; all other pairs are random.
RankingProblem random_planted_macrovertex(CorpusRng& rng, Index n, Index size, Count max_multiplicity);

/// Connected rational problems, n in [3, 8], m <= 3, redrawn until neither
/// the row sums nor the least-squares ratings contain a tie.
std::vector<RankingProblem> tie_free_corpus(std::uint64_t seed, std::size_t count);

/// Mixed integer corpus used by the property suites: n in [4, 7], m <= 3.
std::vector<RankingProblem> standard_corpus(std::uint64_t seed, std::size_t count);

}  // namespace pcrank
