#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcrank/matrix.hpp"
#include "pcrank/rational.hpp"

namespace pcrank {

using Index = std::size_t;
using Count = std::int64_t;

/// Raised when matrices do not describe a valid ranking problem. The
/// offending cell, when there is one, is reported 0-based through `cell()`
/// and 1-based in the message.
class InvalidProblem : public std::invalid_argument {
 public:
  explicit InvalidProblem(const std::string& what,
                          std::optional<std::pair<Index, Index>> cell = std::nullopt);
  const std::optional<std::pair<Index, Index>>& cell() const { return cell_; }

 private:
  std::optional<std::pair<Index, Index>> cell_;
};

/// Objects 0..n-1 with a skew-symmetric results matrix R and a symmetric
/// matches matrix M, |r_ij| <= m_ij. Immutable once built.
class RankingProblem {
 public:
  /// Validates every invariant and throws InvalidProblem on the first breach.
  static RankingProblem from_results_matches(Matrix<Rational> results, Matrix<Count> matches);

  /// R = T - T^T, M = T + T^T. Requires t_ii = 0, t_ij >= 0 and integral
  /// t_ij + t_ji.
  static RankingProblem from_tournament(const Matrix<Rational>& tournament);

  /// n objects, no comparisons.
  static RankingProblem empty(Index n);

  Index size() const { return results_.rows(); }
  const Rational& result(Index i, Index j) const { return results_(i, j); }
  Count matches(Index i, Index j) const { return matches_(i, j); }
  const Matrix<Rational>& results() const { return results_; }
  const Matrix<Count>& matches() const { return matches_; }

  /// T = (R + M) / 2.
  Matrix<Rational> tournament() const;

  Count degree(Index i) const;
  Count max_multiplicity() const;
  bool has_integer_results() const;

  /// Stable 64-bit hash of (n, R, M).
  std::uint64_t fingerprint() const;

  /// Copy with the comparison between k and l replaced by (r_kl, m_kl).
  RankingProblem with_pair(Index k, Index l, const Rational& r_kl, Count m_kl) const;

  /// (N, -R, M).
  RankingProblem negated() const;

  /// Relabels object i as sigma[i]; sigma must be a permutation of 0..n-1.
  RankingProblem permuted(std::span<const Index> sigma) const;

  friend bool operator==(const RankingProblem& a, const RankingProblem& b) {
    return a.results_ == b.results_ && a.matches_ == b.matches_;
  }

 private:
  RankingProblem(Matrix<Rational> results, Matrix<Count> matches)
      : results_(std::move(results)), matches_(std::move(matches)) {}

  Matrix<Rational> results_;
  Matrix<Count> matches_;
};

struct ClassFlags {
  bool balanced = false;
  bool round_robin = false;
  bool unweighted = false;  // max multiplicity is exactly 1
  bool extremal = false;
  bool connected = false;
};

ClassFlags classify(const RankingProblem& problem);

struct ComparisonMultigraph {
  Index vertex_count = 0;
  std::vector<Count> degrees;
  Count max_multiplicity = 0;
  /// Components ordered by smallest member; members ascending.
  std::vector<std::vector<Index>> components;
  std::vector<Index> component_of;
};

ComparisonMultigraph multigraph(const RankingProblem& problem);

using LaplacianMatrix = Matrix<Count>;

/// l_ij = -m_ij off the diagonal, l_ii = d_i.
LaplacianMatrix laplacian(const RankingProblem& problem);

/// (N, R + R', M + M'). Throws std::invalid_argument on size mismatch.
RankingProblem sum_problems(const RankingProblem& a, const RankingProblem& b);

/// Unordered pairs {i < j} whose comparison differs between a and b.
std::vector<std::pair<Index, Index>> differing_pairs(const RankingProblem& a, const RankingProblem& b);

/// Unweighted layers (m_ij^(p) in {0,1}) summing to a parent problem.
struct UnweightedDecomposition {
  std::vector<RankingProblem> layers;
  std::uint64_t parent_fingerprint = 0;
};

/// Layer p holds pair (i,j) iff p < m_ij; results are filled with sign(r_ij)
/// in the first |r_ij| of those layers and zero elsewhere. Requires integer R.
UnweightedDecomposition canonical_unweighted_decomposition(const RankingProblem& problem);

/// Re-sums the layers and compares with `parent`; also checks every layer
/// is unweighted in the {0,1} sense.
bool is_decomposition_of(const UnweightedDecomposition& decomposition, const RankingProblem& parent);

}  // namespace pcrank
