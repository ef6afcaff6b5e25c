#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcrank/problem.hpp"
#include "pcrank/rational.hpp"
#include "pcrank/weak_order.hpp"

namespace pcrank {

enum class MethodKind { row_sum, generalized_row_sum, least_squares };

/// A scoring procedure; `epsilon` is only meaningful for the generalized row sum.
struct Method {
  MethodKind kind = MethodKind::row_sum;
  Rational epsilon = 0;

  static Method row_sum() { return {MethodKind::row_sum, 0}; }
  /// Throws std::invalid_argument unless epsilon > 0.
  static Method generalized_row_sum(const Rational& epsilon);
  static Method least_squares() { return {MethodKind::least_squares, 0}; }

  /// "rowsum", "grs(1/10)", "ls".
  std::string name() const;
  /// Symbol used when printing a rating vector: s, x or q.
  const char* symbol() const;

  friend bool operator==(const Method&, const Method&) = default;
};

struct RatingVector {
  std::vector<Rational> values;
  Method method;
  std::uint64_t problem_fingerprint = 0;
  /// Set by least squares on unconnected problems: ratings of different
  /// components are compared by raw value, which is a convention.
  bool cross_component_conventional = false;
};

/// s = R e.
RatingVector row_sum(const RankingProblem& problem);

/// Unique x with (I + eps L) x = (1 + eps m n) s. Throws on eps <= 0.
RatingVector generalized_row_sum(const RankingProblem& problem, const Rational& epsilon);

/// Per connected component C: L|C q|C = s|C with sum over C of q = 0.
RatingVector least_squares(const RankingProblem& problem);

RatingVector evaluate(const Method& method, const RankingProblem& problem);

/// Levels by strictly decreasing rating; equal values share a level.
WeakOrder induce_ranking(const std::vector<Rational>& ratings);
inline WeakOrder induce_ranking(const RatingVector& ratings) { return induce_ranking(ratings.values); }

}  // namespace pcrank
