#include "pcrank/methods.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcrank/linear_solve.hpp"

namespace pcrank {

Method Method::generalized_row_sum(const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("generalized row sum needs epsilon > 0");
  Rational e(epsilon);
  e.canonicalize();
  return {MethodKind::generalized_row_sum, e};
}

std::string Method::name() const {
  switch (kind) {
    case MethodKind::row_sum: return "rowsum";
    case MethodKind::generalized_row_sum: return "grs(" + to_string(epsilon) + ")";
    case MethodKind::least_squares: return "ls";
  }
  return "?";
}

const char* Method::symbol() const {
  switch (kind) {
    case MethodKind::row_sum: return "s";
    case MethodKind::generalized_row_sum: return "x";
    case MethodKind::least_squares: return "q";
  }
  return "?";
}

namespace {

std::vector<Rational> row_sums(const RankingProblem& problem) {
  std::vector<Rational> s(problem.size());
  for (Index i = 0; i < problem.size(); ++i) {
    for (Index j = 0; j < problem.size(); ++j) s[i] += problem.result(i, j);
  }
  return s;
}

}  // namespace

RatingVector row_sum(const RankingProblem& problem) {
  return {row_sums(problem), Method::row_sum(), problem.fingerprint(), false};
}

RatingVector generalized_row_sum(const RankingProblem& problem, const Rational& epsilon) {
  const Method method = Method::generalized_row_sum(epsilon);
  const Index n = problem.size();
  const LaplacianMatrix l = laplacian(problem);
  Matrix<Rational> a = Matrix<Rational>::square(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = method.epsilon * l(i, j) + (i == j ? 1 : 0);
  }
  const Rational scale = 1 + method.epsilon * problem.max_multiplicity() * static_cast<long>(n);
  std::vector<Rational> rhs = row_sums(problem);
  for (auto& v : rhs) v *= scale;
  return {solve_exact(a, rhs), method, problem.fingerprint(), false};
}

RatingVector least_squares(const RankingProblem& problem) {
  const Index n = problem.size();
  const auto graph = multigraph(problem);
  const LaplacianMatrix l = laplacian(problem);
  const std::vector<Rational> s = row_sums(problem);
  std::vector<Rational> q(n);
  for (const auto& component : graph.components) {
    const Index k = component.size();
    if (k == 1) continue;
    // The last Laplacian row is implied by the others (rows sum to zero and
    // so does s over a component); it is replaced by the normalization.
    Matrix<Rational> a = Matrix<Rational>::square(k);
    std::vector<Rational> rhs(k);
    for (Index r = 0; r + 1 < k; ++r) {
      for (Index c = 0; c < k; ++c) a(r, c) = l(component[r], component[c]);
      rhs[r] = s[component[r]];
    }
    for (Index c = 0; c < k; ++c) a(k - 1, c) = 1;
    const auto solution = solve_exact(a, rhs);
    for (Index r = 0; r < k; ++r) q[component[r]] = solution[r];
  }
  return {std::move(q), Method::least_squares(), problem.fingerprint(), graph.components.size() > 1};
}

RatingVector evaluate(const Method& method, const RankingProblem& problem) {
  switch (method.kind) {
    case MethodKind::row_sum: return row_sum(problem);
    case MethodKind::generalized_row_sum: return generalized_row_sum(problem, method.epsilon);
    case MethodKind::least_squares: return least_squares(problem);
  }
  throw std::logic_error("unknown method");
}

WeakOrder induce_ranking(const std::vector<Rational>& ratings) {
  std::vector<Rational> distinct = ratings;
  std::sort(distinct.begin(), distinct.end(), [](const Rational& a, const Rational& b) { return a > b; });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> levels;
  levels.reserve(ratings.size());
  for (const auto& v : ratings) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), v,
                               [](const Rational& a, const Rational& b) { return a > b; });
    levels.push_back(static_cast<std::size_t>(it - distinct.begin()));
  }
  return WeakOrder::from_levels(levels);
}

}  // namespace pcrank
