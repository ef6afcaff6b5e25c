#include "pcrank/problem.hpp"

#include <algorithm>
#include <numeric>

namespace pcrank {

namespace {

std::string at(Index i, Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

void fnv_mix(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}

}  // namespace

InvalidProblem::InvalidProblem(const std::string& what, std::optional<std::pair<Index, Index>> cell)
    : std::invalid_argument(what), cell_(cell) {}

RankingProblem RankingProblem::from_results_matches(Matrix<Rational> results, Matrix<Count> matches) {
  if (!results.is_square() || !matches.is_square()) throw InvalidProblem("matrices must be square");
  if (results.rows() != matches.rows()) throw InvalidProblem("results and matches matrices differ in size");
  if (results.rows() == 0) throw InvalidProblem("a ranking problem needs at least one object");
  const Index n = results.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) results(i, j).canonicalize();
  }
  for (Index i = 0; i < n; ++i) {
    if (results(i, i) != 0) throw InvalidProblem("nonzero diagonal result at " + at(i, i), std::pair{i, i});
    if (matches(i, i) != 0) throw InvalidProblem("nonzero diagonal match count at " + at(i, i), std::pair{i, i});
    for (Index j = 0; j < n; ++j) {
      if (matches(i, j) < 0) throw InvalidProblem("negative match count at " + at(i, j), std::pair{i, j});
      if (matches(i, j) != matches(j, i)) throw InvalidProblem("symmetry of M violated at " + at(i, j), std::pair{i, j});
      if (results(i, j) != -results(j, i)) throw InvalidProblem("skew-symmetry violated at " + at(i, j), std::pair{i, j});
      if (abs(results(i, j)) > matches(i, j)) {
        throw InvalidProblem("|r_ij| <= m_ij violated at " + at(i, j), std::pair{i, j});
      }
    }
  }
  return RankingProblem(std::move(results), std::move(matches));
}

RankingProblem RankingProblem::from_tournament(const Matrix<Rational>& tournament) {
  if (!tournament.is_square()) throw InvalidProblem("tournament matrix must be square");
  const Index n = tournament.rows();
  Matrix<Rational> results = Matrix<Rational>::square(n);
  Matrix<Count> matches = Matrix<Count>::square(n);
  for (Index i = 0; i < n; ++i) {
    if (tournament(i, i) != 0) throw InvalidProblem("nonzero diagonal t_ii at " + at(i, i), std::pair{i, i});
    for (Index j = 0; j < n; ++j) {
      if (tournament(i, j) < 0) throw InvalidProblem("negative t_ij at " + at(i, j), std::pair{i, j});
      Rational total = tournament(i, j) + tournament(j, i);
      if (!is_integer(total)) throw InvalidProblem("t_ij + t_ji is not an integer at " + at(i, j), std::pair{i, j});
      if (!total.get_num().fits_slong_p()) throw InvalidProblem("match count too large at " + at(i, j), std::pair{i, j});
      matches(i, j) = total.get_num().get_si();
      results(i, j) = tournament(i, j) - tournament(j, i);
    }
  }
  return from_results_matches(std::move(results), std::move(matches));
}

RankingProblem RankingProblem::empty(Index n) {
  return from_results_matches(Matrix<Rational>::square(n), Matrix<Count>::square(n));
}

Matrix<Rational> RankingProblem::tournament() const {
  const Index n = size();
  Matrix<Rational> t = Matrix<Rational>::square(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) t(i, j) = (results_(i, j) + matches_(i, j)) / 2;
  }
  return t;
}

Count RankingProblem::degree(Index i) const {
  auto row = matches_.row(i);
  return std::accumulate(row.begin(), row.end(), Count{0});
}

Count RankingProblem::max_multiplicity() const {
  const auto& d = matches_.data();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool RankingProblem::has_integer_results() const {
  return std::all_of(results_.data().begin(), results_.data().end(),
                     [](const Rational& r) { return is_integer(r); });
}

std::uint64_t RankingProblem::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv_mix(h, std::to_string(size()));
  for (const auto& r : results_.data()) fnv_mix(h, to_string(r));
  for (Count m : matches_.data()) fnv_mix(h, std::to_string(m));
  return h;
}

RankingProblem RankingProblem::with_pair(Index k, Index l, const Rational& r_kl, Count m_kl) const {
  if (k >= size() || l >= size() || k == l) throw std::invalid_argument("with_pair needs two distinct objects");
  Matrix<Rational> r = results_;
  Matrix<Count> m = matches_;
  r(k, l) = r_kl;
  r(l, k) = -r_kl;
  m(k, l) = m(l, k) = m_kl;
  return from_results_matches(std::move(r), std::move(m));
}

RankingProblem RankingProblem::negated() const {
  Matrix<Rational> r = results_;
  for (Index i = 0; i < size(); ++i) {
    for (Index j = 0; j < size(); ++j) r(i, j) = -results_(i, j);
  }
  return RankingProblem(std::move(r), matches_);
}

RankingProblem RankingProblem::permuted(std::span<const Index> sigma) const {
  const Index n = size();
  if (sigma.size() != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (Index v : sigma) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  Matrix<Rational> r = Matrix<Rational>::square(n);
  Matrix<Count> m = Matrix<Count>::square(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      r(sigma[i], sigma[j]) = results_(i, j);
      m(sigma[i], sigma[j]) = matches_(i, j);
    }
  }
  return RankingProblem(std::move(r), std::move(m));
}

ClassFlags classify(const RankingProblem& problem) {
  const Index n = problem.size();
  ClassFlags flags;
  const Count d0 = problem.degree(0);
  flags.balanced = true;
  for (Index i = 1; i < n; ++i) flags.balanced = flags.balanced && problem.degree(i) == d0;

  flags.round_robin = true;
  flags.extremal = true;
  std::optional<Count> common;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!common) common = problem.matches(i, j);
      flags.round_robin = flags.round_robin && problem.matches(i, j) == *common;
      const Rational a = abs(problem.result(i, j));
      flags.extremal = flags.extremal && (a == 0 || a == problem.matches(i, j));
    }
  }
  flags.unweighted = problem.max_multiplicity() == 1;
  flags.connected = multigraph(problem).components.size() == 1;
  return flags;
}

ComparisonMultigraph multigraph(const RankingProblem& problem) {
  const Index n = problem.size();
  ComparisonMultigraph g;
  g.vertex_count = n;
  g.max_multiplicity = problem.max_multiplicity();
  g.degrees.resize(n);
  for (Index i = 0; i < n; ++i) g.degrees[i] = problem.degree(i);

  constexpr Index unvisited = static_cast<Index>(-1);
  g.component_of.assign(n, unvisited);
  for (Index start = 0; start < n; ++start) {
    if (g.component_of[start] != unvisited) continue;
    const Index id = g.components.size();
    std::vector<Index> members{start};
    g.component_of[start] = id;
    for (Index head = 0; head < members.size(); ++head) {
      const Index u = members[head];
      for (Index v = 0; v < n; ++v) {
        if (problem.matches(u, v) > 0 && g.component_of[v] == unvisited) {
          g.component_of[v] = id;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    g.components.push_back(std::move(members));
  }
  return g;
}

LaplacianMatrix laplacian(const RankingProblem& problem) {
  const Index n = problem.size();
  LaplacianMatrix l = LaplacianMatrix::square(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) l(i, j) = i == j ? problem.degree(i) : -problem.matches(i, j);
  }
  return l;
}

RankingProblem sum_problems(const RankingProblem& a, const RankingProblem& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cannot sum ranking problems of different sizes");
  const Index n = a.size();
  Matrix<Rational> r = Matrix<Rational>::square(n);
  Matrix<Count> m = Matrix<Count>::square(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      r(i, j) = a.result(i, j) + b.result(i, j);
      m(i, j) = a.matches(i, j) + b.matches(i, j);
    }
  }
  return RankingProblem::from_results_matches(std::move(r), std::move(m));
}

std::vector<std::pair<Index, Index>> differing_pairs(const RankingProblem& a, const RankingProblem& b) {
  if (a.size() != b.size()) throw std::invalid_argument("problems differ in size");
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = i + 1; j < a.size(); ++j) {
      if (a.result(i, j) != b.result(i, j) || a.matches(i, j) != b.matches(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

UnweightedDecomposition canonical_unweighted_decomposition(const RankingProblem& problem) {
  if (!problem.has_integer_results()) {
    throw InvalidProblem("unweighted decomposition requires integer results");
  }
  const Index n = problem.size();
  const Count layers = problem.max_multiplicity();
  std::vector<Matrix<Rational>> r(layers, Matrix<Rational>::square(n));
  std::vector<Matrix<Count>> m(layers, Matrix<Count>::square(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Count total = problem.matches(i, j);
      const long result = problem.result(i, j).get_num().get_si();
      const long sign = result > 0 ? 1 : (result < 0 ? -1 : 0);
      const long magnitude = result * sign;
      for (Count p = 0; p < total; ++p) {
        m[p](i, j) = m[p](j, i) = 1;
        if (p < magnitude) {
          r[p](i, j) = sign;
          r[p](j, i) = -sign;
        }
      }
    }
  }
  UnweightedDecomposition out;
  out.parent_fingerprint = problem.fingerprint();
  for (Count p = 0; p < layers; ++p) {
    out.layers.push_back(RankingProblem::from_results_matches(std::move(r[p]), std::move(m[p])));
  }
  return out;
}

bool is_decomposition_of(const UnweightedDecomposition& decomposition, const RankingProblem& parent) {
  RankingProblem total = RankingProblem::empty(parent.size());
  for (const auto& layer : decomposition.layers) {
    if (layer.size() != parent.size() || layer.max_multiplicity() > 1) return false;
    total = sum_problems(total, layer);
  }
  return total == parent;
}

}  // namespace pcrank
