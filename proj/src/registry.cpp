#include "pcrank/registry.hpp"

#include <stdexcept>
#include <utility>

#include "pcrank/weak_order.hpp"

namespace pcrank {

namespace {

struct Comparison {
  Index a;  // 1-based
  Index b;
  long result_a;
  Count matches;
};

RankingProblem build(Index n, std::initializer_list<Comparison> comparisons) {
  Matrix<Rational> r = Matrix<Rational>::square(n);
  Matrix<Count> m = Matrix<Count>::square(n);
  for (const auto& c : comparisons) {
    r(c.a - 1, c.b - 1) = c.result_a;
    r(c.b - 1, c.a - 1) = -c.result_a;
    m(c.a - 1, c.b - 1) = m(c.b - 1, c.a - 1) = c.matches;
  }
  return RankingProblem::from_results_matches(std::move(r), std::move(m));
}

std::vector<std::string> labels(Index n) {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back(default_label(i));
  return out;
}

constexpr const char* orientation_note =
    "X4 beats X3 (r_43 = 1), the orientation the impossibility argument relies on; a results matrix "
    "with the opposite sign also circulates. 3.3-prime is the variant with that result reversed.";

}  // namespace

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids{"3.1", "3.2", "3.3", "3.3-prime", "4.1"};
  return ids;
}

RegistryEntry registry_entry(std::string_view id) {
  if (id == "3.1") {
    return {"3.1", build(4, {{1, 2, 1, 1}, {1, 3, 1, 1}, {2, 4, 1, 1}, {3, 4, 1, 1}}), labels(4),
            "Four objects, X1 beats X2 and X3, both of which beat X4."};
  }
  if (id == "3.2") {
    return {"3.2",
            build(6, {{1, 2, 0, 1}, {2, 3, 0, 1}, {4, 5, 0, 1}, {5, 6, 0, 1}, {1, 6, 1, 1}, {3, 4, 1, 1}}),
            labels(6), "Six objects on a cycle: draws X1-X2, X2-X3, X4-X5, X5-X6; X1 beats X6, X3 beats X4."};
  }
  if (id == "3.3") {
    return {"3.3", build(4, {{1, 2, 0, 1}, {2, 3, 0, 1}, {1, 4, 0, 1}, {4, 3, 1, 1}}), labels(4),
            orientation_note};
  }
  if (id == "3.3-prime") {
    return {"3.3-prime", build(4, {{1, 2, 0, 1}, {2, 3, 0, 1}, {1, 4, 0, 1}, {3, 4, 1, 1}}), labels(4),
            orientation_note};
  }
  if (id == "4.1") {
    return {"4.1",
            build(6, {{1, 4, 0, 2},
                      {2, 4, 0, 2},
                      {3, 4, 0, 2},
                      {1, 5, 0, 1},
                      {2, 5, 0, 1},
                      {3, 5, 0, 1},
                      {2, 3, 0, 3},
                      {4, 5, 0, 1},
                      {5, 6, 0, 3}}),
            labels(6),
            "Multigraph only; all results are draws. V = {X1, X2, X3} is a macrovertex, {X4, X5, X6} is not."};
  }
  throw std::out_of_range("unknown example id: " + std::string(id));
}

}  // namespace pcrank
