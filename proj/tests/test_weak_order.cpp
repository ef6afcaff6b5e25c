#include <doctest.h>

#include <algorithm>
#include <set>

#include "pcrank/weak_order.hpp"

using namespace pcrank;

namespace {

// a(n) = sum_k C(n,k) a(n-k), a(0) = 1.
std::vector<std::size_t> fubini(std::size_t upto) {
  std::vector<std::size_t> a{1};
  for (std::size_t n = 1; n <= upto; ++n) {
    std::size_t total = 0, binom = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      binom = binom * (n - k + 1) / k;
      total += binom * a[n - k];
    }
    a.push_back(total);
  }
  return a;
}

}  // namespace

TEST_SUITE_BEGIN("weak_order");

TEST_CASE("levels are renumbered contiguously") {
  const std::vector<std::size_t> raw{7, 2, 2, 9};
  const auto w = WeakOrder::from_levels(raw);
  CHECK(w.levels() == std::vector<std::size_t>{1, 0, 0, 2});
  CHECK(w.level_count() == 3);
  CHECK(w.strictly_above(1, 0));
  CHECK(w.tied(1, 2));
  CHECK(w.weakly_above(2, 1));
  CHECK_FALSE(w.weakly_above(3, 0));
}

TEST_CASE("rendering") {
  const std::vector<std::size_t> lv{0, 1, 1, 2};
  const auto w = WeakOrder::from_levels(lv);
  CHECK(w.to_string() == "X1 ≻ (X2 ∼ X3) ≻ X4");
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  CHECK(w.to_string(labels) == "a ≻ (b ∼ c) ≻ d");
  CHECK(w.reversed().to_string() == "X4 ≻ (X2 ∼ X3) ≻ X1");
  CHECK(default_label(0) == "X1");
}

TEST_CASE("permutation") {
  const std::vector<std::size_t> lv{0, 1, 2};
  const std::vector<std::size_t> sigma{2, 0, 1};
  const auto w = WeakOrder::from_levels(lv).permuted(sigma);
  CHECK(w.levels() == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("enumeration count is the ordered Bell number") {
  const auto oracle = fubini(7);
  CHECK(oracle == std::vector<std::size_t>{1, 1, 3, 13, 75, 541, 4683, 47293});
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto all = enumerate_weak_orders(n);
    CHECK(all.size() == oracle[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<WeakOrder>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_SUITE_END();
