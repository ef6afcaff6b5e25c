#include "pcrank/weak_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcrank {

std::string default_label(std::size_t i) { return "X" + std::to_string(i + 1); }

WeakOrder WeakOrder::from_levels(std::span<const std::size_t> levels) {
  std::vector<std::size_t> distinct(levels.begin(), levels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  WeakOrder order;
  order.levels_.reserve(levels.size());
  for (std::size_t v : levels) {
    order.levels_.push_back(static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
  }
  return order;
}

std::size_t WeakOrder::level_count() const {
  return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end()) + 1;
}

WeakOrder WeakOrder::reversed() const {
  WeakOrder order;
  const std::size_t top = level_count();
  for (std::size_t v : levels_) order.levels_.push_back(top - 1 - v);
  return order;
}

WeakOrder WeakOrder::permuted(std::span<const std::size_t> sigma) const {
  if (sigma.size() != size()) throw std::invalid_argument("permutation has the wrong length");
  WeakOrder order;
  order.levels_.assign(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) order.levels_.at(sigma[i]) = levels_[i];
  return order;
}

std::string WeakOrder::to_string(std::span<const std::string> labels) const {
  auto name = [&](std::size_t i) { return i < labels.size() ? labels[i] : default_label(i); };
  std::string out;
  for (std::size_t lv = 0; lv < level_count(); ++lv) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < size(); ++i) {
      if (levels_[i] == lv) members.push_back(i);
    }
    if (!out.empty()) out += " ≻ ";
    if (members.size() > 1) out += "(";
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) out += " ∼ ";
      out += name(members[k]);
    }
    if (members.size() > 1) out += ")";
  }
  return out;
}

std::vector<WeakOrder> enumerate_weak_orders(std::size_t n) {
  std::vector<WeakOrder> out;
  if (n == 0) return {WeakOrder{}};
  // Odometer over level vectors in [0, n)^n, keeping the surjective ones.
  std::vector<std::size_t> levels(n, 0);
  std::vector<std::size_t> used(n, 0);
  for (;;) {
    std::fill(used.begin(), used.end(), 0);
    std::size_t top = 0;
    for (std::size_t v : levels) {
      used[v] = 1;
      top = std::max(top, v);
    }
    bool contiguous = true;
    for (std::size_t v = 0; v <= top; ++v) contiguous = contiguous && used[v];
    if (contiguous) out.push_back(WeakOrder::from_levels(levels));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++levels[pos] < n) break;
      levels[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace pcrank
