#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pcrank {

/// Complete, transitive ranking with ties. Each object sits on a level;
/// level 0 is best and levels are contiguous.
class WeakOrder {
 public:
  WeakOrder() = default;

  /// Any integer labels; renumbered to contiguous levels preserving order.
  static WeakOrder from_levels(std::span<const std::size_t> levels);

  std::size_t size() const { return levels_.size(); }
  std::size_t level(std::size_t i) const { return levels_[i]; }
  const std::vector<std::size_t>& levels() const { return levels_; }
  std::size_t level_count() const;

  bool weakly_above(std::size_t i, std::size_t j) const { return levels_[i] <= levels_[j]; }
  bool strictly_above(std::size_t i, std::size_t j) const { return levels_[i] < levels_[j]; }
  bool tied(std::size_t i, std::size_t j) const { return levels_[i] == levels_[j]; }

  WeakOrder reversed() const;

  /// Relabels object i as sigma[i].
  WeakOrder permuted(std::span<const std::size_t> sigma) const;

  /// "X1 ≻ (X2 ∼ X3) ≻ X4" with the given labels (X1..Xn when empty).
  std::string to_string(std::span<const std::string> labels = {}) const;

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
  friend auto operator<=>(const WeakOrder&, const WeakOrder&) = default;

 private:
  std::vector<std::size_t> levels_;
};

/// All weak orders on n objects (ordered Bell number many), in
/// lexicographic order of their level vectors.
std::vector<WeakOrder> enumerate_weak_orders(std::size_t n);

std::string default_label(std::size_t i);

}  // namespace pcrank
