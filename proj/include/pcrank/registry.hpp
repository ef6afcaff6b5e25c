#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcrank/problem.hpp"

namespace pcrank {

struct RegistryEntry {
  std::string id;
  RankingProblem problem;
  std::vector<std::string> labels;
  std::string note;
};

/// "3.1", "3.2", "3.3", "3.3-prime", "4.1".
const std::vector<std::string>& registry_ids();

/// Throws std::out_of_range for an unknown id.
RegistryEntry registry_entry(std::string_view id);

}  // namespace pcrank
