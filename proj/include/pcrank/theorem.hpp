#pragma once

#include <string>
#include <vector>

namespace pcrank {

struct TraceStep {
  std::string id;
  std::string claim;
  bool holds = false;
  std::string detail;
};

/// Mechanical replay of the impossibility argument on registry 3.3 and its
/// relabelled twin 3.3-prime.
struct Theorem31Trace {
  std::vector<TraceStep> steps;
  bool contradiction = false;
  std::string verdict;
};

Theorem31Trace theorem31_witness();

}  // namespace pcrank
