#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcrank/axioms.hpp"
#include "pcrank/macrovertex.hpp"
#include "pcrank/methods.hpp"
#include "pcrank/problem.hpp"
#include "pcrank/theorem.hpp"

namespace pcrank {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledProblem {
  RankingProblem problem;
  std::vector<std::string> labels;
  std::string note;
};

/// Header `object_a,object_b,score_a,score_b`, then one match per row.
/// Labels are indexed in first-seen order. LF or CRLF.
LabeledProblem ingest_matches_csv(std::istream& in);

/// {"version":1,"labels":[...],"R":[["p/q",...]],"M":[[int,...]]}, optional "note".
/// Diagnostics name the offending JSON path.
LabeledProblem parse_problem_json(std::string_view text);

std::string emit_problem_json(const LabeledProblem& problem);

/// JSON when the first non-blank character is '{', CSV otherwise.
LabeledProblem parse_problem(std::string_view text);

nlohmann::json problem_to_json(const RankingProblem& problem, const std::vector<std::string>& labels);
nlohmann::json ratings_to_json(const RatingVector& ratings, const std::vector<std::string>& labels);
nlohmann::json report_to_json(const AxiomReport& report, const std::vector<std::string>& labels);
nlohmann::json trace_to_json(const Theorem31Trace& trace);
nlohmann::json macrovertices_to_json(const std::vector<Macrovertex>& list, const std::vector<std::string>& labels);

/// "(1/8, -1/8, -3/8, 3/8)".
std::string format_vector(const std::vector<Rational>& values);

}  // namespace pcrank
