#include "pcrank/io.hpp"

#include <map>
#include <set>
#include <sstream>

namespace pcrank {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back(default_label(i));
  return out;
}

std::string path(const std::string& key, std::size_t i) { return "$." + key + "[" + std::to_string(i) + "]"; }

std::string path(const std::string& key, std::size_t i, std::size_t j) {
  return path(key, i) + "[" + std::to_string(j) + "]";
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json label_list(const std::vector<Index>& objects, const std::vector<std::string>& labels) {
  json out = json::array();
  for (Index x : objects) out.push_back(labels.at(x));
  return out;
}

}  // namespace

LabeledProblem ingest_matches_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<std::string, Index> index_of;
  std::vector<std::string> labels;
  struct Row {
    Index a;
    Index b;
    Rational score_a;
    Rational score_b;
  };
  std::vector<Row> rows;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_commas(line);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"object_a", "object_b", "score_a", "score_b"}) {
        fail("expected header object_a,object_b,score_a,score_b");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) fail("expected 4 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty()) fail("empty object label");
    if (fields[0] == fields[1]) fail("object " + fields[0] + " matched against itself");
    const auto score_a = parse_rational(fields[2]);
    const auto score_b = parse_rational(fields[3]);
    if (!score_a) fail("score_a is not a rational number: " + fields[2]);
    if (!score_b) fail("score_b is not a rational number: " + fields[3]);
    if (*score_a < 0 || *score_b < 0) fail("scores must be nonnegative");
    if (*score_a + *score_b != 1) fail("scores must sum to 1");
    auto intern = [&](const std::string& label) {
      auto [it, inserted] = index_of.emplace(label, labels.size());
      if (inserted) labels.push_back(label);
      return it->second;
    };
    const Index a = intern(fields[0]);
    const Index b = intern(fields[1]);
    rows.push_back({a, b, *score_a, *score_b});
  }
  if (!header_seen) throw ParseError("line 1: missing header object_a,object_b,score_a,score_b");
  if (labels.empty()) throw ParseError("no matches");
  Matrix<Rational> t = Matrix<Rational>::square(labels.size());
  for (const Row& row : rows) {
    t(row.a, row.b) += row.score_a;
    t(row.b, row.a) += row.score_b;
  }
  return {RankingProblem::from_tournament(t), labels, {}};
}

LabeledProblem parse_problem_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("$: expected an object");
  if (!doc.contains("version")) throw ParseError("$.version: missing");
  if (!doc["version"].is_number_integer() || doc["version"].get<long>() != 1) {
    throw ParseError("$.version: unsupported schema version");
  }
  for (const char* key : {"R", "M"}) {
    if (!doc.contains(key)) throw ParseError(std::string("$.") + key + ": missing");
    if (!doc[key].is_array()) throw ParseError(std::string("$.") + key + ": expected an array");
  }
  const json& jr = doc["R"];
  const json& jm = doc["M"];
  const std::size_t n = jr.size();
  if (n == 0) throw ParseError("$.R: empty problem");
  if (jm.size() != n) throw ParseError("$.M: expected " + std::to_string(n) + " rows");
  Matrix<Rational> r = Matrix<Rational>::square(n);
  Matrix<Count> m = Matrix<Count>::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!jr[i].is_array() || jr[i].size() != n) {
      throw ParseError(path("R", i) + ": expected an array of " + std::to_string(n) + " entries");
    }
    if (!jm[i].is_array() || jm[i].size() != n) {
      throw ParseError(path("M", i) + ": expected an array of " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& cell = jr[i][j];
      if (cell.is_string()) {
        const auto value = parse_rational(cell.get<std::string>());
        if (!value) throw ParseError(path("R", i, j) + ": not a rational: " + cell.get<std::string>());
        r(i, j) = *value;
      } else if (cell.is_number_integer()) {
        r(i, j) = Rational(cell.dump());
      } else {
        throw ParseError(path("R", i, j) + ": expected a \"p/q\" string or an integer");
      }
      const json& mc = jm[i][j];
      if (!mc.is_number_integer()) throw ParseError(path("M", i, j) + ": expected an integer");
      const auto count = mc.get<long long>();
      if (count < 0) throw ParseError(path("M", i, j) + ": negative match count");
      m(i, j) = count;
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& jl = doc["labels"];
    if (!jl.is_array() || jl.size() != n) {
      throw ParseError("$.labels: expected an array of " + std::to_string(n) + " strings");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!jl[i].is_string()) throw ParseError(path("labels", i) + ": expected a string");
      labels.push_back(jl[i].get<std::string>());
      if (!seen.insert(labels.back()).second) throw ParseError(path("labels", i) + ": duplicate label");
    }
  } else {
    labels = default_labels(n);
  }
  std::string note;
  if (doc.contains("note")) {
    if (!doc["note"].is_string()) throw ParseError("$.note: expected a string");
    note = doc["note"].get<std::string>();
  }
  try {
    return {RankingProblem::from_results_matches(std::move(r), std::move(m)), labels, note};
  } catch (const InvalidProblem& e) {
    std::string where = "$";
    if (e.cell()) where = path("R", e.cell()->first, e.cell()->second);
    throw ParseError(where + ": " + e.what());
  }
}

json problem_to_json(const RankingProblem& problem, const std::vector<std::string>& labels) {
  const Index n = problem.size();
  json r = json::array();
  json m = json::array();
  for (Index i = 0; i < n; ++i) {
    json rr = json::array();
    json mr = json::array();
    for (Index j = 0; j < n; ++j) {
      rr.push_back(to_string(problem.result(i, j)));
      mr.push_back(problem.matches(i, j));
    }
    r.push_back(std::move(rr));
    m.push_back(std::move(mr));
  }
  return json{{"version", 1}, {"labels", labels.empty() ? default_labels(n) : labels}, {"R", r}, {"M", m}};
}

std::string emit_problem_json(const LabeledProblem& problem) {
  json doc = problem_to_json(problem.problem, problem.labels);
  if (!problem.note.empty()) doc["note"] = problem.note;
  return doc.dump(2);
}

LabeledProblem parse_problem(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_problem_json(text);
  std::istringstream in{std::string(text)};
  return ingest_matches_csv(in);
}

json ratings_to_json(const RatingVector& ratings, const std::vector<std::string>& labels) {
  json out{{"method", ratings.method.name()},
           {"symbol", ratings.method.symbol()},
           {"ratings", rationals(ratings.values)},
           {"labels", labels},
           {"ranking", induce_ranking(ratings).to_string(labels)}};
  if (ratings.cross_component_conventional) {
    out["note"] = "unconnected: cross-component order is conventional";
  }
  return out;
}

json report_to_json(const AxiomReport& report, const std::vector<std::string>& labels) {
  json out{{"axiom", axiom_name(report.axiom)},
           {"subject", report.subject},
           {"verdict", verdict_name(report.verdict)},
           {"instances_checked", report.instances_checked},
           {"search_complete", report.search_complete}};
  if (report.axiom == Axiom::sc || report.axiom == Axiom::wsc) out["candidates"] = report.candidates;
  if (!report.ratings.empty()) out["ratings"] = rationals(report.ratings);
  if (!report.note.empty()) out["note"] = report.note;
  if (report.perturbation) {
    const PerturbationWitness& w = *report.perturbation;
    json witness{{"kind", "perturbation"},
                 {"changed", label_list({w.changed.first, w.changed.second}, labels)},
                 {"target", label_list({w.target.first, w.target.second}, labels)},
                 {"before", rationals(w.before)},
                 {"after", rationals(w.after)},
                 {"original", problem_to_json(w.original, labels)},
                 {"perturbed", problem_to_json(w.perturbed, labels)}};
    if (!w.macrovertex.empty()) witness["macrovertex"] = label_list(w.macrovertex, labels);
    out["witness"] = witness;
  }
  if (report.dominance) {
    const DominanceViolation& v = *report.dominance;
    json layers = json::array();
    for (const auto& layer : v.witness.decomposition.layers) {
      json l = problem_to_json(layer, labels);
      l.erase("version");
      l.erase("labels");
      layers.push_back(l);
    }
    json bijections = json::array();
    for (const auto& b : v.witness.bijections) {
      json pairs = json::array();
      for (const auto& [k, l] : b.pairs) pairs.push_back(json::array({labels.at(k), labels.at(l)}));
      bijections.push_back(pairs);
    }
    out["witness"] = json{{"kind", "dominance"},
                          {"pair", label_list({v.i, v.j}, labels)},
                          {"premise", v.premise == Dominance::strict ? "strict" : "weak"},
                          {"order", v.order.to_string(labels)},
                          {"layers", layers},
                          {"bijections", bijections}};
  }
  return out;
}

json trace_to_json(const Theorem31Trace& trace) {
  json steps = json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back(json{{"step", s.id}, {"claim", s.claim}, {"holds", s.holds}, {"detail", s.detail}});
  }
  return json{{"steps", steps}, {"contradiction", trace.contradiction}, {"verdict", trace.verdict}};
}

json macrovertices_to_json(const std::vector<Macrovertex>& list, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const Macrovertex& v : list) {
    json outside = json::object();
    for (const auto& [k, c] : v.outside) outside[labels.at(k)] = c;
    out.push_back(json{{"members", label_list(v.members, labels)}, {"outside", outside}});
  }
  return out;
}

std::string format_vector(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

}  // namespace pcrank
