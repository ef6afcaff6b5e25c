#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "pcrank/axioms.hpp"
#include "pcrank/io.hpp"
#include "pcrank/macrovertex.hpp"
#include "pcrank/registry.hpp"
#include "pcrank/theorem.hpp"

namespace pcrank::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string method;
  std::string epsilon;
  std::string axiom;
  std::string id;
  std::optional<std::uint64_t> budget;
  bool json = false;
  bool emit = false;
};

LabeledProblem load(const std::string& input, std::istream& in) {
  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(input, std::ios::binary);
    if (!file) throw UsageError("cannot open input file: " + input);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return parse_problem(text);
  } catch (const InvalidProblem& e) {
    throw ParseError(e.what());
  }
}

Method method_from(const Options& o) {
  if (o.method == "grs") {
    if (o.epsilon.empty()) throw UsageError("--epsilon is required for --method grs");
    const auto eps = parse_rational(o.epsilon);
    if (!eps) throw UsageError("--epsilon is not a rational number: " + o.epsilon);
    if (*eps <= 0) throw UsageError("--epsilon must be positive");
    return Method::generalized_row_sum(*eps);
  }
  if (!o.epsilon.empty()) throw UsageError("--epsilon applies only to --method grs");
  if (o.method == "rowsum") return Method::row_sum();
  return Method::least_squares();
}

std::string pair_text(Index a, Index b, const std::vector<std::string>& labels) {
  return "(" + labels.at(a) + ", " + labels.at(b) + ")";
}

int cmd_rank(const Options& o, std::istream& in, std::ostream& out) {
  const Method method = method_from(o);
  const LabeledProblem lp = load(o.input, in);
  const RatingVector ratings = evaluate(method, lp.problem);
  if (o.json) {
    out << ratings_to_json(ratings, lp.labels).dump(2) << "\n";
    return ok;
  }
  out << method.symbol() << " = " << format_vector(ratings.values) << "; ranking "
      << induce_ranking(ratings).to_string(lp.labels) << "\n";
  if (ratings.cross_component_conventional) {
    out << "note: unconnected: cross-component order is conventional\n";
  }
  return ok;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const LabeledProblem lp = load(o.input, in);
  const ClassFlags flags = classify(lp.problem);
  const ComparisonMultigraph graph = multigraph(lp.problem);
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : graph.components) {
    nlohmann::json members = nlohmann::json::array();
    for (Index x : c) members.push_back(lp.labels.at(x));
    components.push_back(members);
  }
  if (o.json) {
    out << nlohmann::json{{"n", lp.problem.size()},
                          {"balanced", flags.balanced},
                          {"round_robin", flags.round_robin},
                          {"unweighted", flags.unweighted},
                          {"extremal", flags.extremal},
                          {"connected", flags.connected},
                          {"degrees", graph.degrees},
                          {"max_multiplicity", graph.max_multiplicity},
                          {"components", components}}
                .dump(2)
        << "\n";
    return ok;
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "n: " << lp.problem.size() << "\n"
      << "balanced: " << yes(flags.balanced) << "\n"
      << "round_robin: " << yes(flags.round_robin) << "\n"
      << "unweighted: " << yes(flags.unweighted) << "\n"
      << "extremal: " << yes(flags.extremal) << "\n"
      << "connected: " << yes(flags.connected) << "\n"
      << "max_multiplicity: " << graph.max_multiplicity << "\n"
      << "degrees:";
  for (Index i = 0; i < lp.problem.size(); ++i) out << " " << lp.labels[i] << "=" << graph.degrees[i];
  out << "\ncomponents:";
  for (const auto& c : graph.components) {
    out << " {";
    for (std::size_t t = 0; t < c.size(); ++t) out << (t ? ", " : "") << lp.labels.at(c[t]);
    out << "}";
  }
  out << "\n";
  return ok;
}

void print_report(const AxiomReport& report, const std::vector<std::string>& labels, std::ostream& out) {
  out << "axiom: " << axiom_name(report.axiom) << "\n"
      << "subject: " << report.subject << "\n"
      << "verdict: " << verdict_name(report.verdict) << "\n"
      << "instances checked: " << report.instances_checked << (report.search_complete ? "" : " (search truncated)")
      << "\n";
  if (!report.ratings.empty()) out << "ratings: " << format_vector(report.ratings) << "\n";
  if (report.perturbation) {
    const PerturbationWitness& w = *report.perturbation;
    out << "witness pair " << pair_text(w.target.first, w.target.second, labels) << " after changing "
        << pair_text(w.changed.first, w.changed.second, labels) << " to r = "
        << to_string(w.perturbed.result(w.changed.first, w.changed.second))
        << ", m = " << w.perturbed.matches(w.changed.first, w.changed.second) << "\n"
        << "before: " << format_vector(w.before) << "\n"
        << "after: " << format_vector(w.after) << "\n";
    if (!w.macrovertex.empty()) {
      out << "macrovertex: {";
      for (std::size_t t = 0; t < w.macrovertex.size(); ++t) out << (t ? ", " : "") << labels.at(w.macrovertex[t]);
      out << "}\n";
    }
  }
  if (report.dominance) {
    const DominanceViolation& v = *report.dominance;
    out << "witness pair " << pair_text(v.i, v.j, labels) << ": "
        << (v.premise == Dominance::strict ? "strict" : "weak") << " premise under "
        << v.order.to_string(labels) << "\n";
    for (std::size_t p = 0; p < v.witness.bijections.size(); ++p) {
      out << "layer " << p + 1 << ":";
      for (const auto& [k, l] : v.witness.bijections[p].pairs) {
        out << " " << labels.at(k) << "->" << labels.at(l) << " ("
            << to_string(v.witness.decomposition.layers[p].result(v.i, k)) << " vs "
            << to_string(v.witness.decomposition.layers[p].result(v.j, l)) << ")";
      }
      out << "\n";
    }
  }
  if (!report.note.empty()) out << "note: " << report.note << "\n";
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Method method = method_from(o);
  const LabeledProblem lp = load(o.input, in);
  AxiomReport report;
  if (o.axiom == "iim") {
    report = search_iim_violation(method, lp.problem, o.budget.value_or(unlimited_budget));
  } else if (o.axiom == "mva" || o.axiom == "mvi") {
    report = search_mv_violation(method, lp.problem, o.axiom == "mva" ? Axiom::mva : Axiom::mvi,
                                 o.budget.value_or(unlimited_budget));
  } else {
    SearchLimits limits;
    if (o.budget) limits.max_candidates = *o.budget;
    report = o.axiom == "sc" ? check_sc(method, lp.problem, limits) : check_wsc(method, lp.problem, limits);
  }
  if (o.json) {
    out << report_to_json(report, lp.labels).dump(2) << "\n";
  } else {
    print_report(report, lp.labels, out);
  }
  switch (report.verdict) {
    case Verdict::satisfied: return ok;
    case Verdict::violated: return violation;
    case Verdict::budget_exceeded: return budget_exceeded;
  }
  return ok;
}

int cmd_macrovertices(const Options& o, std::istream& in, std::ostream& out) {
  const LabeledProblem lp = load(o.input, in);
  const auto list = find_macrovertices(lp.problem);
  if (o.json) {
    out << macrovertices_to_json(list, lp.labels).dump(2) << "\n";
    return ok;
  }
  for (const Macrovertex& v : list) {
    out << "{";
    for (std::size_t t = 0; t < v.members.size(); ++t) out << (t ? ", " : "") << lp.labels.at(v.members[t]);
    out << "}\n";
  }
  if (list.empty()) out << "no nontrivial macrovertex\n";
  return ok;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out) {
  const LabeledProblem lp = load(o.input, in);
  if (lp.problem.size() > 6) throw UsageError("enumerate-sc needs n <= 6");
  SearchLimits limits;
  if (o.budget) limits.max_candidates = *o.budget;
  const ScEnumeration result = enumerate_sc_rankings(lp.problem, limits);
  if (o.json) {
    nlohmann::json orders = nlohmann::json::array();
    for (const WeakOrder& order : result.orders) orders.push_back(order.to_string(lp.labels));
    out << nlohmann::json{{"count", result.orders.size()},
                          {"orders", orders},
                          {"budget_exceeded", result.budget_exceeded},
                          {"note", "premises searched over decompositions with layer results in {-1,0,1}"}}
                .dump(2)
        << "\n";
  } else {
    for (const WeakOrder& order : result.orders) out << order.to_string(lp.labels) << "\n";
  }
  return result.budget_exceeded ? budget_exceeded : ok;
}

int cmd_example(const Options& o, std::ostream& out) {
  RegistryEntry entry = [&] {
    try {
      return registry_entry(o.id);
    } catch (const std::out_of_range&) {
      throw UsageError("unknown example id: " + o.id);
    }
  }();
  out << emit_problem_json({entry.problem, entry.labels, o.emit ? entry.note : std::string()}) << "\n";
  return ok;
}

int cmd_theorem31(const Options& o, std::ostream& out) {
  const Theorem31Trace trace = theorem31_witness();
  if (o.json) {
    out << trace_to_json(trace).dump(2) << "\n";
  } else {
    for (const TraceStep& step : trace.steps) {
      out << "[" << (step.holds ? "ok" : "FAILED") << "] " << step.id << ": " << step.claim;
      if (!step.detail.empty()) out << " -- " << step.detail;
      out << "\n";
    }
    out << "verdict: " << trace.verdict << "\n";
  }
  return trace.contradiction ? ok : violation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact paired-comparison ranking and axiom checking", "pcrank"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> methods{"rowsum", "grs", "ls"};

  auto* rank = app.add_subcommand("rank", "Rate objects and print the induced ranking");
  rank->add_option("--method", o.method, "rowsum, grs or ls")->required()->check(CLI::IsMember(methods));
  rank->add_option("--epsilon", o.epsilon, "Generalized row sum parameter (rational > 0)");
  rank->add_option("--input", o.input, "Problem file (JSON or CSV), - for stdin")->required();
  rank->add_flag("--json", o.json, "Machine-readable output");

  auto* cls = app.add_subcommand("classify", "Print class flags and components");
  cls->add_option("--input", o.input, "Problem file, - for stdin")->required();
  cls->add_flag("--json", o.json, "Machine-readable output");

  auto* check = app.add_subcommand("check", "Search for an axiom violation");
  check->add_option("--axiom", o.axiom, "iim, sc, wsc, mva or mvi")
      ->required()
      ->check(CLI::IsMember({"iim", "sc", "wsc", "mva", "mvi"}));
  check->add_option("--method", o.method, "rowsum, grs or ls")->required()->check(CLI::IsMember(methods));
  check->add_option("--epsilon", o.epsilon, "Generalized row sum parameter (rational > 0)");
  check->add_option("--input", o.input, "Problem file, - for stdin")->required();
  check->add_option("--budget", o.budget, "Instance budget (iim, mva, mvi) or candidates per pair (sc, wsc)");
  check->add_flag("--json", o.json, "Machine-readable report");

  auto* mv = app.add_subcommand("macrovertices", "List nontrivial macrovertices");
  mv->add_option("--input", o.input, "Problem file, - for stdin")->required();
  mv->add_flag("--json", o.json, "Machine-readable output");

  auto* en = app.add_subcommand("enumerate-sc", "List all self-consistent weak orders (n <= 6)");
  en->add_option("--input", o.input, "Problem file, - for stdin")->required();
  en->add_option("--budget", o.budget, "Premise-search candidates per pair");
  en->add_flag("--json", o.json, "Machine-readable output");

  auto* ex = app.add_subcommand("example", "Print a built-in example as problem JSON");
  ex->add_option("--id", o.id, "3.1, 3.2, 3.3, 3.3-prime or 4.1")->required();
  ex->add_flag("--emit", o.emit, "Include the provenance note");

  auto* th = app.add_subcommand("theorem31", "Replay the IIM/SC impossibility argument");
  th->add_flag("--json", o.json, "Machine-readable trace");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (rank->parsed()) return cmd_rank(o, in, out);
    if (cls->parsed()) return cmd_classify(o, in, out);
    if (check->parsed()) return cmd_check(o, in, out);
    if (mv->parsed()) return cmd_macrovertices(o, in, out);
    if (en->parsed()) return cmd_enumerate(o, in, out);
    if (ex->parsed()) return cmd_example(o, out);
    if (th->parsed()) return cmd_theorem31(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace pcrank::cli
