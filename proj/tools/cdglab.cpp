// cdglab: exact metric dimension, adjacency dimension and base size for
// character-degree-graph families, with an audit of published claims.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cdglab/audit.hpp"
#include "cdglab/graph6.hpp"
#include "cdglab/report.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitRefuted = 3;

struct GlobalOptions {
  std::string format = "json";
  int budget = 0;  // 0: per-oracle defaults
  bool strict = false;
  int jobs = 1;

  cdglab::OracleBudget oracle_budget() const {
    return budget > 0 ? cdglab::OracleBudget::uniform(budget) : cdglab::OracleBudget{};
  }
};

int run_analyze(const GlobalOptions& opts, std::vector<std::string> inputs) {
  const bool batch = inputs.empty() || (inputs.size() == 1 && inputs[0] == "-");
  if (batch) {
    inputs.clear();
    for (std::string line; std::getline(std::cin, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) inputs.push_back(line);
    }
  }

  std::vector<cdglab::DimensionReport> reports;
  for (const std::string& in : inputs) reports.push_back(cdglab::analyze(in, opts.oracle_budget()));

  bool refuted = false;
  for (const auto& r : reports) refuted |= !r.discrepancies.empty();

  if (opts.format == "csv") {
    std::cout << cdglab::csv_header() << '\n';
    for (const auto& r : reports) std::cout << cdglab::to_csv_row(r) << '\n';
  } else if (reports.size() == 1 && !batch) {
    std::cout << cdglab::to_json(reports.front()).dump(2) << '\n';
  } else {
    cdglab::ordered_json all = cdglab::ordered_json::array();
    for (const auto& r : reports) all.push_back(cdglab::to_json(r));
    std::cout << all.dump(2) << '\n';
  }
  return opts.strict && refuted ? kExitRefuted : 0;
}

int run_sweep(const GlobalOptions& opts, const std::string& family,
              const std::vector<std::string>& ranges, int max_n) {
  cdglab::SweepRequest req;
  req.family = family;
  for (const auto& r : ranges) req.ranges.push_back(cdglab::parse_range(r));
  req.max_n = max_n;
  req.jobs = opts.jobs;
  req.budget = opts.oracle_budget();
  const auto result = cdglab::sweep(req);

  bool refuted = false;
  for (const auto& [tag, s] : result.summary) refuted |= s.refuted > 0;

  if (opts.format == "csv") {
    std::cout << cdglab::csv_header() << '\n';
    for (const auto& r : result.reports) std::cout << cdglab::to_csv_row(r) << '\n';
    std::cout << "\n# tag,confirmed,refuted\n";
    for (const auto tag : cdglab::all_theorem_tags()) {
      const auto& s = result.summary.at(std::string(cdglab::to_string(tag)));
      std::cout << "# " << cdglab::to_string(tag) << ',' << s.confirmed << ',' << s.refuted
                << '\n';
    }
  } else {
    std::cout << cdglab::to_json(result).dump(2) << '\n';
  }
  return opts.strict && refuted ? kExitRefuted : 0;
}

int run_audit(const GlobalOptions& opts) {
  const auto checks = cdglab::audit_paper_claims(opts.oracle_budget());
  bool refuted = false;
  for (const auto& c : checks) refuted |= c.verdict == cdglab::Verdict::kRefuted;

  if (opts.format == "csv") {
    std::cout << "claim_ref,kind,input,expected,observed,verdict\n";
    for (const auto& c : checks) {
      // Quote the JSON-valued cells; they may contain commas.
      auto quoted = [](const cdglab::ordered_json& j) {
        std::string s = j.dump();
        std::string out = "\"";
        for (char ch : s) {
          if (ch == '"') out += '"';
          out += ch;
        }
        return out + "\"";
      };
      std::cout << c.claim_ref << ',' << cdglab::to_string(c.kind) << ",\"" << c.input << "\","
                << quoted(c.expected) << ',' << quoted(c.observed) << ','
                << cdglab::to_string(c.verdict) << '\n';
    }
  } else {
    cdglab::ordered_json all = cdglab::ordered_json::array();
    for (const auto& c : checks) all.push_back(cdglab::to_json(c));
    std::cout << all.dump(2) << '\n';
  }
  return opts.strict && refuted ? kExitRefuted : 0;
}

int run_fixtures(const GlobalOptions& opts) {
  if (opts.format == "csv") {
    std::cout << "id,n,edges,graph6\n";
    for (auto id : cdglab::all_fixtures()) {
      const auto g = cdglab::fixture(id);
      std::cout << cdglab::to_string(id) << ',' << g.order() << ',' << g.edge_count() << ','
                << cdglab::write_graph6(g) << '\n';
    }
    return 0;
  }
  cdglab::ordered_json all = cdglab::ordered_json::array();
  for (auto id : cdglab::all_fixtures()) {
    const auto g = cdglab::fixture(id);
    cdglab::ordered_json edges = cdglab::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    all.push_back({{"id", std::string(cdglab::to_string(id))},
                   {"n", g.order()},
                   {"edges", edges},
                   {"graph6", cdglab::write_graph6(g)}});
  }
  std::cout << all.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact metric dimension, adjacency dimension and base size laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", opts.budget, "Vertex cap for every exhaustive oracle")
      ->check(CLI::Range(1, 62));
  app.add_flag("--strict", opts.strict, "Exit with status 3 when any verdict is REFUTED");
  app.add_option("--jobs", opts.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Analyze graph6 strings or family specs");
  std::vector<std::string> inputs;
  analyze->add_option("input", inputs,
                      "graph6 string or family spec (cocktail:6, twoclique:6,2, diam3:1,3,1, "
                      "lewis:1:2,1, fixture:FIG_DIAM3); '-' or nothing reads graph6 lines from "
                      "stdin");

  auto* sweep = app.add_subcommand("sweep", "Sweep a family over parameter ranges");
  std::string family;
  std::vector<std::string> ranges;
  int max_n = 11;
  sweep->add_option("family", family, "cocktail | twoclique | diam3 | lewis")
      ->required()
      ->check(CLI::IsMember({"cocktail", "twoclique", "diam3", "lewis"}));
  sweep->add_option("--range", ranges, "name=a:b[:step] or name=v1,v2,...");
  sweep->add_option("--max-n", max_n, "Skip instances with more vertices")
      ->check(CLI::Range(1, 62));

  auto* audit = app.add_subcommand("audit", "Check every registered published claim");

  auto* fixtures = app.add_subcommand("fixtures", "Show the built-in figure fixtures");
  bool list = false;
  fixtures->add_flag("--list", list, "List fixture ids with graph6 encodings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(opts, inputs);
    if (*sweep) return run_sweep(opts, family, ranges, max_n);
    if (*audit) return run_audit(opts);
    if (*fixtures) return run_fixtures(opts);
  } catch (const cdglab::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.offset()) std::cerr << " (byte " << *e.offset() << ")";
    std::cerr << '\n';
    return kExitError;
  }
  return 0;
}
