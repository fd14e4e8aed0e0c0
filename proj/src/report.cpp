#include "cdglab/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <thread>

#include "cdglab/graph6.hpp"

namespace cdglab {

std::string_view to_string(Verdict v) {
  return v == Verdict::kConfirmed ? "CONFIRMED" : "REFUTED";
}

std::optional<Prediction> DimensionReport::family_prediction() const {
  if (!spec) return std::nullopt;
  for (const Prediction& p : predictions) {
    if (p.source != TheoremTag::kTwin && p.source != TheoremTag::kChartrand) return p;
  }
  return std::nullopt;
}

std::optional<Verdict> DimensionReport::family_verdict() const {
  auto p = family_prediction();
  if (!p || !metric_dim) return std::nullopt;
  return p->value == *metric_dim ? Verdict::kConfirmed : Verdict::kRefuted;
}

namespace {

template <typename F>
void run_oracle(DimensionReport& r, const char* name, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded && e.code() != ErrorCode::kDisconnected) throw;
    r.skipped.push_back(std::string(name) + ": " + e.what());
  }
}

void compare(DimensionReport& r, const Prediction& p, const char* quantity,
             const std::optional<int>& observed) {
  if (!observed || p.value == *observed) return;
  std::string ref(to_string(p.source));
  if (p.source == TheoremTag::kTwin) ref += std::string(":") + quantity;
  r.discrepancies.push_back({ref, p.value, *observed});
}

}  // namespace

DimensionReport analyze(const Graph& g, std::string id, std::optional<FamilySpec> spec,
                        const OracleBudget& budget) {
  DimensionReport r;
  r.id = std::move(id);
  r.n = g.order();
  r.spec = spec;
  const bool connected = is_connected(g);

  run_oracle(r, "metric_dim", [&] {
    auto d = metric_dimension(g, budget.resolving_vertices);
    r.metric_dim = d.value;
    r.metric_witness = d.witness;
  });
  run_oracle(r, "adjacency_dim", [&] {
    auto d = adjacency_dimension(g, budget.resolving_vertices);
    r.adjacency_dim = d.value;
    r.adjacency_witness = d.witness;
  });
  run_oracle(r, "automorphisms", [&] {
    AutGroup group = automorphisms(g, budget.automorphism);
    r.aut_order = group.order();
    auto b = base_size(group, g);
    r.base_size = b.value;
    r.base_witness = b.witness;
  });

  r.twins = twin_partition(g);
  r.twin_lower_bound = cdglab::twin_lower_bound(r.twins);

  r.diameter = cdglab::diameter(g);
  r.cut_vertices = cdglab::cut_vertices(g).to_vector();
  if (connected) {
    r.blocks_complete = check_blocks_complete(g);
    if (auto d3 = diam3_partition(g); auto* p = std::get_if<Diam3Partition>(&d3)) r.diam3 = *p;
  }
  r.lewis = recognize_lewis(g);

  if (connected) {
    if (spec) {
      if (auto p = predict(*spec)) r.predictions.push_back(*p);
    } else {
      for (const Prediction& p : structural_predictions(g)) r.predictions.push_back(p);
    }
    if (auto p = twin_formula(g)) r.predictions.push_back(*p);
    if (auto p = chartrand_dimension(g)) r.predictions.push_back(*p);
  }

  for (const Prediction& p : r.predictions) {
    compare(r, p, "metric_dim", r.metric_dim);
    if (p.source == TheoremTag::kTwin) {
      compare(r, p, "adjacency_dim", r.adjacency_dim);
      compare(r, p, "base_size", r.base_size);
    }
  }
  return r;
}

DimensionReport analyze(std::string_view input, const OracleBudget& budget) {
  if (looks_like_family_spec(input)) {
    FamilySpec spec = parse_family_spec(input);
    std::optional<FamilySpec> family;
    if (!std::holds_alternative<Fixture>(spec)) family = spec;
    return analyze(make_graph(spec), to_text(spec), family, budget);
  }
  Graph g = parse_graph6(input);
  return analyze(g, write_graph6(g), std::nullopt, budget);
}

namespace {

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json set_json(VertexSet s) { return s.to_vector(); }

}  // namespace

ordered_json to_json(const DimensionReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;

  ordered_json oracle;
  oracle["metric_dim"] = optional_json(r.metric_dim);
  oracle["adjacency_dim"] = optional_json(r.adjacency_dim);
  oracle["base_size"] = optional_json(r.base_size);
  oracle["aut_order"] = optional_json(r.aut_order);
  oracle["skipped"] = r.skipped;
  j["oracle"] = oracle;

  ordered_json witnesses;
  witnesses["metric"] = r.metric_dim ? ordered_json(r.metric_witness) : ordered_json(nullptr);
  witnesses["adjacency"] =
      r.adjacency_dim ? ordered_json(r.adjacency_witness) : ordered_json(nullptr);
  witnesses["base"] = r.base_size ? ordered_json(r.base_witness) : ordered_json(nullptr);
  j["witnesses"] = witnesses;

  ordered_json twins;
  twins["classes"] = ordered_json::array();
  twins["kinds"] = ordered_json::array();
  for (const TwinClass& c : r.twins.classes) {
    twins["classes"].push_back(c.members);
    twins["kinds"].push_back(std::string(to_string(c.kind)));
  }
  twins["lower_bound"] = r.twin_lower_bound;
  j["twins"] = twins;

  ordered_json structure;
  structure["diameter"] = r.diameter ? ordered_json(*r.diameter) : ordered_json("UNREACHABLE");
  structure["cut_vertices"] = r.cut_vertices;
  structure["blocks_complete"] =
      r.blocks_complete ? ordered_json(std::string(to_string(*r.blocks_complete)))
                        : ordered_json(nullptr);
  if (r.lewis) {
    ordered_json lewis;
    lewis["U"] = set_json(r.lewis->universal);
    lewis["stars"] = ordered_json::array();
    for (const Star& s : r.lewis->stars) {
      lewis["stars"].push_back({{"center", s.centre}, {"leaves", s.leaves}});
    }
    lewis["n1"] = r.lewis->n1();
    lewis["n2"] = r.lewis->n2();
    lewis["n3"] = r.lewis->n3();
    lewis["s"] = r.lewis->s();
    structure["lewis"] = lewis;
  } else {
    structure["lewis"] = nullptr;
  }
  if (r.diam3) {
    structure["diam3_partition"] = {{"anchor", r.diam3->anchor},
                                    {"rho1", set_json(r.diam3->rho1)},
                                    {"rho2", set_json(r.diam3->rho2)},
                                    {"rho3", set_json(r.diam3->rho3)},
                                    {"rho4", set_json(r.diam3->rho4)}};
  } else {
    structure["diam3_partition"] = nullptr;
  }
  j["structure"] = structure;

  j["predictions"] = ordered_json::array();
  for (const Prediction& p : r.predictions) {
    j["predictions"].push_back({{"source", std::string(to_string(p.source))},
                                {"value", p.value},
                                {"note", p.note}});
  }
  j["discrepancies"] = ordered_json::array();
  for (const Discrepancy& d : r.discrepancies) {
    j["discrepancies"].push_back(
        {{"claim_ref", d.claim_ref}, {"expected", d.expected}, {"observed", d.observed}});
  }
  return j;
}

std::string csv_header() { return "spec,n,dim,adim,base,prediction,verdict"; }

std::string to_csv_row(const DimensionReport& r) {
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::string prediction;
  std::string verdict;
  if (auto p = r.family_prediction()) {
    prediction = std::string(to_string(p->source)) + "=" + std::to_string(p->value);
  }
  if (auto v = r.family_verdict()) {
    verdict = std::string(to_string(*v));
  } else if (!r.predictions.empty() && r.metric_dim) {
    verdict = r.discrepancies.empty() ? "CONFIRMED" : "REFUTED";
  }
  return r.id + "," + std::to_string(r.n) + "," + cell(r.metric_dim) + "," +
         cell(r.adjacency_dim) + "," + cell(r.base_size) + "," + prediction + "," + verdict;
}

namespace {

[[noreturn]] void bad_range(const std::string& what) { throw Error(ErrorCode::kBadRange, what); }

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    bad_range("bad integer in range '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto at = s.find(sep);
    parts.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return parts;
    s.remove_prefix(at + 1);
  }
}

}  // namespace

ParameterRange parse_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) bad_range("range must look like name=a:b");
  ParameterRange out{std::string(text.substr(0, eq)), {}};
  const std::string_view body = text.substr(eq + 1);
  if (body.find(':') != std::string_view::npos) {
    auto parts = split(body, ':');
    if (parts.size() > 3) bad_range("range has too many ':' fields");
    const int lo = parse_int(parts[0], text);
    const int hi = parse_int(parts[1], text);
    const int step = parts.size() == 3 ? parse_int(parts[2], text) : 1;
    if (step <= 0 || lo > hi) bad_range("empty or descending range '" + std::string(text) + "'");
    for (int v = lo; v <= hi; v += step) out.values.push_back(v);
  } else {
    for (auto part : split(body, ',')) out.values.push_back(parse_int(part, text));
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  }
  if (out.values.empty()) bad_range("empty range");
  return out;
}

namespace {

struct FamilyParameters {
  std::vector<std::string> names;
  std::vector<std::string> defaults;
};

FamilyParameters parameters_for(const std::string& family) {
  if (family == "cocktail") return {{"n"}, {"n=4:10:2"}};
  if (family == "twoclique") return {{"n", "m"}, {"n=5:10", "m=1:4"}};
  if (family == "diam3") return {{"n1", "n3", "n4"}, {"n1=1:3", "n3=3:4", "n4=1:2"}};
  if (family == "lewis") return {{"n1", "n"}, {"n1=0:2", "n=2:10"}};
  bad_range("unknown sweep family '" + family + "'");
}

// Nonincreasing positive sequences whose stars (leaves + centre) cover
// exactly `vertices` vertices.
void leaf_multisets(int vertices, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (vertices == 0) {
    if (!current.empty()) out.push_back(current);
    return;
  }
  for (int c = std::min(max_part, vertices - 1); c >= 1; --c) {
    current.push_back(c);
    leaf_multisets(vertices - c - 1, c, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<FamilySpec> sweep_instances(const SweepRequest& req, int* skipped) {
  const FamilyParameters params = parameters_for(req.family);
  std::map<std::string, std::vector<int>> values;
  for (const std::string& d : params.defaults) {
    auto r = parse_range(d);
    values[r.name] = r.values;
  }
  for (const ParameterRange& r : req.ranges) {
    if (std::find(params.names.begin(), params.names.end(), r.name) == params.names.end()) {
      bad_range("family '" + req.family + "' has no parameter '" + r.name + "'");
    }
    values[r.name] = r.values;
  }
  if (req.max_n > req.budget.resolving_vertices) {
    bad_range("max n " + std::to_string(req.max_n) + " exceeds the oracle budget of " +
              std::to_string(req.budget.resolving_vertices));
  }

  int dropped = 0;
  std::vector<FamilySpec> out;
  auto keep = [&](FamilySpec spec, int n, bool valid) {
    if (valid && n <= req.max_n) {
      out.push_back(std::move(spec));
    } else {
      ++dropped;
    }
  };

  if (req.family == "cocktail") {
    for (int n : values["n"]) keep(CocktailParty{n}, n, n >= 4 && n % 2 == 0);
  } else if (req.family == "twoclique") {
    for (int n : values["n"]) {
      for (int m : values["m"]) keep(TwoCliqueCut{n, m}, n, n >= 4 && m >= 1 && m <= n - m - 1);
    }
  } else if (req.family == "diam3") {
    for (int n1 : values["n1"]) {
      for (int n3 : values["n3"]) {
        for (int n4 : values["n4"]) {
          Diam3Cut p{n1, n3, n4};
          keep(p, p.order(), n1 >= 1 && n3 >= 3 && n4 >= 1);
        }
      }
    }
  } else {
    for (int n1 : values["n1"]) {
      for (int n : values["n"]) {
        if (n1 < 0 || n - n1 < 2) {
          ++dropped;
          continue;
        }
        std::vector<std::vector<int>> multisets;
        std::vector<int> current;
        leaf_multisets(n - n1, n - n1, current, multisets);
        std::sort(multisets.begin(), multisets.end());
        for (auto& leaves : multisets) {
          // One star with no universal vertex leaves its centre isolated.
          const bool connected = n1 > 0 || leaves.size() >= 2;
          keep(LewisSpec{n1, std::move(leaves)}, n, connected);
        }
      }
    }
  }
  if (skipped) *skipped = dropped;
  return out;
}

SweepResult sweep(const SweepRequest& req) {
  SweepResult result;
  const std::vector<FamilySpec> specs = sweep_instances(req, &result.skipped_parameters);
  result.reports.resize(specs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      result.reports[i] = analyze(make_graph(specs[i]), to_text(specs[i]), specs[i], req.budget);
    }
  };
  const int jobs = std::max(1, req.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  for (const TheoremTag tag : all_theorem_tags()) result.summary[std::string(to_string(tag))];
  for (const DimensionReport& r : result.reports) {
    for (const Prediction& p : r.predictions) {
      if (!r.metric_dim) continue;
      const std::string tag(to_string(p.source));
      bool agrees = std::none_of(r.discrepancies.begin(), r.discrepancies.end(),
                                 [&](const Discrepancy& d) {
                                   return d.claim_ref.rfind(tag, 0) == 0;
                                 });
      agrees ? ++result.summary[tag].confirmed : ++result.summary[tag].refuted;
    }
  }
  return result;
}

ordered_json to_json(const SweepResult& r) {
  ordered_json j;
  j["reports"] = ordered_json::array();
  for (const DimensionReport& rep : r.reports) j["reports"].push_back(to_json(rep));
  ordered_json summary;
  for (const TheoremTag tag : all_theorem_tags()) {
    const auto& s = r.summary.at(std::string(to_string(tag)));
    summary[std::string(to_string(tag))] = {{"confirmed", s.confirmed}, {"refuted", s.refuted}};
  }
  j["summary"] = summary;
  j["skipped_parameters"] = r.skipped_parameters;
  return j;
}

}  // namespace cdglab
