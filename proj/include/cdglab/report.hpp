#ifndef CDGLAB_REPORT_HPP
#define CDGLAB_REPORT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdglab/automorphism.hpp"
#include "cdglab/classify.hpp"
#include "cdglab/families.hpp"
#include "cdglab/formulas.hpp"
#include "cdglab/graph.hpp"
#include "cdglab/resolving.hpp"
#include "cdglab/twins.hpp"

namespace cdglab {

using ordered_json = nlohmann::ordered_json;

/// Vertex caps for the exhaustive oracles.
struct OracleBudget {
  int resolving_vertices = kDefaultResolvingCap;
  AutomorphismBudget automorphism{};

  /// One cap for every oracle, as set by --budget.
  static OracleBudget uniform(int max_vertices) {
    OracleBudget b;
    b.resolving_vertices = max_vertices;
    b.automorphism.max_vertices = max_vertices;
    return b;
  }
};

enum class Verdict { kConfirmed, kRefuted };
std::string_view to_string(Verdict v);

struct Discrepancy {
  std::string claim_ref;
  int expected;
  int observed;
};

struct DimensionReport {
  std::string id;
  int n = 0;
  std::optional<FamilySpec> spec;

  std::optional<int> metric_dim;
  std::optional<int> adjacency_dim;
  std::optional<int> base_size;
  std::optional<std::size_t> aut_order;
  std::vector<std::string> skipped;  // oracle name: reason

  std::vector<Vertex> metric_witness;
  std::vector<Vertex> adjacency_witness;
  std::vector<Vertex> base_witness;

  TwinPartition twins;
  int twin_lower_bound = 0;

  std::optional<int> diameter;
  std::vector<Vertex> cut_vertices;
  std::optional<Applicability> blocks_complete;  // nullopt when disconnected
  std::optional<LewisStructure> lewis;
  std::optional<Diam3Partition> diam3;

  std::vector<Prediction> predictions;
  std::vector<Discrepancy> discrepancies;

  /// Verdict of the family's own theorem, when the input carried parameters.
  std::optional<Prediction> family_prediction() const;
  std::optional<Verdict> family_verdict() const;
};

/// Runs every oracle, recogniser and applicable formula on one graph.
/// Oracles that exceed the budget are recorded in `skipped` instead of
/// failing the report.
DimensionReport analyze(const Graph& g, std::string id,
                        std::optional<FamilySpec> spec = std::nullopt,
                        const OracleBudget& budget = {});

/// Accepts a family spec ("cocktail:6", ...) or a graph6 string. Throws
/// kMalformed on unparseable input.
DimensionReport analyze(std::string_view input, const OracleBudget& budget = {});

ordered_json to_json(const DimensionReport& r);
std::string csv_header();
std::string to_csv_row(const DimensionReport& r);

struct ParameterRange {
  std::string name;
  std::vector<int> values;
};

/// "name=a:b", "name=a:b:step" or "name=v1,v2,...". Throws kBadRange.
ParameterRange parse_range(std::string_view text);

struct SweepRequest {
  std::string family;  // cocktail | twoclique | diam3 | lewis
  std::vector<ParameterRange> ranges;
  int max_n = 11;
  int jobs = 1;
  OracleBudget budget{};
};

struct TagSummary {
  int confirmed = 0;
  int refuted = 0;
};

struct SweepResult {
  std::vector<DimensionReport> reports;
  std::map<std::string, TagSummary> summary;  // keyed by theorem tag
  int skipped_parameters = 0;
};

/// Family instances for the request in lexicographic parameter order. Tuples
/// violating a family constraint, or exceeding max_n, are skipped and counted.
std::vector<FamilySpec> sweep_instances(const SweepRequest& req, int* skipped = nullptr);

/// Evaluates every instance, concurrently when jobs > 1. Output order is the
/// parameter order regardless of completion order.
SweepResult sweep(const SweepRequest& req);

ordered_json to_json(const SweepResult& r);

}  // namespace cdglab

#endif  // CDGLAB_REPORT_HPP
