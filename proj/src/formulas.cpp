#include "cdglab/formulas.hpp"

#include "cdglab/classify.hpp"
#include "cdglab/twins.hpp"

namespace cdglab {

std::string_view to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::kRegular: return "T3_1";
    case TheoremTag::kTwoClique: return "T3_2";
    case TheoremTag::kDiam3Cut: return "T3_5";
    case TheoremTag::kLewis: return "T3_4";
    case TheoremTag::kTwin: return "T5_TWIN";
    case TheoremTag::kChartrand: return "CHARTRAND";
  }
  return "?";
}

std::vector<TheoremTag> all_theorem_tags() {
  return {TheoremTag::kRegular, TheoremTag::kTwoClique, TheoremTag::kDiam3Cut,
          TheoremTag::kLewis, TheoremTag::kTwin, TheoremTag::kChartrand};
}

namespace {

Prediction regular(int n) {
  return {n / 2, TheoremTag::kRegular, "non-complete regular graph on even n: n/2"};
}

Prediction two_clique(int n) {
  return {n - 3, TheoremTag::kTwoClique, "K_{n-m-1} - v - K_m: n-3"};
}

Prediction diam3(int n, int n1) {
  if (n1 == 1) return {n - 3, TheoremTag::kDiam3Cut, "diameter 3 with cut vertex, |rho1| = 1: n-3"};
  return {n - 4, TheoremTag::kDiam3Cut, "diameter 3 with cut vertex, |rho1| >= 2: n-4"};
}

Prediction lewis(int n1, int n2, int s) {
  if (n1 > 0) return {n1 + n2 - s - 1, TheoremTag::kLewis, "Lewis graph, n1 > 0: n1+n2-s-1"};
  return {n2 - s, TheoremTag::kLewis, "Lewis graph, n1 = 0: n2-s"};
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kBadParameter, what);
}

}  // namespace

std::optional<Prediction> predict(const FamilySpec& spec) {
  if (const auto* p = std::get_if<CocktailParty>(&spec)) {
    require(p->n >= 4 && p->n % 2 == 0, "cocktail party needs an even n >= 4");
    return regular(p->n);
  }
  if (const auto* p = std::get_if<TwoCliqueCut>(&spec)) {
    require(p->n >= 4 && p->m >= 1 && p->m <= p->n - p->m - 1,
            "two-clique family needs n >= 4 and 1 <= m <= n-m-1");
    return two_clique(p->n);
  }
  if (const auto* p = std::get_if<Diam3Cut>(&spec)) {
    require(p->n1 >= 1 && p->n3 >= 3 && p->n4 >= 1,
            "diameter-3 family needs n1 >= 1, n3 >= 3, n4 >= 1");
    return diam3(p->order(), p->n1);
  }
  if (const auto* p = std::get_if<LewisSpec>(&spec)) {
    require(p->n1 >= 0 && !p->leaf_counts.empty(), "Lewis family needs n1 >= 0 and a star");
    for (int c : p->leaf_counts) require(c >= 1, "every star needs a leaf");
    return lewis(p->n1, p->n2(), p->s());
  }
  return std::nullopt;
}

std::optional<Prediction> twin_formula(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "twin formula needs a connected graph");
  const TwinPartition tp = twin_partition(g);
  if (tp.has_singleton()) return std::nullopt;
  return Prediction{g.order() - tp.class_count(), TheoremTag::kTwin,
                    "every vertex has a twin: n-r"};
}

namespace {

bool is_path(const Graph& g) {
  if (g.edge_count() != static_cast<std::size_t>(g.order() - 1)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_complete_bipartite(const Graph& g) {
  // Connected: the side of vertex 0 is its non-neighbourhood.
  VertexSet side = g.vertices() - g.neighbors(0);
  VertexSet other = g.vertices() - side;
  if (other.empty() || !is_independent(g, side) || !is_independent(g, other)) return false;
  for (Vertex v : side) {
    if (g.neighbors(v) != other) return false;
  }
  return true;
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet u;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) u.insert(v);
  }
  return u;
}

// K_s + empty(t), s >= 1, t >= 2.
bool is_clique_join_independent(const Graph& g) {
  const VertexSet u = universal_vertices(g);
  const VertexSet rest = g.vertices() - u;
  return !u.empty() && rest.size() >= 2 && is_independent(g, rest);
}

// K_s + (K_1 u K_t), s, t >= 1.
bool is_clique_join_point_and_clique(const Graph& g) {
  const VertexSet u = universal_vertices(g);
  const VertexSet rest = g.vertices() - u;
  if (u.empty() || rest.size() < 2) return false;
  for (Vertex lone : rest) {
    VertexSet others = rest;
    others.erase(lone);
    if ((g.neighbors(lone) & rest).empty() && is_clique(g, others)) return true;
  }
  return false;
}

}  // namespace

std::optional<Prediction> chartrand_dimension(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "classical characterisations need a connected graph");
  }
  const int n = g.order();
  if (n < 2) return std::nullopt;
  if (is_path(g)) return Prediction{1, TheoremTag::kChartrand, "path: 1"};
  if (is_complete(g)) return Prediction{n - 1, TheoremTag::kChartrand, "complete: n-1"};
  if (n >= 4) {
    if (is_complete_bipartite(g)) {
      return Prediction{n - 2, TheoremTag::kChartrand, "K_{s,t}: n-2"};
    }
    if (is_clique_join_independent(g)) {
      return Prediction{n - 2, TheoremTag::kChartrand, "K_s + empty(t): n-2"};
    }
    if (is_clique_join_point_and_clique(g)) {
      return Prediction{n - 2, TheoremTag::kChartrand, "K_s + (K_1 u K_t): n-2"};
    }
  }
  if (is_cycle(g)) return Prediction{2, TheoremTag::kChartrand, "cycle: 2"};
  return std::nullopt;
}

std::vector<Prediction> structural_predictions(const Graph& g) {
  std::vector<Prediction> out;
  if (!is_connected(g)) return out;
  if (auto p = recognize_cocktail_party(g)) out.push_back(regular(p->n));
  if (auto p = recognize_two_clique_cut(g)) out.push_back(two_clique(p->n));
  if (auto p = recognize_diam3_cut(g)) out.push_back(diam3(p->order(), p->n1));
  if (auto p = recognize_lewis(g)) out.push_back(lewis(p->n1(), p->n2(), p->s()));
  return out;
}

}  // namespace cdglab
