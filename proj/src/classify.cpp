#include "cdglab/classify.hpp"

#include <algorithm>

namespace cdglab {

int LewisStructure::n2() const {
  int total = 0;
  for (const Star& s : stars) total += static_cast<int>(s.leaves.size());
  return total;
}

int LewisStructure::s() const {
  int count = 0;
  for (const Star& s : stars) count += s.leaves.size() >= 2;
  return count;
}

LewisSpec LewisStructure::to_spec() const {
  LewisSpec spec{n1(), {}};
  for (const Star& s : stars) spec.leaf_counts.push_back(static_cast<int>(s.leaves.size()));
  return spec;
}

std::optional<LewisStructure> recognize_lewis(const Graph& g) {
  const int n = g.order();
  const Graph co = complement(g);
  LewisStructure out;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      out.universal.insert(v);
    } else {
      rest.insert(v);
    }
  }
  VertexSet left = rest;
  while (!left.empty()) {
    const VertexSet comp = component_of(co, left.min(), out.universal);
    left = left - comp;
    const int size = comp.size();
    std::size_t edges = 0;
    for (Vertex v : comp) edges += static_cast<std::size_t>(co.degree(v));
    if (edges / 2 != static_cast<std::size_t>(size - 1)) return std::nullopt;

    Star star{-1, {}};
    if (size == 2) {
      star.centre = comp.min();
    } else {
      for (Vertex v : comp) {
        if (co.degree(v) == size - 1) star.centre = v;
      }
      if (star.centre < 0) return std::nullopt;
    }
    VertexSet leaves = comp;
    leaves.erase(star.centre);
    for (Vertex leaf : leaves) {
      if (co.degree(leaf) != 1) return std::nullopt;
    }
    star.leaves = leaves.to_vector();
    out.stars.push_back(std::move(star));
  }
  return out;
}

Diam3Result diam3_partition(const Graph& g) {
  const DistanceMatrix d(g);
  if (!d.connected()) {
    throw Error(ErrorCode::kDisconnected, "diameter-3 partition needs a connected graph");
  }
  const int n = g.order();
  Vertex anchor = -1;
  for (Vertex r = 0; r < n && anchor < 0; ++r) {
    for (Vertex s = 0; s < n; ++s) {
      if (d.at(r, s) == 3) {
        anchor = r;
        break;
      }
    }
  }
  auto diam = diameter(g);
  if (anchor < 0 || diam != 3) return Diam3Rejection{"diameter is not 3"};

  Diam3Partition p{};
  p.anchor = anchor;
  for (Vertex v = 0; v < n; ++v) {
    if (d.at(anchor, v) == 3) p.rho4.insert(v);
    if (d.at(anchor, v) == 2) p.rho3.insert(v);
  }
  p.rho1.insert(anchor);
  for (Vertex v : g.neighbors(anchor)) {
    if ((g.neighbors(v) & p.rho3).empty()) {
      p.rho1.insert(v);
    } else {
      p.rho2.insert(v);
    }
  }

  auto edges_between = [&g](VertexSet a, VertexSet b) {
    for (Vertex v : a) {
      if (!(g.neighbors(v) & b).empty()) return true;
    }
    return false;
  };
  if (p.rho1.empty() || p.rho2.empty() || p.rho3.empty() || p.rho4.empty()) {
    return Diam3Rejection{"some rho set is empty"};
  }
  if (p.rho3.size() < 3) return Diam3Rejection{"rho3 has fewer than 3 vertices"};
  if (!is_clique(g, p.rho1 | p.rho2)) return Diam3Rejection{"rho1 and rho2 do not induce a clique"};
  if (!is_clique(g, p.rho3 | p.rho4)) return Diam3Rejection{"rho3 and rho4 do not induce a clique"};
  if (edges_between(p.rho1, p.rho3 | p.rho4)) {
    return Diam3Rejection{"rho1 has a neighbour in rho3 or rho4"};
  }
  if (edges_between(p.rho4, p.rho1 | p.rho2)) {
    return Diam3Rejection{"rho4 has a neighbour in rho1 or rho2"};
  }
  for (Vertex v : p.rho2) {
    if ((g.neighbors(v) & p.rho3).empty()) return Diam3Rejection{"a rho2 vertex has no rho3 neighbour"};
  }
  for (Vertex v : p.rho3) {
    if ((g.neighbors(v) & p.rho2).empty()) return Diam3Rejection{"a rho3 vertex has no rho2 neighbour"};
  }
  return p;
}

std::string_view to_string(Applicability a) {
  switch (a) {
    case Applicability::kTrue: return "true";
    case Applicability::kFalse: return "false";
    case Applicability::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

Applicability check_blocks_complete(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "block check needs a connected graph");
  }
  if (g.order() < 3 || cut_vertices(g).empty()) return Applicability::kNotApplicable;
  auto diam = diameter(g);
  if (!diam || *diam > 2) return Applicability::kNotApplicable;
  for (const auto& b : blocks(g)) {
    if (!is_clique(g, VertexSet::from(b))) return Applicability::kFalse;
  }
  return Applicability::kTrue;
}

CutVertexResult unique_cut_vertex(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "cut vertex query needs a connected graph");
  }
  const VertexSet cuts = cut_vertices(g);
  if (cuts.empty()) return {CutVertexResult::Kind::kNone, std::nullopt, cuts};
  if (cuts.size() == 1) return {CutVertexResult::Kind::kUnique, cuts.min(), cuts};
  return {CutVertexResult::Kind::kMultiple, std::nullopt, cuts};
}

bool regular_cdg_admissible(const Graph& g) {
  if (!is_regular(g)) throw Error(ErrorCode::kNotRegular, "graph is not regular");
  const int n = g.order();
  const int k = g.degree(0);
  return k == n - 1 || k == n - 2;
}

std::optional<TwoCliqueCut> recognize_two_clique_cut(const Graph& g) {
  const int n = g.order();
  if (n < 4 || !is_connected(g)) return std::nullopt;
  const auto cut = unique_cut_vertex(g);
  if (cut.kind != CutVertexResult::Kind::kUnique) return std::nullopt;
  const Vertex v = *cut.vertex;
  if (g.degree(v) != n - 1) return std::nullopt;
  VertexSet removed{v};
  if (component_count(g, removed) != 2) return std::nullopt;
  VertexSet first = component_of(g, (g.vertices() - removed).min(), removed);
  VertexSet second = g.vertices() - removed - first;
  if (!is_clique(g, first) || !is_clique(g, second)) return std::nullopt;
  const int m = std::min(first.size(), second.size());
  return TwoCliqueCut{n, m};
}

std::optional<CocktailParty> recognize_cocktail_party(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0 || !is_regular(g) || g.degree(0) != n - 2) return std::nullopt;
  return CocktailParty{n};
}

std::optional<Diam3Cut> recognize_diam3_cut(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  const auto result = diam3_partition(g);
  const auto* p = std::get_if<Diam3Partition>(&result);
  if (p == nullptr || p->rho2.size() != 1) return std::nullopt;
  if (!cut_vertices(g).contains(p->rho2.min())) return std::nullopt;
  return Diam3Cut{p->rho1.size(), p->rho3.size(), p->rho4.size()};
}

}  // namespace cdglab
