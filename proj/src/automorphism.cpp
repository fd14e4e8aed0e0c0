#include "cdglab/automorphism.hpp"

#include <algorithm>
#include <set>

#include "cdglab/twins.hpp"

namespace cdglab {

bool Permutation::is_identity() const { return moved().empty(); }

VertexSet Permutation::moved() const {
  VertexSet s;
  for (int v = 0; v < size(); ++v) {
    if (image[v] != v) s.insert(v);
  }
  return s;
}

bool Permutation::is_automorphism_of(const Graph& g) const {
  if (size() != g.order()) return false;
  VertexSet seen;
  for (Vertex v : image) {
    if (v < 0 || v >= size() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(image[u], image[v])) return false;
    }
  }
  return true;
}

namespace {

struct Signature {
  int degree;
  std::vector<int> neighbor_degrees;
  std::vector<int> distance_profile;  // last slot counts unreachable vertices

  bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d(g);
  std::vector<Signature> out;
  for (Vertex v = 0; v < n; ++v) {
    Signature s{g.degree(v), {}, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    for (Vertex w : g.neighbors(v)) s.neighbor_degrees.push_back(g.degree(w));
    std::sort(s.neighbor_degrees.begin(), s.neighbor_degrees.end());
    for (Vertex w = 0; w < n; ++w) {
      auto dist = d(v, w);
      ++s.distance_profile[dist ? static_cast<std::size_t>(*dist) : static_cast<std::size_t>(n)];
    }
    out.push_back(std::move(s));
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, AutomorphismBudget budget)
      : g_(g), budget_(budget), image_(static_cast<std::size_t>(g.order()), -1) {
    const auto sig = signatures(g);
    const int n = g.order();
    candidates_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex c = 0; c < n; ++c) {
        if (sig[v] == sig[c]) candidates_[v].push_back(c);
      }
    }
  }

  AutGroup run() {
    extend(0);
    return std::move(group_);
  }

 private:
  void extend(Vertex v) {
    const int n = g_.order();
    if (v == n) {
      Permutation p{image_};
      if (!p.is_automorphism_of(g_)) return;
      if (group_.elements.size() >= budget_.max_order) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "automorphism group order exceeds " + std::to_string(budget_.max_order));
      }
      group_.elements.push_back(std::move(p));
      return;
    }
    for (Vertex c : candidates_[v]) {
      if (used_.contains(c)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = g_.adjacent(u, v) == g_.adjacent(image_[u], c);
      }
      if (!consistent) continue;
      image_[v] = c;
      used_.insert(c);
      extend(v + 1);
      used_.erase(c);
      image_[v] = -1;
    }
  }

  const Graph& g_;
  AutomorphismBudget budget_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> image_;
  VertexSet used_;
  AutGroup group_;
};

// Each nontrivial automorphism must move some base vertex, so a base is a
// hitting set for the distinct moved-point sets.
std::vector<VertexSet> moved_sets(const AutGroup& group) {
  std::set<std::uint64_t> masks;
  for (const Permutation& p : group.elements) {
    VertexSet m = p.moved();
    if (!m.empty()) masks.insert(m.bits());
  }
  std::vector<VertexSet> out;
  for (std::uint64_t m : masks) out.emplace_back(m);
  return out;
}

bool hits_all(const std::vector<VertexSet>& sets, VertexSet s) {
  return std::all_of(sets.begin(), sets.end(),
                     [s](VertexSet m) { return !(m & s).empty(); });
}

}  // namespace

AutGroup automorphisms(const Graph& g, AutomorphismBudget budget) {
  if (g.order() > budget.max_vertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                "automorphism enumeration is capped at " +
                    std::to_string(budget.max_vertices) + " vertices");
  }
  return Enumerator(g, budget).run();
}

std::optional<Permutation> stabilizer_witness(const AutGroup& group, VertexSet s) {
  for (const Permutation& p : group.elements) {
    if (!p.is_identity() && p.fixes_pointwise(s)) return p;
  }
  return std::nullopt;
}

bool is_base(const AutGroup& group, VertexSet s) {
  return !stabilizer_witness(group, s).has_value();
}

bool is_base(const Graph& g, VertexSet s, AutomorphismBudget budget) {
  return is_base(automorphisms(g, budget), s);
}

BaseResult base_size(const AutGroup& group, const Graph& g) {
  const std::vector<VertexSet> sets = moved_sets(group);
  const VertexSet core = twin_core(twin_partition(g));
  const std::vector<Vertex> free = (g.vertices() - core).to_vector();

  std::vector<Vertex> chosen;
  // Lexicographic DFS over supersets of the twin core; a branch dies when
  // some unhit moved set has no member among the remaining candidates.
  auto descend = [&](auto&& self, VertexSet current, std::size_t pos,
                     std::size_t remaining) -> bool {
    if (remaining == 0) return hits_all(sets, current);
    for (std::size_t i = pos; i + remaining <= free.size(); ++i) {
      VertexSet next = current;
      next.insert(free[i]);
      VertexSet later;
      for (std::size_t j = i + 1; j < free.size(); ++j) later.insert(free[j]);
      const bool feasible = std::all_of(sets.begin(), sets.end(), [&](VertexSet m) {
        return !(m & next).empty() || (remaining > 1 && !(m & later).empty());
      });
      if (!feasible) continue;
      chosen.push_back(free[i]);
      if (self(self, next, i + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t extra = 0; extra <= free.size(); ++extra) {
    chosen.clear();
    if (descend(descend, core, 0, extra)) {
      VertexSet witness = core | VertexSet::from(chosen);
      return {witness.size(), witness.to_vector()};
    }
  }
  throw Error(ErrorCode::kBadParameter, "base search exhausted without a base");
}

BaseResult base_size(const Graph& g, AutomorphismBudget budget) {
  return base_size(automorphisms(g, budget), g);
}

}  // namespace cdglab
