#include "cdglab/twins.hpp"

#include <algorithm>
#include <map>

namespace cdglab {

std::string_view to_string(TwinKind kind) {
  switch (kind) {
    case TwinKind::kNone: return "NONE";
    case TwinKind::kOpen: return "OPEN";
    case TwinKind::kClosed: return "CLOSED";
    case TwinKind::kSingleton: return "SINGLETON";
  }
  return "NONE";
}

bool TwinPartition::has_singleton() const {
  return std::any_of(classes.begin(), classes.end(), [](const TwinClass& c) {
    return c.kind == TwinKind::kSingleton;
  });
}

std::vector<int> TwinPartition::class_of(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex v : classes[i].members) out[v] = static_cast<int>(i);
  }
  return out;
}

TwinKind twin_type(const Graph& g, Vertex u, Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::kSameVertex, "twin_type needs two distinct vertices");
  }
  if (g.neighbors(u) == g.neighbors(v)) return TwinKind::kOpen;
  if (g.closed_neighbors(u) == g.closed_neighbors(v)) return TwinKind::kClosed;
  return TwinKind::kNone;
}

TwinPartition twin_partition(const Graph& g) {
  const int n = g.order();
  // Group by open and by closed neighbourhood signature. A vertex can sit in a
  // nontrivial group of at most one of the two kinds.
  std::map<std::uint64_t, VertexSet> open_groups;
  std::map<std::uint64_t, VertexSet> closed_groups;
  for (Vertex v = 0; v < n; ++v) {
    open_groups[g.neighbors(v).bits()].insert(v);
    closed_groups[g.closed_neighbors(v).bits()].insert(v);
  }

  std::vector<int> assigned(static_cast<std::size_t>(n), 0);
  TwinPartition tp;
  auto take = [&](const std::map<std::uint64_t, VertexSet>& groups, TwinKind kind) {
    for (const auto& [sig, members] : groups) {
      if (members.size() < 2) continue;
      for (Vertex v : members) assigned[v] = 1;
      tp.classes.push_back({members.to_vector(), kind});
    }
  };
  take(open_groups, TwinKind::kOpen);
  take(closed_groups, TwinKind::kClosed);
  for (Vertex v = 0; v < n; ++v) {
    if (!assigned[v]) tp.classes.push_back({{v}, TwinKind::kSingleton});
  }
  std::sort(tp.classes.begin(), tp.classes.end(),
            [](const TwinClass& a, const TwinClass& b) {
              return a.members.front() < b.members.front();
            });
  return tp;
}

int twin_lower_bound(const TwinPartition& tp) {
  int total = 0;
  for (const TwinClass& c : tp.classes) total += static_cast<int>(c.members.size()) - 1;
  return total;
}

VertexSet twin_core(const TwinPartition& tp) {
  VertexSet core;
  for (const TwinClass& c : tp.classes) {
    for (std::size_t i = 0; i + 1 < c.members.size(); ++i) core.insert(c.members[i]);
  }
  return core;
}

}  // namespace cdglab
