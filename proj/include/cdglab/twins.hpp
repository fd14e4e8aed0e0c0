#ifndef CDGLAB_TWINS_HPP
#define CDGLAB_TWINS_HPP

#include <string_view>
#include <vector>

#include "cdglab/graph.hpp"

namespace cdglab {

enum class TwinKind { kNone, kOpen, kClosed, kSingleton };

std::string_view to_string(TwinKind kind);

struct TwinClass {
  std::vector<Vertex> members;  // sorted
  TwinKind kind;

  VertexSet as_set() const { return VertexSet::from(members); }
};

/// Twin classes ordered by their smallest member. Classes of size one are
/// kSingleton; larger ones are kOpen or kClosed, never mixed.
struct TwinPartition {
  std::vector<TwinClass> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  bool has_singleton() const;
  /// Index into `classes` for each vertex.
  std::vector<int> class_of(int n) const;
};

/// kOpen iff N(u) = N(v) (u, v non-adjacent); kClosed iff N[u] = N[v];
/// kNone otherwise. Throws kSameVertex when u == v.
TwinKind twin_type(const Graph& g, Vertex u, Vertex v);

TwinPartition twin_partition(const Graph& g);

/// Sum of (|class| - 1): any resolving set or base keeps all but at most one
/// vertex of every class.
int twin_lower_bound(const TwinPartition& tp);

/// All members of each class except the largest index. This set is contained
/// in the lexicographically smallest minimum resolving set and minimum base.
VertexSet twin_core(const TwinPartition& tp);

}  // namespace cdglab

#endif  // CDGLAB_TWINS_HPP
