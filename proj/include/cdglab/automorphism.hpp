#ifndef CDGLAB_AUTOMORPHISM_HPP
#define CDGLAB_AUTOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cdglab/graph.hpp"

namespace cdglab {

inline constexpr int kDefaultAutomorphismCap = 12;
inline constexpr std::size_t kDefaultGroupOrderCap = 500'000;

struct Permutation {
  std::vector<Vertex> image;

  int size() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  /// Vertices not fixed by this permutation.
  VertexSet moved() const;
  bool fixes_pointwise(VertexSet s) const { return (moved() & s).empty(); }
  bool is_automorphism_of(const Graph& g) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

/// Every automorphism listed explicitly, in lexicographic order of images.
/// The identity is always first.
struct AutGroup {
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
};

struct AutomorphismBudget {
  int max_vertices = kDefaultAutomorphismCap;
  std::size_t max_order = kDefaultGroupOrderCap;
};

/// Backtracking enumeration. Candidate images are filtered by a vertex
/// signature (degree, neighbour degree multiset, distance profile); every
/// accepted permutation is still checked edge by edge. Throws
/// kBudgetExceeded when n or the group order exceeds the budget.
AutGroup automorphisms(const Graph& g, AutomorphismBudget budget = {});

/// A nontrivial automorphism fixing `s` pointwise, if one exists.
std::optional<Permutation> stabilizer_witness(const AutGroup& group, VertexSet s);

bool is_base(const AutGroup& group, VertexSet s);
bool is_base(const Graph& g, VertexSet s, AutomorphismBudget budget = {});

struct BaseResult {
  int value = 0;
  std::vector<Vertex> witness;  // lexicographically smallest minimum base
};

BaseResult base_size(const AutGroup& group, const Graph& g);
BaseResult base_size(const Graph& g, AutomorphismBudget budget = {});

}  // namespace cdglab

#endif  // CDGLAB_AUTOMORPHISM_HPP
