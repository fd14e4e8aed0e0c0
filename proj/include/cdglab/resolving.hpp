#ifndef CDGLAB_RESOLVING_HPP
#define CDGLAB_RESOLVING_HPP

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cdglab/graph.hpp"

namespace cdglab {

/// kMetric uses shortest-path distance. kAdjacency uses 0 on the diagonal, 1
/// for adjacent pairs and 2 for everything else, including pairs in different
/// components.
enum class DistanceMode { kMetric, kAdjacency };

std::string_view to_string(DistanceMode mode);

inline constexpr int kDefaultResolvingCap = 14;

struct MetricVector {
  std::vector<Vertex> landmarks;
  std::vector<int> values;

  bool operator==(const MetricVector&) const = default;
};

/// Precomputed distance codes for one graph and one mode. Metric mode on a
/// disconnected graph raises kDisconnected at construction.
class DistanceTable {
 public:
  DistanceTable(const Graph& g, DistanceMode mode);

  int order() const { return n_; }
  DistanceMode mode() const { return mode_; }
  int operator()(Vertex u, Vertex v) const {
    return codes_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)];
  }

 private:
  int n_;
  DistanceMode mode_;
  std::vector<int> codes_;
};

MetricVector representation(const Graph& g, Vertex v, std::span<const Vertex> landmarks,
                            DistanceMode mode = DistanceMode::kMetric);

struct ResolveCheck {
  bool resolving = false;
  /// First pair (u < v, ordered lexicographically) with equal representations.
  std::optional<std::pair<Vertex, Vertex>> collision;
};

ResolveCheck is_resolving(const Graph& g, std::span<const Vertex> landmarks,
                          DistanceMode mode = DistanceMode::kMetric);
ResolveCheck is_resolving(const DistanceTable& table, std::span<const Vertex> landmarks);

struct DimensionResult {
  int value = 0;
  std::vector<Vertex> witness;  // lexicographically smallest minimum set
  DistanceMode mode = DistanceMode::kMetric;
};

/// Exact metric dimension. Searches supersets of the twin core in increasing
/// size and lexicographic order, pruning branches that leave some pair
/// inseparable by every remaining candidate. Throws kDisconnected, and
/// kBudgetExceeded when n > max_vertices.
DimensionResult metric_dimension(const Graph& g, int max_vertices = kDefaultResolvingCap);

/// Exact adjacency dimension; connectivity is not required.
DimensionResult adjacency_dimension(const Graph& g, int max_vertices = kDefaultResolvingCap);

DimensionResult exact_dimension(const Graph& g, DistanceMode mode,
                                int max_vertices = kDefaultResolvingCap);

/// Greedy landmark selection: repeatedly adds the vertex that separates the
/// most still-colliding pairs (smallest index on ties).
DimensionResult greedy_dimension_upper_bound(const Graph& g, DistanceMode mode);

}  // namespace cdglab

#endif  // CDGLAB_RESOLVING_HPP
