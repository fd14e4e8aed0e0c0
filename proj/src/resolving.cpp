#include "cdglab/resolving.hpp"

#include <algorithm>

#include "cdglab/twins.hpp"

namespace cdglab {

std::string_view to_string(DistanceMode mode) {
  return mode == DistanceMode::kMetric ? "METRIC" : "ADJACENCY";
}

DistanceTable::DistanceTable(const Graph& g, DistanceMode mode)
    : n_(g.order()),
      mode_(mode),
      codes_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
  if (mode == DistanceMode::kMetric) {
    DistanceMatrix d(g);
    if (!d.connected()) {
      throw Error(ErrorCode::kDisconnected,
                  "metric representations need a connected graph");
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) codes_[static_cast<std::size_t>(u * n_ + v)] = d.at(u, v);
    }
  } else {
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        codes_[static_cast<std::size_t>(u * n_ + v)] = u == v ? 0 : (g.adjacent(u, v) ? 1 : 2);
      }
    }
  }
}

MetricVector representation(const Graph& g, Vertex v, std::span<const Vertex> landmarks,
                            DistanceMode mode) {
  DistanceTable table(g, mode);
  MetricVector out;
  out.landmarks.assign(landmarks.begin(), landmarks.end());
  for (Vertex w : landmarks) out.values.push_back(table(v, w));
  return out;
}

ResolveCheck is_resolving(const DistanceTable& table, std::span<const Vertex> landmarks) {
  const int n = table.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool same = true;
      for (Vertex w : landmarks) {
        if (table(u, w) != table(v, w)) {
          same = false;
          break;
        }
      }
      if (same) return {false, std::make_pair(u, v)};
    }
  }
  return {true, std::nullopt};
}

ResolveCheck is_resolving(const Graph& g, std::span<const Vertex> landmarks,
                          DistanceMode mode) {
  return is_resolving(DistanceTable(g, mode), landmarks);
}

namespace {

using Labels = std::vector<int>;

// Refines a vertex partition by the distance code to landmark w.
Labels refine(const DistanceTable& table, const Labels& labels, Vertex w) {
  const int n = table.order();
  Labels out(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (labels[u] == labels[v] && table(u, w) == table(v, w)) {
        out[v] = out[u];
        break;
      }
    }
    if (out[v] < 0) out[v] = next++;
  }
  return out;
}

bool all_distinct(const Labels& labels) {
  Labels sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

class ExactSearch {
 public:
  ExactSearch(const DistanceTable& table, std::vector<Vertex> free)
      : table_(table), free_(std::move(free)) {}

  bool run(const Labels& labels, std::size_t remaining) {
    chosen_.clear();
    if (!feasible(labels, 0, remaining)) return false;
    return descend(labels, 0, remaining);
  }

  const std::vector<Vertex>& chosen() const { return chosen_; }

 private:
  bool descend(const Labels& labels, std::size_t pos, std::size_t remaining) {
    if (remaining == 0) return all_distinct(labels);
    for (std::size_t i = pos; i + remaining <= free_.size(); ++i) {
      const Vertex w = free_[i];
      Labels next = refine(table_, labels, w);
      if (!feasible(next, i + 1, remaining - 1)) continue;
      chosen_.push_back(w);
      if (descend(next, i + 1, remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // Every still-colliding pair must be separable by some candidate at or after
  // position `pos`, otherwise no completion of this branch resolves.
  bool feasible(const Labels& labels, std::size_t pos, std::size_t remaining) const {
    const int n = table_.order();
    if (remaining == 0) return all_distinct(labels);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (labels[u] != labels[v]) continue;
        bool separable = false;
        for (std::size_t i = pos; i < free_.size() && !separable; ++i) {
          separable = table_(u, free_[i]) != table_(v, free_[i]);
        }
        if (!separable) return false;
      }
    }
    return true;
  }

  const DistanceTable& table_;
  std::vector<Vertex> free_;
  std::vector<Vertex> chosen_;
};

void check_budget(const Graph& g, int max_vertices, const char* what) {
  if (g.order() > max_vertices) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + " is capped at " + std::to_string(max_vertices) +
                    " vertices, graph has " + std::to_string(g.order()));
  }
}

}  // namespace

DimensionResult exact_dimension(const Graph& g, DistanceMode mode, int max_vertices) {
  check_budget(g, max_vertices, "exact dimension search");
  DistanceTable table(g, mode);
  const int n = g.order();

  // The lexicographically least minimum set contains the twin core: a set
  // missing a lower-indexed twin can swap it in for the omitted one.
  const VertexSet core = twin_core(twin_partition(g));
  Labels labels(static_cast<std::size_t>(n), 0);
  for (Vertex w : core) labels = refine(table, labels, w);

  std::vector<Vertex> free = (g.vertices() - core).to_vector();
  ExactSearch search(table, free);
  for (std::size_t extra = 0; extra <= free.size(); ++extra) {
    if (!search.run(labels, extra)) continue;
    VertexSet witness = core | VertexSet::from(search.chosen());
    return {witness.size(), witness.to_vector(), mode};
  }
  // All n vertices always resolve, so the loop returns above.
  throw Error(ErrorCode::kBadParameter, "exact search exhausted without a resolving set");
}

DimensionResult metric_dimension(const Graph& g, int max_vertices) {
  return exact_dimension(g, DistanceMode::kMetric, max_vertices);
}

DimensionResult adjacency_dimension(const Graph& g, int max_vertices) {
  return exact_dimension(g, DistanceMode::kAdjacency, max_vertices);
}

DimensionResult greedy_dimension_upper_bound(const Graph& g, DistanceMode mode) {
  DistanceTable table(g, mode);
  const int n = g.order();
  Labels labels(static_cast<std::size_t>(n), 0);
  VertexSet chosen;
  auto colliding_pairs = [n](const Labels& l) {
    int count = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) count += l[u] == l[v];
    }
    return count;
  };
  while (!all_distinct(labels)) {
    int best_pairs = colliding_pairs(labels);
    Vertex best = -1;
    Labels best_labels;
    for (Vertex w = 0; w < n; ++w) {
      if (chosen.contains(w)) continue;
      Labels next = refine(table, labels, w);
      int left = colliding_pairs(next);
      if (best < 0 || left < best_pairs) {
        best = w;
        best_pairs = left;
        best_labels = std::move(next);
      }
    }
    chosen.insert(best);
    labels = std::move(best_labels);
  }
  return {chosen.size(), chosen.to_vector(), mode};
}

}  // namespace cdglab
