#ifndef CDGLAB_GRAPH_HPP
#define CDGLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdglab/error.hpp"
#include "cdglab/vertex_set.hpp"

namespace cdglab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64). Each
/// adjacency row is a VertexSet. Labels are display metadata only and take
/// no part in equality.
class Graph {
 public:
  /// Builds from an edge list. Duplicate edges are merged; a loop raises
  /// kLoop, an endpoint outside 0..n-1 raises kOutOfRange.
  Graph(int n, const std::vector<Edge>& edges,
        std::vector<std::string> labels = {});

  static Graph from_rows(std::vector<VertexSet> rows,
                         std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return rows_[v]; }
  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
  }
  int degree(Vertex v) const { return rows_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Subgraph induced on `keep`, renumbered in increasing index order.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  explicit Graph(std::vector<VertexSet> rows, std::vector<std::string> labels);
  void set_labels(std::vector<std::string> labels);

  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

/// Convenience wrapper matching the build contract.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// All-pairs shortest path lengths. Unreachable pairs are an explicit state,
/// never a large integer.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  bool reachable(Vertex u, Vertex v) const { return d_[index(u, v)] >= 0; }
  /// nullopt when u and v lie in different components.
  std::optional<int> operator()(Vertex u, Vertex v) const {
    int d = d_[index(u, v)];
    if (d < 0) return std::nullopt;
    return d;
  }
  /// Distance for a pair known to be reachable; throws kDisconnected otherwise.
  int at(Vertex u, Vertex v) const;
  bool connected() const { return connected_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<std::int8_t> d_;
  bool connected_ = true;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Vertices reachable from `start` without passing through `removed`.
VertexSet component_of(const Graph& g, Vertex start, VertexSet removed = {});
int component_count(const Graph& g, VertexSet removed = {});
bool is_connected(const Graph& g);

/// Largest finite distance; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

/// Articulation points via DFS low-link.
VertexSet cut_vertices(const Graph& g);

/// Maximal biconnected vertex sets (bridges give 2-sets). Each block is
/// sorted and the list is ordered lexicographically. Throws kDisconnected.
std::vector<std::vector<Vertex>> blocks(const Graph& g);

Graph complement(const Graph& g);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
bool is_regular(const Graph& g);

}  // namespace cdglab

#endif  // CDGLAB_GRAPH_HPP
