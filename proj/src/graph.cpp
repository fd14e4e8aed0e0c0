#include "cdglab/graph.hpp"

#include <algorithm>
#include <functional>

namespace cdglab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoop: return "LOOP";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kMalformed: return "MALFORMED";
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kSameVertex: return "SAME_VERTEX";
    case ErrorCode::kBadParameter: return "BAD_PARAMETER";
    case ErrorCode::kUnknownId: return "UNKNOWN_ID";
    case ErrorCode::kNotRegular: return "NOT_REGULAR";
    case ErrorCode::kBadRange: return "BAD_RANGE";
  }
  return "UNKNOWN";
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex count " + std::to_string(n) + " outside 1..64");
  }
}

}  // namespace

Graph::Graph(std::vector<VertexSet> rows, std::vector<std::string> labels)
    : rows_(std::move(rows)) {
  set_labels(std::move(labels));
}

Graph::Graph(int n, const std::vector<Edge>& edges,
             std::vector<std::string> labels) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::kLoop, "self-loop at vertex " + std::to_string(u));
    }
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  set_labels(std::move(labels));
}

Graph Graph::from_rows(std::vector<VertexSet> rows,
                       std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::range(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v].contains(v)) {
      throw Error(ErrorCode::kLoop, "self-loop at vertex " + std::to_string(v));
    }
    if (!(rows[v] - all).empty()) {
      throw Error(ErrorCode::kOutOfRange, "row " + std::to_string(v) +
                                              " names a vertex >= n");
    }
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) {
        throw Error(ErrorCode::kMalformed, "adjacency rows are not symmetric");
      }
    }
  }
  return Graph(std::move(rows), std::move(labels));
}

void Graph::set_labels(std::vector<std::string> labels) {
  const int n = order();
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v + 1));
  } else if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kBadParameter, "label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const VertexSet& r : rows_) twice += static_cast<std::size_t>(r.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (Vertex v : rows_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<Vertex> old = keep.to_vector();
  std::vector<int> renumber(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < old.size(); ++i) renumber[old[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(old.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < old.size(); ++i) {
    for (Vertex w : rows_[old[i]] & keep) rows[i].insert(renumber[w]);
    labels.push_back(labels_[old[i]]);
  }
  return Graph(std::move(rows), std::move(labels));
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()),
      d_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1) {
  for (Vertex s = 0; s < n_; ++s) {
    VertexSet seen{s};
    VertexSet frontier{s};
    d_[index(s, s)] = 0;
    for (int level = 1; !frontier.empty(); ++level) {
      VertexSet next;
      for (Vertex u : frontier) next = next | g.neighbors(u);
      next = next - seen;
      for (Vertex v : next) d_[index(s, v)] = static_cast<std::int8_t>(level);
      seen = seen | next;
      frontier = next;
    }
    if (seen.size() != n_) connected_ = false;
  }
}

int DistanceMatrix::at(Vertex u, Vertex v) const {
  int d = d_[index(u, v)];
  if (d < 0) {
    throw Error(ErrorCode::kDisconnected, "vertices " + std::to_string(u) +
                                              " and " + std::to_string(v) +
                                              " are in different components");
  }
  return d;
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

VertexSet component_of(const Graph& g, Vertex start, VertexSet removed) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next = next | g.neighbors(u);
    next = next - seen - removed;
    seen = seen | next;
    frontier = next;
  }
  return seen;
}

int component_count(const Graph& g, VertexSet removed) {
  VertexSet left = g.vertices() - removed;
  int count = 0;
  while (!left.empty()) {
    left = left - component_of(g, left.min(), removed);
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::optional<int> diameter(const Graph& g) {
  DistanceMatrix d(g);
  if (!d.connected()) return std::nullopt;
  int best = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) best = std::max(best, d.at(u, v));
  }
  return best;
}

namespace {

// Hopcroft-Tarjan DFS shared by cut vertex and block extraction.
struct LowLink {
  explicit LowLink(const Graph& g)
      : g(g), disc(static_cast<std::size_t>(g.order()), -1),
        low(static_cast<std::size_t>(g.order()), 0) {}

  void run() {
    for (Vertex r = 0; r < g.order(); ++r) {
      if (disc[r] >= 0) continue;
      int children = visit(r, -1);
      if (children > 1) cuts.insert(r);
      if (children == 0) block_sets.push_back({r});
    }
  }

  int visit(Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex v : g.neighbors(u)) {
      if (disc[v] < 0) {
        ++children;
        edge_stack.emplace_back(u, v);
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent >= 0) cuts.insert(u);
          VertexSet block;
          while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{u, v}) break;
          }
          block_sets.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
    return children;
  }

  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  int timer = 0;
  std::vector<Edge> edge_stack;
  VertexSet cuts;
  std::vector<VertexSet> block_sets;
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  LowLink ll(g);
  ll.run();
  return ll.cuts;
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "blocks require a connected graph");
  }
  LowLink ll(g);
  ll.run();
  std::vector<std::vector<Vertex>> out;
  for (VertexSet b : ll.block_sets) out.push_back(b.to_vector());
  std::sort(out.begin(), out.end());
  return out;
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows;
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet r = all - g.neighbors(v);
    r.erase(v);
    rows.push_back(r);
  }
  return Graph::from_rows(std::move(rows), g.labels());
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!((others - g.neighbors(v)).empty())) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

}  // namespace cdglab
