// Deliberately naive reference implementations. None of them shares code
// with the library beyond the Graph container, so agreement is meaningful.
#ifndef CDGLAB_TESTS_ORACLES_HPP
#define CDGLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cdglab/graph.hpp"

namespace oracle {

using cdglab::Graph;
using cdglab::Vertex;

constexpr int kUnreachable = -1;

inline std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && d[s][v] == kUnreachable) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
      }
    }
  }
  return d;
}

inline bool connected(const Graph& g) {
  auto d = oracle::bfs_distances(g);
  for (int v = 0; v < g.order(); ++v) {
    if (d[0][v] == kUnreachable) return false;
  }
  return true;
}

// Adjacency codes: 0 on the diagonal, 1 adjacent, 2 otherwise.
inline std::vector<std::vector<int>> codes(const Graph& g, bool adjacency) {
  if (!adjacency) return oracle::bfs_distances(g);
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, 2));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) d[u][v] = u == v ? 0 : (g.adjacent(u, v) ? 1 : 2);
  }
  return d;
}

inline bool resolves(const std::vector<std::vector<int>>& d, const std::vector<int>& w) {
  std::set<std::vector<int>> seen;
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<int> r;
    for (int x : w) r.push_back(d[v][x]);
    if (!seen.insert(r).second) return false;
  }
  return true;
}

// Every k-subset of 0..n-1 by bitmask, no pruning at all.
inline bool some_subset_resolves(const Graph& g, int k, bool adjacency = false) {
  const auto d = oracle::codes(g, adjacency);
  const int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    std::vector<int> w;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) w.push_back(i);
    }
    if (resolves(d, w)) return true;
  }
  return false;
}

inline int dimension(const Graph& g, bool adjacency = false) {
  for (int k = 0; k <= g.order(); ++k) {
    if (some_subset_resolves(g, k, adjacency)) return k;
  }
  return g.order();
}

// Every permutation via std::next_permutation, kept when it preserves edges.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int base_size(const Graph& g) {
  const auto group = oracle::automorphisms(g);
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (__builtin_popcountll(mask) != k) continue;
      int fixing = 0;
      for (const auto& p : group) {
        bool fixes = true;
        for (int i = 0; i < n; ++i) {
          if (((mask >> i) & 1U) && p[i] != i) fixes = false;
        }
        fixing += fixes;
      }
      if (fixing == 1) return k;
    }
  }
  return n;
}

// 0 none, 1 open, 2 closed; compares neighbourhoods vertex by vertex.
inline int twin_kind(const Graph& g, int u, int v) {
  bool open = !g.adjacent(u, v);
  bool closed = g.adjacent(u, v);
  for (int w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return 0;
  }
  return open ? 1 : (closed ? 2 : 0);
}

inline std::vector<int> cut_vertices(const Graph& g) {
  auto components = [&](int removed) {
    const int n = g.order();
    std::vector<int> seen(n, 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
      if (s == removed || seen[s]) continue;
      ++count;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
          if (v != removed && !seen[v] && g.adjacent(u, v)) {
            seen[v] = 1;
            stack.push_back(v);
          }
        }
      }
    }
    return count;
  };
  const int base = components(-1);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (components(v) > base) out.push_back(v);
  }
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<cdglab::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (oracle::connected(g)) return g;
  }
}

// graph6 written straight from the format description, bit by bit.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out += static_cast<char>(value + 63);
  }
  return out;
}

inline Graph path(int n) {
  std::vector<cdglab::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<cdglab::Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<cdglab::Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

inline Graph complete_bipartite(int s, int t) {
  std::vector<cdglab::Edge> e;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
  }
  return Graph(s + t, e);
}

}  // namespace oracle

#endif  // CDGLAB_TESTS_ORACLES_HPP
