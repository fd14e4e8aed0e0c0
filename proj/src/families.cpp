#include "cdglab/families.hpp"

#include <charconv>
#include <numeric>

namespace cdglab {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kBadParameter, what);
}

void add_clique(std::vector<Edge>& edges, Vertex first, int count) {
  for (Vertex u = first; u < first + count; ++u) {
    for (Vertex v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
  }
}

}  // namespace

int LewisSpec::n2() const { return std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0); }

int LewisSpec::s() const {
  int count = 0;
  for (int c : leaf_counts) count += c >= 2;
  return count;
}

Graph cocktail_party(int n) {
  if (n < 4 || n % 2 != 0) bad("cocktail_party needs an even n >= 4");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph two_clique_cut(int n, int m) {
  if (n < 4 || m < 1 || m > n - m - 1) bad("two_clique_cut needs n >= 4 and 1 <= m <= n-m-1");
  std::vector<Edge> edges;
  add_clique(edges, 0, m);
  add_clique(edges, m + 1, n - m - 1);
  for (Vertex u = 0; u < n; ++u) {
    if (u != m) edges.emplace_back(u, m);
  }
  return Graph(n, edges);
}

Graph diam3_cut(int n1, int n3, int n4) {
  if (n1 < 1 || n3 < 3 || n4 < 1) bad("diam3_cut needs n1 >= 1, n3 >= 3, n4 >= 1");
  const int n = n1 + 1 + n3 + n4;
  if (n > kMaxVertices) bad("diam3_cut exceeds the vertex cap");
  const Vertex cut = n1;
  std::vector<Edge> edges;
  add_clique(edges, 0, n1 + 1);
  add_clique(edges, n1 + 1, n3 + n4);
  for (Vertex w = n1 + 1; w < n1 + 1 + n3; ++w) edges.emplace_back(cut, w);
  return Graph(n, edges);
}

Graph lewis_graph(int n1, const std::vector<int>& leaf_counts) {
  if (n1 < 0) bad("lewis_graph needs n1 >= 0");
  if (leaf_counts.empty()) bad("lewis_graph needs at least one star");
  int n = n1;
  for (int c : leaf_counts) {
    if (c < 1) bad("every star needs at least one leaf");
    n += c + 1;
  }
  if (n > kMaxVertices) bad("lewis_graph exceeds the vertex cap");
  std::vector<Edge> co_edges;
  Vertex next = n1;
  for (int c : leaf_counts) {
    const Vertex centre = next++;
    for (int i = 0; i < c; ++i) co_edges.emplace_back(centre, next++);
  }
  return complement(Graph(n, co_edges));
}

Graph fixture(FixtureId id) {
  switch (id) {
    case FixtureId::kRegular:
      return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {0, 2}, {2, 4}, {4, 0}, {1, 3}, {3, 5}, {5, 1}});
    case FixtureId::kTwoBlock:
      return Graph(6, {{0, 2}, {2, 3}, {3, 5}, {0, 3}, {3, 4},
                       {4, 5}, {0, 1}, {1, 3}, {1, 2}});
    case FixtureId::kDiam3:
      return Graph(6, {{0, 1}, {1, 3}, {3, 5}, {4, 5}, {1, 4},
                       {1, 2}, {2, 3}, {2, 5}, {2, 4}, {3, 4}});
    case FixtureId::kFitting:
      return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                       {0, 4}, {1, 3}, {2, 4}, {3, 5}, {2, 5}, {1, 5}});
  }
  throw Error(ErrorCode::kUnknownId, "unknown fixture");
}

Graph make_graph(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const CocktailParty& p) const { return cocktail_party(p.n); }
    Graph operator()(const TwoCliqueCut& p) const { return two_clique_cut(p.n, p.m); }
    Graph operator()(const Diam3Cut& p) const { return diam3_cut(p.n1, p.n3, p.n4); }
    Graph operator()(const LewisSpec& p) const { return lewis_graph(p.n1, p.leaf_counts); }
    Graph operator()(const Fixture& p) const { return fixture(p.id); }
  };
  return std::visit(Visitor{}, spec);
}

std::string_view to_string(FixtureId id) {
  switch (id) {
    case FixtureId::kRegular: return "FIG_REGULAR";
    case FixtureId::kTwoBlock: return "FIG_TWOBLOCK";
    case FixtureId::kDiam3: return "FIG_DIAM3";
    case FixtureId::kFitting: return "FIG_FITTING";
  }
  return "?";
}

std::vector<FixtureId> all_fixtures() {
  return {FixtureId::kRegular, FixtureId::kTwoBlock, FixtureId::kDiam3, FixtureId::kFitting};
}

FixtureId parse_fixture_id(std::string_view text) {
  for (FixtureId id : all_fixtures()) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorCode::kUnknownId, "unknown fixture id '" + std::string(text) + "'");
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (true) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data()) {
      throw Error(ErrorCode::kMalformed,
                  "expected an integer list in '" + std::string(whole) + "'",
                  static_cast<std::size_t>(text.data() - whole.data()));
    }
    out.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (text.empty()) return out;
    if (text.front() != ',') {
      throw Error(ErrorCode::kMalformed, "expected ',' in '" + std::string(whole) + "'",
                  static_cast<std::size_t>(text.data() - whole.data()));
    }
    text.remove_prefix(1);
  }
}

std::vector<int> expect_count(std::vector<int> xs, std::size_t count, std::string_view whole) {
  if (xs.size() != count) {
    throw Error(ErrorCode::kMalformed, "wrong parameter count in '" + std::string(whole) + "'");
  }
  return xs;
}

}  // namespace

std::string to_text(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const CocktailParty& p) const {
      return "cocktail:" + std::to_string(p.n);
    }
    std::string operator()(const TwoCliqueCut& p) const {
      return "twoclique:" + join_ints({p.n, p.m});
    }
    std::string operator()(const Diam3Cut& p) const {
      return "diam3:" + join_ints({p.n1, p.n3, p.n4});
    }
    std::string operator()(const LewisSpec& p) const {
      return "lewis:" + std::to_string(p.n1) + ":" + join_ints(p.leaf_counts);
    }
    std::string operator()(const Fixture& p) const {
      return "fixture:" + std::string(to_string(p.id));
    }
  };
  return std::visit(Visitor{}, spec);
}

bool looks_like_family_spec(std::string_view text) {
  for (std::string_view prefix : {"cocktail:", "twoclique:", "diam3:", "lewis:", "fixture:"}) {
    if (text.substr(0, prefix.size()) == prefix) return true;
  }
  return false;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kMalformed, "family spec needs 'family:params'", 0);
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (family == "cocktail") {
    return CocktailParty{expect_count(parse_ints(rest, text), 1, text)[0]};
  }
  if (family == "twoclique") {
    auto p = expect_count(parse_ints(rest, text), 2, text);
    return TwoCliqueCut{p[0], p[1]};
  }
  if (family == "diam3") {
    auto p = expect_count(parse_ints(rest, text), 3, text);
    return Diam3Cut{p[0], p[1], p[2]};
  }
  if (family == "lewis") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) {
      throw Error(ErrorCode::kMalformed, "lewis spec is 'lewis:n1:c1,c2,...'", colon + 1);
    }
    const int n1 = expect_count(parse_ints(rest.substr(0, second), text), 1, text)[0];
    return LewisSpec{n1, parse_ints(rest.substr(second + 1), text)};
  }
  if (family == "fixture") return Fixture{parse_fixture_id(rest)};
  throw Error(ErrorCode::kMalformed, "unknown family '" + std::string(family) + "'", 0);
}

}  // namespace cdglab
