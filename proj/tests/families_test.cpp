#include <gtest/gtest.h>

#include <algorithm>

#include "cdglab/automorphism.hpp"
#include "cdglab/families.hpp"
#include "cdglab/graph6.hpp"
#include "oracles.hpp"

namespace cdglab {
namespace {

// Isomorphism by trying every bijection; fine for n <= 8.
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  for (int i = 0; i < a.order(); ++i) p[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u) {
      for (int v = u + 1; v < a.order() && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kMalformed;
}

TEST(CocktailParty, Construction) {
  EXPECT_TRUE(isomorphic(cocktail_party(6), fixture(FixtureId::kRegular)));
  EXPECT_TRUE(isomorphic(cocktail_party(4), oracle::cycle(4)));
  EXPECT_EQ(code_of([] { cocktail_party(5); }), ErrorCode::kBadParameter);
  EXPECT_EQ(code_of([] { cocktail_party(2); }), ErrorCode::kBadParameter);
}

TEST(TwoCliqueCut, Construction) {
  EXPECT_TRUE(isomorphic(two_clique_cut(6, 2), fixture(FixtureId::kTwoBlock)));
  // Paw: triangle with a pendant vertex.
  EXPECT_TRUE(isomorphic(two_clique_cut(4, 1), build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})));
  // Bowtie: two triangles sharing the joining vertex.
  EXPECT_TRUE(isomorphic(two_clique_cut(5, 2),
                         build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})));
  EXPECT_EQ(code_of([] { two_clique_cut(6, 3); }), ErrorCode::kBadParameter);
  EXPECT_EQ(code_of([] { two_clique_cut(6, 0); }), ErrorCode::kBadParameter);
}

TEST(Diam3Cut, Construction) {
  EXPECT_TRUE(isomorphic(diam3_cut(1, 3, 1), fixture(FixtureId::kDiam3)));
  Graph g = diam3_cut(2, 3, 1);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(diameter(g), 3);
  EXPECT_EQ(cut_vertices(g), (VertexSet{Diam3Cut{2, 3, 1}.cut_vertex()}));
  EXPECT_EQ(code_of([] { diam3_cut(1, 2, 1); }), ErrorCode::kBadParameter);
  EXPECT_EQ(code_of([] { diam3_cut(0, 3, 1); }), ErrorCode::kBadParameter);
}

TEST(LewisGraph, Construction) {
  EXPECT_TRUE(isomorphic(lewis_graph(1, {2, 1}), fixture(FixtureId::kFitting)));
  Graph tiny = lewis_graph(0, {1});
  EXPECT_EQ(tiny.order(), 2);
  EXPECT_EQ(tiny.edge_count(), 0U);
  Graph g = lewis_graph(2, {3});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.degree(0), 5);
  EXPECT_EQ(g.degree(1), 5);
  EXPECT_EQ(g.degree(2), 2);  // star centre misses its three leaves
  EXPECT_EQ(code_of([] { lewis_graph(1, {}); }), ErrorCode::kBadParameter);
  EXPECT_EQ(code_of([] { lewis_graph(1, {0}); }), ErrorCode::kBadParameter);
}

TEST(LewisSpec, Counts) {
  LewisSpec s{1, {2, 1}};
  EXPECT_EQ(s.n2(), 3);
  EXPECT_EQ(s.n3(), 2);
  EXPECT_EQ(s.s(), 1);
  EXPECT_EQ(s.order(), 6);
}

TEST(Fixtures, Shapes) {
  Graph fit = fixture(FixtureId::kFitting);
  EXPECT_EQ(fit.order(), 6);
  EXPECT_EQ(fit.edge_count(), 12U);
  std::vector<int> degrees;
  for (Vertex v = 0; v < 6; ++v) degrees.push_back(fit.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{3, 4, 4, 4, 4, 5}));

  Graph reg = fixture(FixtureId::kRegular);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(reg.degree(v), 4);

  Graph two = fixture(FixtureId::kTwoBlock);
  EXPECT_EQ(blocks(two), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {3, 4, 5}}));
  EXPECT_TRUE(is_clique(two, VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(is_clique(two, VertexSet{3, 4, 5}));
}

TEST(Fixtures, Ids) {
  for (auto id : all_fixtures()) EXPECT_EQ(parse_fixture_id(to_string(id)), id);
  EXPECT_EQ(code_of([] { parse_fixture_id("FIG_NOPE"); }), ErrorCode::kUnknownId);
}

TEST(FamilySpecText, RoundTrip) {
  const std::vector<std::string> texts{"cocktail:6", "twoclique:6,2", "diam3:1,3,1",
                                       "lewis:1:2,1", "lewis:0:3", "fixture:FIG_DIAM3"};
  for (const auto& t : texts) {
    EXPECT_TRUE(looks_like_family_spec(t)) << t;
    EXPECT_EQ(to_text(parse_family_spec(t)), t);
  }
  EXPECT_EQ(std::get<TwoCliqueCut>(parse_family_spec("twoclique:6,2")), (TwoCliqueCut{6, 2}));
  EXPECT_FALSE(looks_like_family_spec("Bw"));
}

TEST(FamilySpecText, Malformed) {
  for (const char* bad : {"cocktail:", "cocktail:x", "twoclique:6", "diam3:1,2", "lewis:1",
                          "lewis:1:", "nope:3", "cocktail:6,1"}) {
    EXPECT_EQ(code_of([&] { parse_family_spec(bad); }), ErrorCode::kMalformed) << bad;
  }
}

TEST(MakeGraph, DispatchesOnVariant) {
  EXPECT_EQ(make_graph(CocktailParty{8}), cocktail_party(8));
  EXPECT_EQ(make_graph(Fixture{FixtureId::kDiam3}), fixture(FixtureId::kDiam3));
  EXPECT_EQ(make_graph(LewisSpec{1, {2, 1}}), lewis_graph(1, {2, 1}));
}

}  // namespace
}  // namespace cdglab
