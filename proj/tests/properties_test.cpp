#include <gtest/gtest.h>

#include <random>

#include "cdglab/automorphism.hpp"
#include "cdglab/classify.hpp"
#include "cdglab/families.hpp"
#include "cdglab/resolving.hpp"
#include "cdglab/twins.hpp"
#include "oracles.hpp"

namespace cdglab {
namespace {

std::vector<Graph> sample(unsigned seed, int count, int max_n) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % (max_n - 1);
    out.push_back(oracle::random_connected_graph(rng, n, 0.25 + 0.1 * (i % 6)));
  }
  return out;
}

TEST(Properties, InvariantChainAndBounds) {
  for (const Graph& g : sample(101, 150, 9)) {
    const int dim = metric_dimension(g).value;
    const int adim = adjacency_dimension(g).value;
    const int b = base_size(g).value;
    EXPECT_LE(b, dim);
    EXPECT_LE(dim, adim);
    EXPECT_GE(dim, twin_lower_bound(twin_partition(g)));
    if (diameter(g).value() <= 2) EXPECT_EQ(dim, adim);
  }
}

TEST(Properties, MinimalityAgainstUnprunedEnumerator) {
  for (const Graph& g : sample(202, 150, 9)) {
    const int dim = metric_dimension(g).value;
    EXPECT_TRUE(oracle::some_subset_resolves(g, dim));
    if (dim > 0) EXPECT_FALSE(oracle::some_subset_resolves(g, dim - 1));
  }
}

TEST(Properties, TwinClassesAreTransitive) {
  for (const Graph& g : sample(303, 100, 10)) {
    auto tp = twin_partition(g);
    for (const auto& c : tp.classes) {
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
          EXPECT_EQ(twin_type(g, c.members[i], c.members[j]), c.kind);
        }
      }
    }
  }
}

TEST(Properties, ComplementSwapsTwinKinds) {
  for (const Graph& g : sample(404, 100, 10)) {
    auto a = twin_partition(g);
    auto b = twin_partition(complement(g));
    ASSERT_EQ(a.class_count(), b.class_count());
    for (int i = 0; i < a.class_count(); ++i) {
      EXPECT_EQ(a.classes[i].members, b.classes[i].members);
      const TwinKind k = a.classes[i].kind;
      const TwinKind swapped = k == TwinKind::kOpen     ? TwinKind::kClosed
                               : k == TwinKind::kClosed ? TwinKind::kOpen
                                                        : k;
      EXPECT_EQ(b.classes[i].kind, swapped);
    }
  }
}

TEST(Properties, TwinTranspositionsAreAutomorphisms) {
  for (const Graph& g : sample(505, 100, 10)) {
    for (const auto& c : twin_partition(g).classes) {
      if (c.members.size() < 2) continue;
      Permutation p;
      for (Vertex v = 0; v < g.order(); ++v) p.image.push_back(v);
      std::swap(p.image[c.members[0]], p.image[c.members[1]]);
      EXPECT_TRUE(p.is_automorphism_of(g));
    }
  }
}

TEST(Properties, DistanceMatrixIsAMetric) {
  for (const Graph& g : sample(606, 60, 12)) {
    auto d = distance_matrix(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_EQ(d.at(u, u), 0);
      for (Vertex v = 0; v < g.order(); ++v) {
        EXPECT_EQ(d.at(u, v), d.at(v, u));
        EXPECT_EQ(d.at(u, v) == 1, g.adjacent(u, v));
        for (Vertex w = 0; w < g.order(); ++w) EXPECT_LE(d.at(u, w), d.at(u, v) + d.at(v, w));
      }
    }
  }
}

TEST(Properties, RecognisersInvertGenerators) {
  for (int n = 4; n <= 12; n += 2) EXPECT_EQ(recognize_cocktail_party(cocktail_party(n)), CocktailParty{n});
  for (int n = 5; n <= 11; ++n) {
    for (int m = 2; m <= n - m - 1; ++m) {
      EXPECT_EQ(recognize_two_clique_cut(two_clique_cut(n, m)), (TwoCliqueCut{n, m}));
    }
  }
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n3 = 3; n3 <= 5; ++n3) {
      for (int n4 = 1; n4 <= 3; ++n4) {
        EXPECT_EQ(recognize_diam3_cut(diam3_cut(n1, n3, n4)), (Diam3Cut{n1, n3, n4}));
      }
    }
  }
}

TEST(Properties, BaseWitnessIsBaseAndMinimal) {
  for (const Graph& g : sample(707, 60, 8)) {
    auto group = automorphisms(g);
    auto b = base_size(group, g);
    EXPECT_TRUE(is_base(group, VertexSet::from(b.witness)));
    EXPECT_EQ(static_cast<int>(b.witness.size()), b.value);
    EXPECT_EQ(b.value, oracle::base_size(g));
  }
}

}  // namespace
}  // namespace cdglab
