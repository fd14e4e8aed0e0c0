#include <gtest/gtest.h>

#include "cdglab/classify.hpp"
#include "cdglab/families.hpp"
#include "oracles.hpp"

namespace cdglab {
namespace {

TEST(RecognizeLewis, FittingFixture) {
  auto s = recognize_lewis(fixture(FixtureId::kFitting));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->universal, (VertexSet{5}));
  ASSERT_EQ(s->stars.size(), 2U);
  EXPECT_EQ(s->stars[0].centre, 0);
  EXPECT_EQ(s->stars[0].leaves, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(s->stars[1].centre, 1);
  EXPECT_EQ(s->stars[1].leaves, (std::vector<Vertex>{4}));
  EXPECT_EQ(s->n1(), 1);
  EXPECT_EQ(s->n2(), 3);
  EXPECT_EQ(s->n3(), 2);
  EXPECT_EQ(s->s(), 1);
}

TEST(RecognizeLewis, CompleteAndCycle) {
  auto k = recognize_lewis(oracle::complete(5));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->universal, VertexSet::range(5));
  EXPECT_TRUE(k->stars.empty());
  EXPECT_FALSE(recognize_lewis(oracle::cycle(6)).has_value());
}

TEST(RecognizeLewis, RoundTripsGenerator) {
  for (int n1 = 0; n1 <= 2; ++n1) {
    for (const auto& counts : std::vector<std::vector<int>>{{1}, {2}, {3, 1}, {2, 2}, {1, 1, 1}}) {
      auto s = recognize_lewis(lewis_graph(n1, counts));
      ASSERT_TRUE(s.has_value());
      auto spec = s->to_spec();
      EXPECT_EQ(spec.n1, n1);
      auto sorted = spec.leaf_counts;
      std::sort(sorted.rbegin(), sorted.rend());
      EXPECT_EQ(sorted, counts);
    }
  }
}

TEST(Diam3Partition, Diam3Fixture) {
  auto r = diam3_partition(fixture(FixtureId::kDiam3));
  ASSERT_TRUE(std::holds_alternative<Diam3Partition>(r));
  const auto& p = std::get<Diam3Partition>(r);
  EXPECT_EQ(p.anchor, 0);
  EXPECT_EQ(p.rho1, (VertexSet{0}));
  EXPECT_EQ(p.rho2, (VertexSet{1}));
  EXPECT_EQ(p.rho3, (VertexSet{2, 3, 4}));
  EXPECT_EQ(p.rho4, (VertexSet{5}));
}

TEST(Diam3Partition, Rejections) {
  auto p4 = diam3_partition(oracle::path(4));
  ASSERT_TRUE(std::holds_alternative<Diam3Rejection>(p4));
  EXPECT_EQ(std::get<Diam3Rejection>(p4).reason, "rho3 has fewer than 3 vertices");
  EXPECT_TRUE(std::holds_alternative<Diam3Rejection>(diam3_partition(oracle::cycle(6))));
  EXPECT_EQ(std::get<Diam3Rejection>(diam3_partition(oracle::complete(4))).reason,
            "diameter is not 3");
  EXPECT_THROW(diam3_partition(build_graph(3, {{0, 1}})), Error);
}

TEST(BlocksComplete, Examples) {
  EXPECT_EQ(check_blocks_complete(fixture(FixtureId::kTwoBlock)), Applicability::kTrue);
  EXPECT_EQ(check_blocks_complete(oracle::complete(5)), Applicability::kNotApplicable);
  EXPECT_EQ(check_blocks_complete(oracle::path(4)), Applicability::kNotApplicable);
  EXPECT_EQ(check_blocks_complete(oracle::complete_bipartite(1, 3)), Applicability::kTrue);
  // Hub 0 with a 4-vertex non-clique block and a pendant.
  Graph kite = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}});
  EXPECT_EQ(check_blocks_complete(kite), Applicability::kFalse);
}

TEST(UniqueCutVertex, Examples) {
  auto d = unique_cut_vertex(fixture(FixtureId::kDiam3));
  EXPECT_EQ(d.kind, CutVertexResult::Kind::kUnique);
  EXPECT_EQ(d.vertex, 1);
  EXPECT_EQ(unique_cut_vertex(oracle::complete(4)).kind, CutVertexResult::Kind::kNone);
  auto p = unique_cut_vertex(oracle::path(4));
  EXPECT_EQ(p.kind, CutVertexResult::Kind::kMultiple);
  EXPECT_EQ(p.all, (VertexSet{1, 2}));
}

TEST(RegularAdmissible, Examples) {
  EXPECT_TRUE(regular_cdg_admissible(cocktail_party(8)));
  EXPECT_FALSE(regular_cdg_admissible(oracle::cycle(5)));
  EXPECT_TRUE(regular_cdg_admissible(oracle::complete(7)));
  EXPECT_THROW(regular_cdg_admissible(oracle::path(3)), Error);
}

TEST(StructuralRecognisers, RecoverParameters) {
  EXPECT_EQ(recognize_cocktail_party(fixture(FixtureId::kRegular)), (CocktailParty{6}));
  EXPECT_FALSE(recognize_cocktail_party(oracle::complete(6)).has_value());
  EXPECT_EQ(recognize_two_clique_cut(fixture(FixtureId::kTwoBlock)), (TwoCliqueCut{6, 2}));
  EXPECT_EQ(recognize_two_clique_cut(two_clique_cut(9, 3)), (TwoCliqueCut{9, 3}));
  EXPECT_FALSE(recognize_two_clique_cut(oracle::path(5)).has_value());
  EXPECT_EQ(recognize_diam3_cut(fixture(FixtureId::kDiam3)), (Diam3Cut{1, 3, 1}));
  EXPECT_EQ(recognize_diam3_cut(diam3_cut(3, 4, 2)), (Diam3Cut{3, 4, 2}));
  EXPECT_FALSE(recognize_diam3_cut(oracle::path(4)).has_value());
}

}  // namespace
}  // namespace cdglab
