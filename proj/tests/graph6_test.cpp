#include <gtest/gtest.h>

#include <random>

#include "cdglab/families.hpp"
#include "cdglab/graph6.hpp"
#include "oracles.hpp"

namespace cdglab {
namespace {

std::size_t malformed_offset(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformed);
    return e.offset().value_or(999);
  }
  ADD_FAILURE() << "accepted " << text;
  return 999;
}

TEST(Graph6, HandEncodedSmallGraphs) {
  EXPECT_EQ(parse_graph6("A_"), oracle::complete(2));
  EXPECT_EQ(parse_graph6("Bw"), oracle::complete(3));
  EXPECT_EQ(parse_graph6("@"), build_graph(1, {}));
  EXPECT_EQ(write_graph6(oracle::complete(2)), "A_");
  EXPECT_EQ(write_graph6(oracle::complete(3)), "Bw");
  EXPECT_EQ(write_graph6(build_graph(1, {})), "@");
  EXPECT_EQ(write_graph6(build_graph(2, {})), "A?");
}

TEST(Graph6, HeaderAndTrailingWhitespace) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), oracle::complete(3));
  EXPECT_EQ(parse_graph6("Bw  \r\n"), oracle::complete(3));
}

TEST(Graph6, MalformedInputsReportOffsets) {
  EXPECT_EQ(malformed_offset(""), 0U);
  EXPECT_EQ(malformed_offset("?"), 0U);          // n = 0
  EXPECT_EQ(malformed_offset("~"), 0U);          // long form
  EXPECT_EQ(malformed_offset("B"), 1U);          // truncated
  EXPECT_EQ(malformed_offset("Bww"), 2U);        // trailing byte
  EXPECT_EQ(malformed_offset("B!"), 1U);         // below '?'
  EXPECT_EQ(malformed_offset("A`"), 1U);         // padding bit set
  EXPECT_EQ(malformed_offset("B x"), 2U);        // length is checked before content
}

TEST(Graph6, TooLargeToWrite) {
  EXPECT_THROW(write_graph6(build_graph(63, {})), Error);
}

TEST(Graph6, WriterMatchesBitwiseReference) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(rng, 1 + trial % 12, 0.4);
    EXPECT_EQ(write_graph6(g), oracle::graph6(g));
  }
}

TEST(Graph6, HundredHandRolledRoundTrips) {
  // Every graph on at most 4 vertices (1 + 2 + 8 + 64 = 75), plus paths,
  // cycles, complete graphs and the fixtures.
  std::vector<Graph> cases;
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    }
    for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if ((mask >> k) & 1U) e.push_back(slots[k]);
      }
      cases.emplace_back(n, e);
    }
  }
  for (int n = 5; n <= 11; ++n) {
    cases.push_back(oracle::path(n));
    cases.push_back(oracle::cycle(n));
    cases.push_back(oracle::complete(n));
  }
  for (auto id : all_fixtures()) cases.push_back(fixture(id));
  ASSERT_EQ(cases.size(), 100U);

  for (const Graph& g : cases) {
    const std::string s = write_graph6(g);
    EXPECT_EQ(s, oracle::graph6(g));
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(write_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, LargestShortForm) {
  Graph g = oracle::cycle(62);
  EXPECT_EQ(parse_graph6(write_graph6(g)), g);
}

}  // namespace
}  // namespace cdglab
