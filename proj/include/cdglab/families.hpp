#ifndef CDGLAB_FAMILIES_HPP
#define CDGLAB_FAMILIES_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdglab/graph.hpp"

namespace cdglab {

/// K_n minus the perfect matching {(0,1), (2,3), ...}: (n-2)-regular.
struct CocktailParty {
  int n;
  bool operator==(const CocktailParty&) const = default;
};

/// K_m on 0..m-1, the joining vertex m, then K_{n-m-1} on m+1..n-1.
struct TwoCliqueCut {
  int n;
  int m;
  bool operator==(const TwoCliqueCut&) const = default;
};

/// Layers rho1 (n1 vertices), the cut vertex, rho3 (n3), rho4 (n4), numbered
/// in that order.
struct Diam3Cut {
  int n1;
  int n3;
  int n4;
  int order() const { return n1 + 1 + n3 + n4; }
  Vertex cut_vertex() const { return n1; }
  bool operator==(const Diam3Cut&) const = default;
};

/// Complement of n1 isolated vertices plus one star per leaf count. Numbering:
/// the n1 universal vertices, then each star's centre followed by its leaves.
struct LewisSpec {
  int n1;
  std::vector<int> leaf_counts;

  int n2() const;
  int n3() const { return static_cast<int>(leaf_counts.size()); }
  /// Stars with at least two leaves.
  int s() const;
  int order() const { return n1 + n2() + n3(); }
  bool operator==(const LewisSpec&) const = default;
};

enum class FixtureId { kRegular, kTwoBlock, kDiam3, kFitting };

struct Fixture {
  FixtureId id;
  bool operator==(const Fixture&) const = default;
};

using FamilySpec = std::variant<CocktailParty, TwoCliqueCut, Diam3Cut, LewisSpec, Fixture>;

Graph cocktail_party(int n);
Graph two_clique_cut(int n, int m);
Graph diam3_cut(int n1, int n3, int n4);
Graph lewis_graph(int n1, const std::vector<int>& leaf_counts);
Graph fixture(FixtureId id);

Graph make_graph(const FamilySpec& spec);

std::string_view to_string(FixtureId id);
FixtureId parse_fixture_id(std::string_view text);
std::vector<FixtureId> all_fixtures();

/// Canonical text forms: "cocktail:6", "twoclique:6,2", "diam3:1,3,1",
/// "lewis:1:2,1", "fixture:FIG_DIAM3". Parsing throws kMalformed.
std::string to_text(const FamilySpec& spec);
FamilySpec parse_family_spec(std::string_view text);
bool looks_like_family_spec(std::string_view text);

}  // namespace cdglab

#endif  // CDGLAB_FAMILIES_HPP
