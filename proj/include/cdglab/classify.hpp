#ifndef CDGLAB_CLASSIFY_HPP
#define CDGLAB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdglab/families.hpp"
#include "cdglab/graph.hpp"

namespace cdglab {

struct Star {
  Vertex centre;
  std::vector<Vertex> leaves;  // sorted
};

/// Universal vertices U plus the stars of the complement on the remaining
/// vertices. Stars are ordered by centre index; in a single-edge star the
/// smaller index is the centre.
struct LewisStructure {
  VertexSet universal;
  std::vector<Star> stars;

  int n1() const { return universal.size(); }
  int n2() const;
  int n3() const { return static_cast<int>(stars.size()); }
  int s() const;
  LewisSpec to_spec() const;
};

/// nullopt means NOT_LEWIS.
std::optional<LewisStructure> recognize_lewis(const Graph& g);

/// Distance layers around an anchor r with some vertex at distance 3.
struct Diam3Partition {
  VertexSet rho1;
  VertexSet rho2;
  VertexSet rho3;
  VertexSet rho4;
  Vertex anchor;
};

/// NOT_DIAM3 together with the first invariant that failed.
struct Diam3Rejection {
  std::string reason;
};

using Diam3Result = std::variant<Diam3Partition, Diam3Rejection>;

/// Anchor is the smallest-index vertex that has a vertex at distance 3.
/// Throws kDisconnected.
Diam3Result diam3_partition(const Graph& g);

enum class Applicability { kTrue, kFalse, kNotApplicable };

std::string_view to_string(Applicability a);

/// Whether every block induces a clique, evaluated only when g has at least
/// three vertices, is not itself a block, and has diameter at most 2.
/// Throws kDisconnected.
Applicability check_blocks_complete(const Graph& g);

struct CutVertexResult {
  enum class Kind { kNone, kUnique, kMultiple };
  Kind kind;
  std::optional<Vertex> vertex;  // set when kind == kUnique
  VertexSet all;
};

/// Throws kDisconnected.
CutVertexResult unique_cut_vertex(const Graph& g);

/// True iff the regular graph g is complete or (n-2)-regular. Throws
/// kNotRegular.
bool regular_cdg_admissible(const Graph& g);

// Structural recognisers used to attach closed-form predictions to graphs
// that arrive without family parameters.

/// K_a - v - K_b: a unique cut vertex adjacent to everything whose removal
/// leaves two cliques.
std::optional<TwoCliqueCut> recognize_two_clique_cut(const Graph& g);

/// Non-complete (n-2)-regular graph with n even and at least 4.
std::optional<CocktailParty> recognize_cocktail_party(const Graph& g);

/// A diameter-3 partition with a single rho2 vertex that is a cut vertex.
std::optional<Diam3Cut> recognize_diam3_cut(const Graph& g);

}  // namespace cdglab

#endif  // CDGLAB_CLASSIFY_HPP
