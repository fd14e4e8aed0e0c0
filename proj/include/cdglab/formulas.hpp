#ifndef CDGLAB_FORMULAS_HPP
#define CDGLAB_FORMULAS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdglab/families.hpp"
#include "cdglab/graph.hpp"

namespace cdglab {

// Closed-form dimension predictions. Nothing here calls an exact solver, so
// a disagreement with the oracles is always observable.

enum class TheoremTag {
  kRegular,      // "T3_1": n/2 for the (n-2)-regular family
  kTwoClique,    // "T3_2": n-3 for K_{n-m-1} - v - K_m
  kDiam3Cut,     // "T3_5": n-3 if |rho1| = 1, else n-4
  kLewis,        // "T3_4": n1+n2-s-1 if n1 > 0, else n2-s
  kTwin,         // "T5_TWIN": n-r when every vertex has a twin
  kChartrand,    // "CHARTRAND": paths, cycles, complete graphs, dim = n-2 forms
};

std::string_view to_string(TheoremTag tag);
std::vector<TheoremTag> all_theorem_tags();

struct Prediction {
  int value;
  TheoremTag source;
  std::string note;
};

/// Parametric prediction for a family; nullopt (NOT_COVERED) for fixtures.
/// Throws kBadParameter when the parameters violate the family constraints.
std::optional<Prediction> predict(const FamilySpec& spec);

/// n - r when no twin class is a singleton, else nullopt (NOT_APPLICABLE).
/// The value applies to base size, metric and adjacency dimension alike.
/// Throws kDisconnected.
std::optional<Prediction> twin_formula(const Graph& g);

/// Classical characterisations, tried in order: path (1), complete (n-1),
/// K_{s,t}, K_s + empty(t >= 2), K_s + (K_1 u K_t) (all n-2, n >= 4), then
/// cycle (2). nullopt (NOT_COVERED) otherwise. Throws kDisconnected.
std::optional<Prediction> chartrand_dimension(const Graph& g);

/// Family predictions derived from recognised structure, for graphs that come
/// without parameters (graph6 input, fixtures).
std::vector<Prediction> structural_predictions(const Graph& g);

}  // namespace cdglab

#endif  // CDGLAB_FORMULAS_HPP
