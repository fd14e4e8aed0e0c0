#ifndef CDGLAB_AUDIT_HPP
#define CDGLAB_AUDIT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cdglab/report.hpp"

namespace cdglab {

enum class ClaimKind { kWitnessSet, kDimValue, kAutOrder, kBaseValue };

std::string_view to_string(ClaimKind kind);

/// What a witness-set claim asserts about its vertices.
enum class WitnessProperty { kMinimumResolving, kMinimumBase };

/// One published claim: the input graph, what is asserted and where it comes
/// from. `witness` uses 0-based vertex indices.
struct ClaimEntry {
  std::string claim_ref;
  ClaimKind kind = ClaimKind::kDimValue;
  std::string input;  // family spec text
  int expected = 0;   // value claims
  std::vector<Vertex> witness;  // kWitnessSet claims
  WitnessProperty property = WitnessProperty::kMinimumResolving;
  DistanceMode mode = DistanceMode::kMetric;  // kDimValue claims
  std::string citation;
};

struct ClaimCheck {
  std::string claim_ref;
  ClaimKind kind = ClaimKind::kDimValue;
  std::string input;
  ordered_json expected;
  ordered_json observed;
  Verdict verdict;
  std::string citation;
  /// Machine-checkable evidence for the verdict: a colliding pair, a
  /// nontrivial stabiliser element, a smaller resolving set, or the witness
  /// together with the exhaustive lower-bound count.
  ordered_json certificate;
};

/// The fixed registry of claims checked by `audit`.
const std::vector<ClaimEntry>& claim_registry();

ClaimCheck check_claim(const ClaimEntry& entry, const OracleBudget& budget = {});
std::vector<ClaimCheck> audit_paper_claims(const OracleBudget& budget = {});

ordered_json to_json(const ClaimCheck& c);

}  // namespace cdglab

#endif  // CDGLAB_AUDIT_HPP
