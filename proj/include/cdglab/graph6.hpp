#ifndef CDGLAB_GRAPH6_HPP
#define CDGLAB_GRAPH6_HPP

#include <string>
#include <string_view>

#include "cdglab/graph.hpp"

namespace cdglab {

/// Decodes graph6 (short form, 1 <= n <= 62). An optional ">>graph6<<" header
/// and trailing whitespace are accepted. Any other deviation, including
/// nonzero padding bits, raises kMalformed with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding of g. Throws kOutOfRange when n > 62.
std::string write_graph6(const Graph& g);

}  // namespace cdglab

#endif  // CDGLAB_GRAPH6_HPP
