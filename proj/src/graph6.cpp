#include "cdglab/graph6.hpp"

#include <algorithm>

namespace cdglab {

namespace {

constexpr int kMaxShortForm = 62;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t start = 0;
  if (text.substr(0, kHeader.size()) == kHeader) start = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.size() <= start) {
    throw Error(ErrorCode::kMalformed, "empty graph6 string", start);
  }
  const int head = static_cast<unsigned char>(text[start]);
  if (head == 126) {
    throw Error(ErrorCode::kMalformed, "long-form graph6 (n > 62) is not supported", start);
  }
  if (head < 63 || head > 126) {
    throw Error(ErrorCode::kMalformed, "byte outside the printable graph6 range", start);
  }
  const int n = head - 63;
  if (n < 1 || n > kMaxShortForm) {
    throw Error(ErrorCode::kMalformed, "vertex count must be in 1..62", start);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - start - 1 != body) {
    std::size_t at = std::min(text.size(), start + 1 + body);
    throw Error(ErrorCode::kMalformed,
                "expected " + std::to_string(body) + " data bytes for n=" +
                    std::to_string(n) + ", found " +
                    std::to_string(text.size() - start - 1),
                at);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t b = 0; b < body; ++b) {
    const std::size_t offset = start + 1 + b;
    const int c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kMalformed, "byte outside the printable graph6 range", offset);
    }
    const int value = c - 63;
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (value >> bit) & 1;
      if (k >= bits) {
        if (set) throw Error(ErrorCode::kMalformed, "nonzero padding bits", offset);
        continue;
      }
      if (!set) continue;
      // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
      int j = 1;
      std::size_t before = 0;
      while (before + static_cast<std::size_t>(j) <= k) {
        before += static_cast<std::size_t>(j);
        ++j;
      }
      edges.emplace_back(static_cast<int>(k - before), j);
    }
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortForm) {
    throw Error(ErrorCode::kOutOfRange, "graph6 short form holds at most 62 vertices");
  }
  std::string out(1, static_cast<char>(63 + n));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

}  // namespace cdglab
