#pragma once

#include "graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chargraph {

/// Malformed graph6 input; offset is the index of the offending byte.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

// Bits follow the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
// six per byte, most significant first, each byte offset by 63.

inline Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw ParseError("empty graph6 string", 0);
  const auto first = static_cast<unsigned char>(s[0]);
  if (first < 63 || first > 126) throw ParseError("byte out of graph6 range", 0);
  if (first == 126) throw ParseError("graph6 orders above 62 are not supported", 0);
  const std::size_t n = first - 63u;
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() != 1 + bytes)
    throw ParseError("graph6 length mismatch: expected " + std::to_string(1 + bytes) + " bytes for order " +
                         std::to_string(n) + ", got " + std::to_string(s.size()),
                     std::min(s.size(), 1 + bytes));
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t off = 1 + k / 6;
      const auto c = static_cast<unsigned char>(s[off]);
      if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", off);
      if (((c - 63u) >> (5 - k % 6)) & 1u) g.add_edge(i, j);
    }
  for (std::size_t off = 1; off < s.size(); ++off) {
    const auto c = static_cast<unsigned char>(s[off]);
    if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", off);
  }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned char>(s.back()) - 63u;
    const unsigned pad_mask = (1u << (6 - bits % 6)) - 1u;
    if (last & pad_mask) throw ParseError("nonzero graph6 padding", s.size() - 1);
  }
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw ArgumentError("graph6 encoding supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  unsigned acc = 0;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
      }
    }
  if (k % 6 != 0) out.push_back(static_cast<char>(63 + (acc << (6 - k % 6))));
  return out;
}

}  // namespace chargraph
