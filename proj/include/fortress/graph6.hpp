#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fortress/graph.hpp"

namespace fortress {

inline constexpr int kGraph6MaxOrder = 258047;

namespace detail {

inline int g6_byte(std::string_view text, std::size_t i) {
  if (i >= text.size())
    throw std::invalid_argument("graph6: truncated input");
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126)
    throw std::invalid_argument("graph6: byte " + std::to_string(i) +
                                " out of range (value " + std::to_string(c) + ")");
  return c - 63;
}

}  // namespace detail

/// Decodes a graph6 string (optionally prefixed with ">>graph6<<").
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  long long n = detail::g6_byte(text, pos++);
  if (n == 63) {
    long long a = detail::g6_byte(text, pos++);
    if (a == 63)
      throw std::invalid_argument("graph6: vertex counts above 258047 unsupported");
    long long b = detail::g6_byte(text, pos++);
    long long c = detail::g6_byte(text, pos++);
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kGraph6MaxOrder)
    throw std::invalid_argument("graph6: vertex count too large");

  long long bits = n * (n - 1) / 2;
  std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes)
    throw std::invalid_argument(
        text.size() - pos < bytes ? "graph6: truncated input"
                                  : "graph6: trailing bytes after bit string");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int value = detail::g6_byte(text, pos + static_cast<std::size_t>(bit / 6));
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

/// Encodes a graph in graph6.  Round trip with parse_graph6 is the identity.
inline std::string to_graph6(const Graph& g) {
  long long n = g.order();
  if (n > kGraph6MaxOrder)
    throw std::invalid_argument("graph6: vertex count too large");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  long long bits = n * (n - 1) / 2;
  std::vector<int> groups(static_cast<std::size_t>((bits + 5) / 6), 0);
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v))
        groups[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
  for (int group : groups) out += static_cast<char>(group + 63);
  return out;
}

}  // namespace fortress
