#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "histlab/graph.hpp"

namespace histlab {

// graph6 parse failure. The message names which of the distinct failure
// modes occurred: malformed header, truncated payload, out-of-range byte,
// or trailing bytes.
struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void append_sextets(std::string& out, long long value, int groups) {
  for (int i = groups - 1; i >= 0; --i)
    out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 0x3f)));
}

}  // namespace detail

// Standard graph6 encoding: N(n) header, then the upper triangle read in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
// 6-bit groups, each offset by 63. Zero padding completes the last group.
inline std::string emit_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    detail::append_sextets(out, n, 3);
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    detail::append_sextets(out, n, 6);
  }
  unsigned group = 0;
  int bit = 5;
  for (VertexId col = 1; col < n; ++col) {
    for (VertexId row = 0; row < col; ++row) {
      if (g.has_edge(row, col)) group |= 1u << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(63 + group));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw Graph6Error("graph6: malformed header (empty input)");

  auto sextet = [&](std::size_t i) -> long long {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: out-of-range byte at position " + std::to_string(i));
    return c - 63;
  };

  long long n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sextet(0);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
    if (text.size() < 8) throw Graph6Error("graph6: malformed header (truncated order)");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: malformed header (truncated order)");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(i);
    pos = 4;
  }
  if (n > std::numeric_limits<int>::max())
    throw Graph6Error("graph6: malformed header (order too large)");

  const long long body_bits = n * (n - 1) / 2;
  const long long body_bytes = (body_bits + 5) / 6;
  const long long have = static_cast<long long>(text.size() - pos);
  if (have < body_bytes) throw Graph6Error("graph6: truncated payload");
  if (have > body_bytes) throw Graph6Error("graph6: trailing bytes after payload");

  Graph g(static_cast<int>(n));
  long long bit_index = 0;
  for (VertexId col = 1; col < n; ++col) {
    for (VertexId row = 0; row < col; ++row) {
      const long long value = sextet(pos + static_cast<std::size_t>(bit_index / 6));
      const int shift = 5 - static_cast<int>(bit_index % 6);
      if ((value >> shift) & 1) g.add_edge(row, col);
      ++bit_index;
    }
  }
  return g;
}

}  // namespace histlab
