#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gspec/error.hpp"
#include "gspec/graph.hpp"

namespace gspec {

namespace detail {

constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

inline void append_graph6_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
    }
  }
}

inline std::uint8_t graph6_sextet(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw Error(ErrorKind::MalformedGraph6, "byte " + std::to_string(u) + " outside 63..126");
  }
  return static_cast<std::uint8_t>(u - 63);
}

}  // namespace detail

/// Canonical graph6 encoding: shortest size header, then the strict upper
/// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits
/// per byte (most significant first) with zero padding.
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::append_graph6_size(out, n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  std::uint8_t acc = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  }
  return out;
}

/// Decodes a graph6 string. An optional ">>graph6<<" prefix and one trailing
/// newline are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty input");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = detail::graph6_sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Error(ErrorKind::MalformedGraph6, "truncated 8-byte header");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | detail::graph6_sextet(text[k]);
    if (n <= 258047) throw Error(ErrorKind::MalformedGraph6, "non-canonical 8-byte header");
    pos = 8;
  } else {
    if (text.size() < 4) throw Error(ErrorKind::MalformedGraph6, "truncated header");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | detail::graph6_sextet(text[k]);
    if (n <= 62) throw Error(ErrorKind::MalformedGraph6, "non-canonical 4-byte header");
    pos = 4;
  }
  if (n > detail::kGraph6MaxOrder) throw Error(ErrorKind::MalformedGraph6, "order too large");

  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(body) +
                                                " body bytes, found " +
                                                std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const auto sextet = detail::graph6_sextet(text[pos + k / 6]);
      if ((sextet >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const auto last = detail::graph6_sextet(text.back());
    const auto pad = static_cast<unsigned>(6 - bits % 6);
    if ((last & ((1U << pad) - 1U)) != 0) {
      throw Error(ErrorKind::MalformedGraph6, "nonzero padding bits");
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace gspec
