#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gspec/error.hpp"
#include "gspec/graph.hpp"
#include "gspec/transforms.hpp"

namespace gspec {

// ---------------------------------------------------------------------------
// Exceptional-family recognition

/// Matches g against Star(m), TildeD(k) (k >= 5), Cycle(k) and Complete(k),
/// tried in that order so at most one family is reported. K_2 reads as
/// Star(1), K_3 as Cycle(3) and TildeD(4) as Star(4).
inline std::optional<NamedFamily> recognize(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const auto deg = g.degrees();
  const auto count = [&](std::size_t d) {
    return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), d));
  };

  // One centre of degree n-1 and n-1 leaves; for n = 2 both ends are leaves.
  if (n >= 2 && g.edge_count() == n - 1 &&
      (n == 2 || (count(n - 1) == 1 && count(1) == n - 1))) {
    return NamedFamily{FamilyKind::Star, n - 1};
  }

  if (n >= 6 && g.edge_count() == n - 1 && count(3) == 2 && count(1) == 4 &&
      count(2) == n - 6 && is_connected(g)) {
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      if (deg[v] != 3) continue;
      std::size_t leaves = 0;
      for (VertexId w : g.neighbors(v)) leaves += deg[w] == 1 ? 1 : 0;
      ok = leaves == 2;
    }
    if (ok) return NamedFamily{FamilyKind::TildeD, n - 1};
  }

  if (n >= 3 && count(2) == n && is_connected(g)) return NamedFamily{FamilyKind::Cycle, n};

  if (count(n - 1) == n) return NamedFamily{FamilyKind::Complete, n};

  return std::nullopt;
}

/// The family recognize() reports for make_family(f); nullopt for paths that
/// are none of the recognised shapes.
inline std::optional<NamedFamily> canonical_family(const NamedFamily& f) {
  switch (f.kind) {
    case FamilyKind::Path:
      if (f.parameter == 1) return NamedFamily{FamilyKind::Complete, 1};
      if (f.parameter <= 3) return NamedFamily{FamilyKind::Star, f.parameter - 1};
      return std::nullopt;
    case FamilyKind::Complete:
      if (f.parameter == 2) return NamedFamily{FamilyKind::Star, 1};
      if (f.parameter == 3) return NamedFamily{FamilyKind::Cycle, 3};
      return f;
    case FamilyKind::TildeD:
      if (f.parameter == 4) return NamedFamily{FamilyKind::Star, 4};
      return f;
    default:
      return f;
  }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

constexpr std::size_t kMaxEnumerationOrder = 7;

/// Graph whose strict upper triangle, in graph6 column order
/// (0,1), (0,2), (1,2), (0,3), ..., is given by the bits of mask (bit 0
/// first).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

namespace detail {

inline bool mask_connected(std::size_t n, std::uint64_t mask) {
  if (n <= 1) return true;
  std::uint32_t nb[kMaxEnumerationOrder] = {};
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) {
        nb[i] |= 1U << j;
        nb[j] |= 1U << i;
      }
    }
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= nb[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

inline void check_enumeration_order(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ParameterOutOfRange, "enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::SizeCap, "exhaustive enumeration is capped at n=" +
                                        std::to_string(kMaxEnumerationOrder));
  }
}

}  // namespace detail

inline std::uint64_t labeled_graph_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Calls fn(graph, mask) for every connected labelled graph on n vertices,
/// in increasing mask order for masks in [first, last).
template <typename Fn>
void for_each_connected(std::size_t n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  detail::check_enumeration_order(n);
  last = std::min(last, labeled_graph_count(n));
  for (std::uint64_t mask = first; mask < last; ++mask) {
    if (detail::mask_connected(n, mask)) fn(graph_from_mask(n, mask), mask);
  }
}

template <typename Fn>
void for_each_connected(std::size_t n, Fn&& fn) {
  for_each_connected(n, 0, labeled_graph_count(n), std::forward<Fn>(fn));
}

/// All connected labelled graphs on n vertices (no isomorphism reduction).
inline std::vector<Graph> enumerate_connected(std::size_t n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](Graph g, std::uint64_t) { out.push_back(std::move(g)); });
  return out;
}

// ---------------------------------------------------------------------------
// Neighbour bipartitions

/// Every split of N(v) into (x, y) with both sides of size >= min_side,
/// counted once per unordered pair: the smallest neighbour always goes to x.
inline std::vector<SplitSpec> neighbor_bipartitions(const Graph& g, VertexId v, std::size_t min_side) {
  const auto nb = g.neighbors(v);
  const std::size_t d = nb.size();
  std::vector<SplitSpec> out;
  if (d < 2 * std::max<std::size_t>(min_side, 1) || d >= 63) return out;
  // Bit 0 (smallest neighbour) pinned to x.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (d - 1)); ++bits) {
    SplitSpec s{v, {nb[0]}, {}};
    for (std::size_t i = 1; i < d; ++i) {
      if ((bits >> (i - 1)) & 1U) {
        s.y_side.push_back(nb[i]);
      } else {
        s.x_side.push_back(nb[i]);
      }
    }
    if (s.x_side.size() >= min_side && s.y_side.size() >= min_side && !s.y_side.empty()) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random graphs

/// Deterministic 64-bit generator. Only the raw engine output is used, so
/// draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// True with probability num/den.
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finaliser, used to derive independent per-sample seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream * 0x100000001B3ULL + index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct EdgeProbability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

/// Erdos-Renyi G(n, p) conditioned on connectivity by rejection.
inline Graph random_connected_graph(std::size_t n, EdgeProbability p, Rng& rng,
                                    std::size_t max_attempts = 100000) {
  if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "random graphs need n >= 2");
  if (p.den == 0 || p.num == 0 || p.num >= p.den) {
    throw Error(ErrorKind::ParameterOutOfRange, "edge probability must lie strictly in (0, 1)");
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> e;
    for (VertexId j = 1; j < n; ++j) {
      for (VertexId i = 0; i < j; ++i) {
        if (rng.bernoulli(p.num, p.den)) e.emplace_back(i, j);
      }
    }
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::RejectionCap,
              "no connected draw in " + std::to_string(max_attempts) + " attempts");
}

/// Connected random graph with a hub of degree >= min_hub_degree: a
/// G(n, p) draw plus edges from a random hub to random non-neighbours until
/// the hub reaches a random target degree in [min_hub_degree, n-1].
inline Graph random_hub_graph(std::size_t n, std::size_t min_hub_degree, EdgeProbability p, Rng& rng,
                              std::size_t max_attempts = 100000) {
  if (min_hub_degree >= n) {
    throw Error(ErrorKind::ParameterOutOfRange, "hub degree must be below n");
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (VertexId j = 1; j < n; ++j) {
      for (VertexId i = 0; i < j; ++i) {
        if (rng.bernoulli(p.num, p.den)) adj[i][j] = adj[j][i] = 1;
      }
    }
    const auto hub = static_cast<VertexId>(rng.below(n));
    const auto target = static_cast<std::size_t>(rng.between(min_hub_degree, n - 1));
    std::vector<VertexId> others;
    for (VertexId w = 0; w < n; ++w) {
      if (w != hub && !adj[hub][w]) others.push_back(w);
    }
    std::size_t deg = (n - 1) - others.size();
    while (deg < target) {
      const auto pick = static_cast<std::size_t>(rng.below(others.size()));
      const VertexId w = others[pick];
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(pick));
      adj[hub][w] = adj[w][hub] = 1;
      ++deg;
    }
    std::vector<Edge> e;
    for (VertexId j = 1; j < n; ++j)
      for (VertexId i = 0; i < j; ++i)
        if (adj[i][j]) e.emplace_back(i, j);
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::RejectionCap,
              "no connected hub graph in " + std::to_string(max_attempts) + " attempts");
}

/// Uniformly random assignment of N(v) to k labelled parts, redrawn until
/// every part has at least min_part members.
inline ExpandSpec random_expand_spec(const Graph& g, VertexId v, std::size_t k, std::size_t min_part,
                                     Rng& rng, std::size_t max_attempts = 100000) {
  const auto nb = g.neighbors(v);
  if (nb.size() < k * min_part) {
    throw Error(ErrorKind::DegreeTooSmall, "not enough neighbours for the requested parts");
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    ExpandSpec s{v, std::vector<std::vector<VertexId>>(k)};
    for (VertexId w : nb) s.partitions[rng.below(k)].push_back(w);
    if (std::all_of(s.partitions.begin(), s.partitions.end(),
                    [&](const auto& p) { return p.size() >= min_part; })) {
      return s;
    }
  }
  throw Error(ErrorKind::RejectionCap, "no legal partition drawn");
}

}  // namespace gspec
