#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gspec/error.hpp"

namespace gspec {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Neighbour lists are strictly increasing and symmetric; there are no loops
/// and no parallel edges. Isolated vertices (and disconnected graphs) are
/// legal values.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects loops, repeated pairs (in
  /// either orientation) and out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                        std::to_string(n));
      }
      if (u == v) throw Error(ErrorKind::LoopEdge, "vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (VertexId v = 0; v < n; ++v) {
      auto& nb = adj_[v];
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        auto dup = *std::adjacent_find(nb.begin(), nb.end());
        throw Error(ErrorKind::DuplicateEdge,
                    "edge (" + std::to_string(std::min(v, dup)) + "," +
                        std::to_string(std::max(v, dup)) + ")");
      }
    }
    edge_count_ = edges.size();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return d;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    out.reserve(adj_.size());
    for (const auto& nb : adj_) out.push_back(nb.size());
    return out;
  }

  /// Degree sequence sorted in non-increasing order.
  std::vector<std::size_t> degree_sequence() const {
    auto d = degrees();
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  /// Edges as (u, v) with u < v, lexicographically ordered.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
      for (VertexId v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

// ---------------------------------------------------------------------------
// Named families

enum class FamilyKind { Path, Cycle, Star, Complete, TildeD };

struct NamedFamily {
  FamilyKind kind;
  std::size_t parameter;

  bool operator==(const NamedFamily&) const = default;
};

inline std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "Path";
    case FamilyKind::Cycle: return "Cycle";
    case FamilyKind::Star: return "Star";
    case FamilyKind::Complete: return "Complete";
    case FamilyKind::TildeD: return "TildeD";
  }
  return "?";
}

inline std::string to_string(const NamedFamily& f) {
  return to_string(f.kind) + "(" + std::to_string(f.parameter) + ")";
}

inline std::size_t family_minimum(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return 1;
    case FamilyKind::Cycle: return 3;
    case FamilyKind::Star: return 1;
    case FamilyKind::Complete: return 1;
    case FamilyKind::TildeD: return 4;
  }
  return 0;
}

/// Path(n) = P_n, Cycle(n) = C_n, Star(m) = K_{1,m} with centre 0,
/// Complete(n) = K_n, TildeD(n) = the (n+1)-vertex tree made of a path on
/// n-3 vertices (indices 0..n-4) whose ends each carry two pendant leaves.
inline Graph make_family(const NamedFamily& spec) {
  const std::size_t k = spec.parameter;
  if (k < family_minimum(spec.kind)) {
    throw Error(ErrorKind::ParameterOutOfRange, to_string(spec));
  }
  std::vector<Edge> e;
  switch (spec.kind) {
    case FamilyKind::Path:
      for (VertexId i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
      return Graph(k, e);
    case FamilyKind::Cycle:
      for (VertexId i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, k - 1);
      return Graph(k, e);
    case FamilyKind::Star:
      for (VertexId i = 1; i <= k; ++i) e.emplace_back(0, i);
      return Graph(k + 1, e);
    case FamilyKind::Complete:
      for (VertexId i = 0; i < k; ++i)
        for (VertexId j = i + 1; j < k; ++j) e.emplace_back(i, j);
      return Graph(k, e);
    case FamilyKind::TildeD: {
      const std::size_t spine = k - 3;
      for (VertexId i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, spine);
      e.emplace_back(0, spine + 1);
      e.emplace_back(spine - 1, spine + 2);
      e.emplace_back(spine - 1, spine + 3);
      return Graph(k + 1, e);
    }
  }
  throw Error(ErrorKind::ParameterOutOfRange, "unknown family");
}

// ---------------------------------------------------------------------------
// Connectivity

/// Maximal connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<VertexId>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// True iff every vertex is reachable from vertex 0; graphs with n <= 1 count
/// as connected.
inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return components(g).size() == 1;
}

/// Subgraph induced by `vertices` (which must be sorted), relabelled to
/// 0..k-1 in the given order.
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
      if (it != vertices.end() && *it == w) {
        auto j = static_cast<std::size_t>(it - vertices.begin());
        if (i < j) e.emplace_back(i, j);
      }
    }
  }
  return Graph(vertices.size(), e);
}

}  // namespace gspec
