#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gspec/error.hpp"
#include "gspec/graph.hpp"
#include "gspec/spectral.hpp"

namespace gspec {

// ---------------------------------------------------------------------------
// Internal paths

/// [e0, u1, ..., uk, e1]: endpoints of degree > 2 (possibly equal), interior
/// vertices of degree exactly 2, at least two vertices in total.
struct InternalPath {
  std::vector<VertexId> vertices;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  std::size_t interior_count() const { return vertices.size() - 2; }

  bool contains_edge(VertexId u, VertexId w) const {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      const VertexId a = vertices[i];
      const VertexId b = vertices[i + 1];
      if ((a == u && b == w) || (a == w && b == u)) return true;
    }
    return false;
  }

  bool operator==(const InternalPath&) const = default;
  auto operator<=>(const InternalPath&) const = default;
};

/// All maximal internal paths, each once, in canonical orientation (smaller
/// endpoint first; for a closed path, smaller first interior vertex first),
/// sorted lexicographically.
inline std::vector<InternalPath> find_internal_paths(const Graph& g) {
  std::set<std::vector<VertexId>> found;
  for (VertexId e0 = 0; e0 < g.order(); ++e0) {
    if (g.degree(e0) <= 2) continue;
    for (VertexId first : g.neighbors(e0)) {
      std::vector<VertexId> path{e0};
      VertexId prev = e0;
      VertexId cur = first;
      while (g.degree(cur) == 2) {
        path.push_back(cur);
        const auto nb = g.neighbors(cur);
        const VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (g.degree(cur) <= 2) continue;  // pendant path
      path.push_back(cur);
      const bool flip = path.front() > path.back() ||
                        (path.front() == path.back() && path[1] > path[path.size() - 2]);
      if (flip) std::reverse(path.begin(), path.end());
      found.insert(std::move(path));
    }
  }
  std::vector<InternalPath> out;
  out.reserve(found.size());
  for (const auto& p : found) out.push_back(InternalPath{p});
  return out;
}

/// Edges (u < w) lying on at least one internal path, sorted.
inline std::vector<Edge> internal_path_edges(const Graph& g) {
  std::set<Edge> edges;
  for (const auto& p : find_internal_paths(g)) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const VertexId a = p.vertices[i];
      const VertexId b = p.vertices[i + 1];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return {edges.begin(), edges.end()};
}

/// Replaces edge (u, w) of an internal path by u - n - w, where n is the new
/// vertex index.
inline Graph subdivide_edge(const Graph& g, VertexId u, VertexId w) {
  const std::size_t n = g.order();
  if (u >= n || w >= n || !g.adjacent(u, w)) {
    throw Error(ErrorKind::NoSuchEdge, "(" + std::to_string(u) + "," + std::to_string(w) + ")");
  }
  const auto paths = find_internal_paths(g);
  const bool on_path = std::any_of(paths.begin(), paths.end(),
                                   [&](const InternalPath& p) { return p.contains_edge(u, w); });
  if (!on_path) {
    throw Error(ErrorKind::NotInternalPathEdge,
                "(" + std::to_string(u) + "," + std::to_string(w) + ") is on no internal path");
  }
  std::vector<Edge> e;
  e.reserve(g.edge_count() + 1);
  for (const auto& [a, b] : g.edges()) {
    if ((a == u && b == w) || (a == w && b == u)) continue;
    e.emplace_back(a, b);
  }
  e.emplace_back(u, n);
  e.emplace_back(w, n);
  return Graph(n + 1, e);
}

// ---------------------------------------------------------------------------
// Vertex splitting and expansion

/// Neighbours of v divided between v1 (x_side) and v2 (y_side).
struct SplitSpec {
  VertexId v = 0;
  std::vector<VertexId> x_side;
  std::vector<VertexId> y_side;
};

/// Neighbours of v divided among the clique vertices v_1..v_k.
struct ExpandSpec {
  VertexId v = 0;
  std::vector<std::vector<VertexId>> partitions;
};

inline std::string describe(const std::vector<VertexId>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

inline std::string describe(const SplitSpec& s) {
  return "v=" + std::to_string(s.v) + " x=" + describe(s.x_side) + " y=" + describe(s.y_side);
}

inline std::string describe(const ExpandSpec& s) {
  std::string out = "v=" + std::to_string(s.v) + " parts=";
  for (std::size_t i = 0; i < s.partitions.size(); ++i) {
    if (i) out += "|";
    out += describe(s.partitions[i]);
  }
  return out;
}

namespace detail {

inline void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.order()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" + std::to_string(g.order()));
  }
}

/// Parts must be pairwise disjoint, consist of neighbours of v, and cover
/// N(v).
inline void check_cover(const Graph& g, VertexId v, const std::vector<std::vector<VertexId>>& parts) {
  std::vector<VertexId> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  const auto nb = g.neighbors(v);
  if (!std::equal(all.begin(), all.end(), nb.begin(), nb.end())) {
    throw Error(ErrorKind::BadPartition, "parts are not a disjoint cover of N(" +
                                             std::to_string(v) + ")=" +
                                             describe(std::vector<VertexId>(nb.begin(), nb.end())));
  }
}

/// Removes v and inserts new vertices v_1 = v and v_i = n + i - 2 (i >= 2),
/// v_i joined to parts[i-1]; the new vertices form a clique when `clique`.
inline Graph rewire(const Graph& g, VertexId v, const std::vector<std::vector<VertexId>>& parts,
                    bool clique) {
  const std::size_t n = g.order();
  const std::size_t k = parts.size();
  auto label = [&](std::size_t i) { return i == 0 ? v : n + i - 1; };
  std::vector<Edge> e;
  for (const auto& [a, b] : g.edges()) {
    if (a != v && b != v) e.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (VertexId x : parts[i]) e.emplace_back(label(i), x);
    if (clique) {
      for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(label(i), label(j));
    }
  }
  return Graph(n + k - 1, e);
}

}  // namespace detail

/// v becomes adjacent v1 (index v, joined to x_side) and v2 (index n, joined
/// to y_side). Requires d(v) >= 4 and both sides of size >= 2.
inline Graph split_vertex_adjacent(const Graph& g, const SplitSpec& spec) {
  detail::check_vertex(g, spec.v);
  if (g.degree(spec.v) < 4) {
    throw Error(ErrorKind::DegreeTooSmall, "d(" + std::to_string(spec.v) + ")=" +
                                               std::to_string(g.degree(spec.v)) + " < 4");
  }
  detail::check_cover(g, spec.v, {spec.x_side, spec.y_side});
  if (spec.x_side.size() < 2 || spec.y_side.size() < 2) {
    throw Error(ErrorKind::BadPartition, "both sides need at least two neighbours: " + describe(spec));
  }
  return detail::rewire(g, spec.v, {spec.x_side, spec.y_side}, true);
}

/// Same as split_vertex_adjacent but without the v1 - v2 edge. Requires
/// d(v) >= 2 and both sides nonempty; the result may be disconnected.
inline Graph split_vertex_nonadjacent(const Graph& g, const SplitSpec& spec) {
  detail::check_vertex(g, spec.v);
  if (g.degree(spec.v) < 2) {
    throw Error(ErrorKind::DegreeTooSmall, "d(" + std::to_string(spec.v) + ")=" +
                                               std::to_string(g.degree(spec.v)) + " < 2");
  }
  detail::check_cover(g, spec.v, {spec.x_side, spec.y_side});
  if (spec.x_side.empty() || spec.y_side.empty()) {
    throw Error(ErrorKind::BadPartition, "bipartition must be non-trivial: " + describe(spec));
  }
  return detail::rewire(g, spec.v, {spec.x_side, spec.y_side}, false);
}

/// Replaces v by a clique v_1..v_k (v_1 keeps index v, the others are
/// appended in order), v_i joined to partitions[i-1]. Requires k >= 2,
/// d(v) >= k^2 and every part of size >= k.
inline Graph expand_to_complete(const Graph& g, const ExpandSpec& spec) {
  detail::check_vertex(g, spec.v);
  const std::size_t k = spec.partitions.size();
  if (k < 2) throw Error(ErrorKind::BadPartition, "expansion needs at least two parts");
  if (g.degree(spec.v) < k * k) {
    throw Error(ErrorKind::DegreeTooSmall, "d(" + std::to_string(spec.v) + ")=" +
                                               std::to_string(g.degree(spec.v)) + " < " +
                                               std::to_string(k * k));
  }
  detail::check_cover(g, spec.v, spec.partitions);
  for (const auto& p : spec.partitions) {
    if (p.size() < k) {
      throw Error(ErrorKind::PartitionTooSmall, "part " + describe(p) + " has fewer than " +
                                                    std::to_string(k) + " vertices");
    }
  }
  return detail::rewire(g, spec.v, spec.partitions, true);
}

// ---------------------------------------------------------------------------
// Split witness

/// Test vector for the adjacent split G_v built from the Perron vector z of
/// G, together with the row slacks bound * zhat - A(G_v) zhat.
struct WitnessVector {
  /// zhat over the vertices of G_v (v1 at index v, v2 at index n).
  std::vector<mpq_class> values;
  int case_id = 0;
  /// Rationalised Perron entry of the split vertex.
  mpq_class z_v;
  mpq_class sum_x;
  mpq_class sum_y;
  std::vector<mpq_class> row_slack;
  /// Certified upper bound of rho(G) the slacks are measured against.
  mpq_class rho_bound;
  std::size_t escalations = 0;

  bool nonnegative() const {
    return std::all_of(row_slack.begin(), row_slack.end(), [](const mpq_class& s) { return s >= 0; });
  }
  bool strict_somewhere() const {
    return std::any_of(row_slack.begin(), row_slack.end(), [](const mpq_class& s) { return s > 0; });
  }
  bool sound() const { return nonnegative() && strict_somewhere(); }
};

struct WitnessOptions {
  SpectralOptions spectral;
  std::size_t max_escalations = 3;
  /// Each escalation divides the enclosure width by this factor.
  long escalation_factor = 1000;
};

/// Proof case for the split: 1 if z_v >= S_x and z_v >= S_y, 2 if only
/// z_v >= S_x, 3 if only z_v >= S_y, 4 otherwise.
inline int split_case(const mpq_class& z_v, const mpq_class& sum_x, const mpq_class& sum_y) {
  const bool x_small = z_v >= sum_x;
  const bool y_small = z_v >= sum_y;
  if (x_small && y_small) return 1;
  if (x_small) return 2;
  if (y_small) return 3;
  return 4;
}

/// Witness from an explicit positive vector z on the vertices of g, with
/// slacks measured against `bound`.
inline WitnessVector construct_split_witness(const Graph& g, const SplitSpec& spec,
                                             const std::vector<mpq_class>& z, const mpq_class& bound) {
  const Graph split = split_vertex_adjacent(g, spec);
  if (z.size() != g.order()) {
    throw Error(ErrorKind::ParameterOutOfRange, "vector length does not match the graph");
  }
  const std::size_t n = g.order();
  WitnessVector out;
  out.rho_bound = bound;
  out.z_v = z[spec.v];
  for (VertexId x : spec.x_side) out.sum_x += z[x];
  for (VertexId y : spec.y_side) out.sum_y += z[y];
  out.case_id = split_case(out.z_v, out.sum_x, out.sum_y);

  mpq_class v1 = out.z_v;
  mpq_class v2 = out.z_v;
  if (out.case_id == 2) v1 = out.sum_x;
  if (out.case_id == 3) v2 = out.sum_y;
  out.values.assign(z.begin(), z.end());
  out.values[spec.v] = v1;
  out.values.push_back(v2);

  out.row_slack.resize(n + 1);
  for (VertexId w = 0; w <= n; ++w) {
    mpq_class az = 0;
    for (VertexId u : split.neighbors(w)) az += out.values[u];
    out.row_slack[w] = bound * out.values[w] - az;
  }
  return out;
}

/// Builds the witness zhat for the adjacent split of v.
///
/// z is the rationalised positive vector behind rho_result's enclosure. The
/// case is chosen by comparing z_v with S_x = sum z_x and S_y = sum z_y
/// (ties go to the >= branch); entries off {v1, v2} are copied from z. The
/// slacks are evaluated exactly against the enclosure's upper bound, which
/// is the largest row quotient of that same z, so every row away from the
/// split satisfies bound * z_w >= (A z)_w exactly. If the slacks fail the
/// sign test, the Perron vector is recomputed with a narrower enclosure up
/// to max_escalations times.
inline WitnessVector construct_split_witness(const Graph& g, const SplitSpec& spec,
                                             const SpectralResult& rho_result,
                                             const WitnessOptions& opts = {}) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "witness needs a connected graph");
  if (rho_result.quotient_vector.size() != g.order() || rho_result.component.size() != g.order()) {
    throw Error(ErrorKind::ParameterOutOfRange, "spectral result does not belong to this graph");
  }
  // The upper bound is the largest row quotient of this very vector.
  WitnessVector w =
      construct_split_witness(g, spec, rational_perron(rho_result), rho_result.enclosure.hi);
  SpectralOptions sopts = opts.spectral;
  sopts.enclosure_width = std::min(sopts.enclosure_width, rho_result.enclosure.width());
  for (std::size_t k = 1; k <= opts.max_escalations && !w.sound(); ++k) {
    sopts.enclosure_width /= opts.escalation_factor;
    if (sopts.enclosure_width <= 0) break;
    WitnessVector retry;
    try {
      const SpectralResult r = spectral_radius(g, sopts);
      retry = construct_split_witness(g, spec, rational_perron(r), r.enclosure.hi);
    } catch (const Error&) {
      break;
    }
    retry.escalations = k;
    w = std::move(retry);
  }
  return w;
}

}  // namespace gspec
