#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspec/error.hpp"
#include "gspec/graph.hpp"
#include "gspec/polynomial.hpp"

namespace gspec {

/// Certified closed interval [lo, hi] around a spectral radius.
struct Enclosure {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

struct SpectralOptions {
  mpq_class enclosure_width{1, 1000000000};
  std::size_t max_products = 1'000'000;
};

struct SpectralResult {
  double rho = 0.0;
  /// Perron vector of the component attaining rho, max-norm 1, zero
  /// elsewhere.
  std::vector<double> perron;
  Enclosure enclosure;
  /// Vertices of the component attaining rho.
  std::vector<VertexId> component;
  /// Positive integer vector (zero off `component`) whose row quotients
  /// (Aw)_i / w_i bound the radius of that component: min <= rho <= max.
  std::vector<std::int64_t> quotient_vector;
};

namespace detail {

struct ComponentRadius {
  double rho = 0.0;
  std::vector<double> x;
  std::vector<std::int64_t> w;
  mpq_class lo;
  mpq_class hi;
};

inline mpq_class make_ratio(std::int64_t num, std::int64_t den) {
  mpq_class q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

/// Quotient bounds of a positive integer vector w on the local adjacency.
/// Returns false if some entry of w is not positive.
inline bool quotient_bounds(const std::vector<std::vector<std::size_t>>& adj,
                            const std::vector<std::int64_t>& w, mpq_class& lo, mpq_class& hi) {
  std::size_t imin = 0;
  std::size_t imax = 0;
  std::vector<std::int64_t> aw(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] <= 0) return false;
    std::int64_t s = 0;
    for (std::size_t j : adj[i]) s += w[j];
    aw[i] = s;
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    // aw[i]/w[i] < aw[imin]/w[imin]  <=>  aw[i]*w[imin] < aw[imin]*w[i]
    const __int128 lhs = static_cast<__int128>(aw[i]) * w[imin];
    const __int128 rhs = static_cast<__int128>(aw[imin]) * w[i];
    if (lhs < rhs) imin = i;
    const __int128 lhs2 = static_cast<__int128>(aw[i]) * w[imax];
    const __int128 rhs2 = static_cast<__int128>(aw[imax]) * w[i];
    if (lhs2 > rhs2) imax = i;
  }
  lo = make_ratio(aw[imin], w[imin]);
  hi = make_ratio(aw[imax], w[imax]);
  return true;
}

inline int rationalisation_bits(std::size_t max_degree) {
  int log_deg = 0;
  while ((std::size_t{1} << log_deg) <= max_degree) ++log_deg;
  return std::min(52, 61 - log_deg);
}

/// Power iteration on A + I for one connected component (local indices),
/// stopping once the exact quotient enclosure is narrow enough.
inline ComponentRadius component_radius(const std::vector<std::vector<std::size_t>>& adj,
                                        const SpectralOptions& opts, std::size_t& products) {
  const std::size_t m = adj.size();
  ComponentRadius out;
  if (m == 1) {
    out.rho = 0.0;
    out.x = {1.0};
    out.w = {1};
    out.lo = 0;
    out.hi = 0;
    return out;
  }
  std::size_t max_deg = 0;
  for (const auto& nb : adj) max_deg = std::max(max_deg, nb.size());
  const int bits = rationalisation_bits(max_deg);
  const double target = opts.enclosure_width.get_d();

  std::vector<double> x(m, 1.0);
  std::vector<double> y(m, 0.0);
  std::vector<std::int64_t> w(m, 0);
  std::size_t since_exact = 0;
  while (true) {
    if (products >= opts.max_products) {
      throw Error(ErrorKind::NoConvergence,
                  "enclosure width not reached within " + std::to_string(opts.max_products) +
                      " matrix-vector products");
    }
    ++products;
    double ymax = 0.0;
    double dlo = INFINITY;
    double dhi = -INFINITY;
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j : adj[i]) s += x[j];
      const double ratio = s / x[i];
      dlo = std::min(dlo, ratio);
      dhi = std::max(dhi, ratio);
      y[i] = s + x[i];
      ymax = std::max(ymax, y[i]);
    }
    ++since_exact;
    // Exact check once the floating-point quotients look converged, and
    // periodically in case they stagnate just above the target.
    if (dhi - dlo <= target || since_exact >= 256) {
      since_exact = 0;
      for (std::size_t i = 0; i < m; ++i) {
        w[i] = std::max<std::int64_t>(1, std::llround(std::ldexp(x[i], bits)));
      }
      mpq_class lo;
      mpq_class hi;
      if (quotient_bounds(adj, w, lo, hi) && hi - lo <= opts.enclosure_width) {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          num += x[i] * (y[i] - x[i]);
          den += x[i] * x[i];
        }
        out.rho = std::clamp(num / den, lo.get_d(), hi.get_d());
        out.x = x;
        out.w = w;
        out.lo = lo;
        out.hi = hi;
        return out;
      }
    }
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / ymax;
  }
}

}  // namespace detail

/// Largest adjacency eigenvalue with a certified rational enclosure.
///
/// Each component is handled separately by power iteration on A + I
/// (which removes the +-rho oscillation of bipartite components) from the
/// all-ones vector. The converged iterate is rounded to a positive integer
/// vector w and the enclosure is [min (Aw)_i/w_i, max (Aw)_i/w_i], evaluated
/// exactly. For a disconnected graph the result is taken from the component
/// with the largest upper bound and the enclosure is [max lo, max hi].
inline SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {}) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "spectral_radius of the empty graph");
  if (opts.enclosure_width <= 0) {
    throw Error(ErrorKind::ParameterOutOfRange, "enclosure width must be positive");
  }
  SpectralResult best;
  mpq_class best_lo;
  bool have = false;
  std::size_t products = 0;
  std::vector<std::size_t> local(n, 0);
  for (const auto& comp : components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::vector<std::size_t>> adj(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : g.neighbors(comp[i])) adj[i].push_back(local[w]);
    }
    auto cr = detail::component_radius(adj, opts, products);
    if (!have || cr.hi > best.enclosure.hi) {
      best.rho = cr.rho;
      best.enclosure.hi = cr.hi;
      best.component = comp;
      best.perron.assign(n, 0.0);
      best.quotient_vector.assign(n, 0);
      for (std::size_t i = 0; i < comp.size(); ++i) {
        best.perron[comp[i]] = cr.x[i];
        best.quotient_vector[comp[i]] = cr.w[i];
      }
    }
    if (!have || cr.lo > best_lo) best_lo = cr.lo;
    have = true;
  }
  best.enclosure.lo = best_lo;
  best.rho = std::clamp(best.rho, best.enclosure.lo.get_d(), best.enclosure.hi.get_d());
  return best;
}

/// Entries of the positive vector behind an enclosure, as rationals scaled
/// to max-norm 1.
inline std::vector<mpq_class> rational_perron(const SpectralResult& r) {
  std::int64_t top = 1;
  for (auto v : r.quotient_vector) top = std::max(top, v);
  std::vector<mpq_class> out;
  out.reserve(r.quotient_vector.size());
  for (auto v : r.quotient_vector) out.push_back(detail::make_ratio(v, top));
  return out;
}

struct PerronCheckOptions {
  double positivity_floor = 1e-12;
};

/// True iff every Perron entry of a connected graph exceeds the floor.
inline bool check_perron_positive(const Graph& g, const SpectralResult& result,
                                  const PerronCheckOptions& opts = {}) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "Perron check needs a connected graph");
  if (result.perron.size() != g.order()) return false;
  const double top = *std::max_element(result.perron.begin(), result.perron.end());
  if (!(top > 0.0)) return false;
  return std::all_of(result.perron.begin(), result.perron.end(),
                     [&](double z) { return z / top > opts.positivity_floor; });
}

/// Closed-form spectrum of C_n: 2 cos(2 pi j / n), j = 0..n-1.
inline std::vector<double> cycle_eigenvalues(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::ParameterOutOfRange, "cycle needs n >= 3");
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact comparison

enum class Ordering { Less, Equal, Greater };

enum class CertificateKind { DisjointEnclosures, ExactRootIsolation, CommonFactorEquality };

inline std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

inline std::string to_string(CertificateKind c) {
  switch (c) {
    case CertificateKind::DisjointEnclosures: return "disjoint enclosures";
    case CertificateKind::ExactRootIsolation: return "exact root isolation";
    case CertificateKind::CommonFactorEquality: return "common-factor equality";
  }
  return "?";
}

struct RhoOrdering {
  Ordering relation = Ordering::Equal;
  CertificateKind certificate = CertificateKind::DisjointEnclosures;
  /// Human-readable account of the deciding intervals.
  std::string detail;
};

struct CompareOptions {
  SpectralOptions spectral;
  CharPolyOptions exact;
  /// Skip the enclosure shortcut and always decide by root isolation.
  bool force_exact = false;
};

/// Isolating interval of the largest root of a graph's characteristic
/// polynomial (which is the spectral radius).
inline RootInterval exact_radius_interval(const Graph& g, const mpq_class& max_width,
                                          const CharPolyOptions& opts = {}) {
  return isolate_largest_root(char_poly(g, opts), max_width);
}

namespace detail {

/// Start interval (lo - 1, hi] from a certified enclosure, shrunk until it
/// isolates the largest root. Falls back to a from-scratch isolation if the
/// enclosure is inconsistent with the chain.
inline RootInterval seed_interval(const SturmSequence& s, const Enclosure& e) {
  RootInterval iv{e.lo - 1, e.hi};
  if (s.count_roots_above(iv.hi) != 0 || s.count_roots(iv.lo, iv.hi) == 0) {
    return isolate_largest_root(s, mpq_class(1));
  }
  while (s.count_roots(iv.lo, iv.hi) > 1) bisect_largest(s, iv);
  return iv;
}

inline std::string interval_text(const RootInterval& iv) {
  return "(" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]";
}

}  // namespace detail

/// Exact ordering of rho(g1) against rho(g2) given their enclosures.
///
/// Disjoint enclosures decide immediately. Otherwise the largest roots of
/// both characteristic polynomials are isolated with Sturm chains and
/// bisected until the intervals separate or both are narrower than a
/// quarter of the root-separation bound of the combined square-free
/// polynomial. Intervals still overlapping at that point hold the same
/// algebraic number; this is confirmed by finding a root of
/// gcd(p1, p2) in the overlap.
inline RhoOrdering rho_compare(const Graph& g1, const SpectralResult& r1, const Graph& g2,
                               const SpectralResult& r2, const CompareOptions& opts = {}) {
  if (!opts.force_exact) {
    if (r1.enclosure.hi < r2.enclosure.lo) {
      return {Ordering::Less, CertificateKind::DisjointEnclosures, ""};
    }
    if (r2.enclosure.hi < r1.enclosure.lo) {
      return {Ordering::Greater, CertificateKind::DisjointEnclosures, ""};
    }
  }

  const SturmSequence s1(char_poly(g1, opts.exact));
  const SturmSequence s2(char_poly(g2, opts.exact));
  RootInterval a = detail::seed_interval(s1, r1.enclosure);
  RootInterval b = detail::seed_interval(s2, r2.enclosure);

  auto decided = [&](CertificateKind kind) -> RhoOrdering {
    const std::string text = detail::interval_text(a) + " vs " + detail::interval_text(b);
    if (a.hi <= b.lo) return {Ordering::Less, kind, text};
    return {Ordering::Greater, kind, text};
  };

  // Cheap refinement before computing the separation bound.
  for (int step = 0; step < 64 && a.overlaps(b); ++step) {
    if (a.width() >= b.width()) {
      bisect_largest(s1, a);
    } else {
      bisect_largest(s2, b);
    }
  }
  if (!a.overlaps(b)) return decided(CertificateKind::ExactRootIsolation);

  const IntPoly combined = square_free_part(s1.base() * s2.base());
  const mpq_class target = pow2(root_separation_log2(combined) - 2);
  while (a.overlaps(b) && (a.width() > target || b.width() > target)) {
    if (a.width() >= b.width()) {
      bisect_largest(s1, a);
    } else {
      bisect_largest(s2, b);
    }
  }
  if (!a.overlaps(b)) return decided(CertificateKind::ExactRootIsolation);

  const IntPoly common = gcd(s1.base(), s2.base());
  const RootInterval overlap{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (common.degree() >= 1 && SturmSequence(common).count_roots(overlap.lo, overlap.hi) >= 1) {
    return {Ordering::Equal, CertificateKind::CommonFactorEquality,
            "common factor " + common.to_string() + " has a root in " +
                detail::interval_text(overlap)};
  }
  // Distinct roots closer than the separation bound cannot exist; keep
  // bisecting in case the bound was not tight enough.
  for (int step = 0; step < 4096 && a.overlaps(b); ++step) {
    if (a.width() >= b.width()) {
      bisect_largest(s1, a);
    } else {
      bisect_largest(s2, b);
    }
  }
  if (!a.overlaps(b)) return decided(CertificateKind::ExactRootIsolation);
  throw std::logic_error("rho_compare: overlapping isolating intervals without a common root");
}

inline RhoOrdering rho_compare(const Graph& g1, const Graph& g2, const CompareOptions& opts = {}) {
  return rho_compare(g1, spectral_radius(g1, opts.spectral), g2, spectral_radius(g2, opts.spectral),
                     opts);
}

}  // namespace gspec
