#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gspec/error.hpp"
#include "gspec/graph.hpp"

namespace gspec {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, lowest degree first. The zero polynomial has no
/// coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(std::size_t degree, const mpz_class& coeff = 1) {
    std::vector<mpz_class> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPoly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  const mpz_class& operator[](std::size_t k) const { return c_.at(k); }
  const mpz_class& leading() const { return c_.back(); }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(d));
  }

  IntPoly operator-() const {
    auto c = c_;
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
  }

  /// Divides out the (positive) content; signs of values are unchanged.
  IntPoly primitive() const {
    if (is_zero()) return {};
    const mpz_class g = content();
    auto c = c_;
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
  }

  /// Sign of p(num/den) for den > 0, via the homogenised sum
  /// sum_k c_k num^k den^(d-k), which has the same sign.
  int sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    // Horner in homogeneous form.
    mpz_class acc = c_.back();
    mpz_class den_pow = 1;
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      den_pow *= den;
      acc = acc * num + c_[k] * den_pow;
    }
    return sgn(acc);
  }

  /// Sign as x -> +infinity (positive) or -infinity (negative).
  int sign_at_infinity(bool positive) const {
    if (is_zero()) return 0;
    const int s = sgn(c_.back());
    return (positive || degree() % 2 == 0) ? s : -s;
  }

  mpq_class evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + mpq_class(c_[k]);
    return acc;
  }

  double evaluate(double x) const {
    double acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].get_d();
    return acc;
  }

  bool operator==(const IntPoly& other) const { return c_ == other.c_; }

  std::string to_string(const char* var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      const mpz_class mag = abs(c_[k]);
      if (out.empty()) {
        if (c_[k] < 0) out += "-";
      } else {
        out += c_[k] < 0 ? " - " : " + ";
      }
      if (mag != 1 || k == 0) out += mag.get_str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;
};

/// Remainder of a by b over Q, scaled by a positive constant so that the
/// result has integer coefficients (and the same sign pattern as the true
/// remainder). Returned in primitive form.
inline IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ParameterOutOfRange, "division by zero polynomial");
  if (a.degree() < b.degree()) return a.primitive();
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lc = bc.back();
  const mpz_class lc_abs = abs(lc);
  // Multiply by |lc| each step, and subtract the matching multiple of b; this
  // keeps the scale factor positive.
  while (r.size() >= bc.size()) {
    const mpz_class lead = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lc_abs;
    // r - (lead * sign(lc)) * x^shift * b removes the leading term.
    const mpz_class factor = lc < 0 ? mpz_class(-lead) : lead;
    for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= factor * bc[k];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (!r.empty()) {
      // Keep coefficients small.
      IntPoly tmp(r);
      r = tmp.primitive().coeffs();
    }
  }
  return IntPoly(std::move(r)).primitive();
}

/// Greatest common divisor in Z[x]: primitive, positive leading coefficient.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    IntPoly r = positive_pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

/// Exact quotient a / b over Q, scaled to a primitive integer polynomial
/// with positive leading coefficient. Requires b | a over Q.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ParameterOutOfRange, "division by zero polynomial");
  if (a.degree() < b.degree()) return {};
  std::vector<mpq_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpq_class> q(r.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class t = r[k + db] / mpq_class(bc.back());
    q[k] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= t * bc[j];
  }
  mpz_class lcm = 1;
  for (const auto& x : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> qi;
  qi.reserve(q.size());
  for (const auto& x : q) qi.emplace_back(x.get_num() * (lcm / x.get_den()));
  IntPoly out = IntPoly(std::move(qi)).primitive();
  if (!out.is_zero() && out.leading() < 0) out = -out;
  return out;
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  const IntPoly g = gcd(p, p.derivative());
  return exact_quotient(p, g);
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

struct CharPolyOptions {
  std::size_t size_cap = 16;
};

/// det(xI - A) by the Faddeev-LeVerrier recurrence in exact integers:
/// M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
inline IntPoly char_poly(const Graph& g, const CharPolyOptions& opts = {}) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "char_poly of the empty graph");
  if (n > opts.size_cap) {
    throw Error(ErrorKind::SizeCap, "n=" + std::to_string(n) + " exceeds exact-mode cap " +
                                        std::to_string(opts.size_cap));
  }
  using Matrix = std::vector<mpz_class>;  // row-major n x n
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n * n, 0);
  Matrix am(n * n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = (A M_{k-1}) + c_{n-k+1} I; am currently holds A M_{k-1}.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = am[i * n + j];
      m[i * n + i] += c[n - k + 1];
    }
    // am = A M_k: row i of A selects rows of M_k at the neighbours of i.
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (VertexId w : g.neighbors(i)) s += m[w * n + j];
        am[i * n + j] = std::move(s);
      }
      trace += am[i * n + i];
    }
    mpz_class ck = -trace;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = ck;
  }
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Sturm sequences and real-root isolation

/// Sturm chain of the square-free part of p: s0 = sqf(p), s1 = s0',
/// s_{k+1} = -rem(s_{k-1}, s_k), each stored up to a positive factor.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p) {
    IntPoly s0 = square_free_part(p);
    if (s0.is_zero()) throw Error(ErrorKind::ParameterOutOfRange, "Sturm chain of zero");
    chain_.push_back(s0);
    IntPoly s1 = s0.derivative().primitive();
    while (!s1.is_zero()) {
      IntPoly next = -positive_pseudo_remainder(chain_.back(), s1);
      chain_.push_back(std::move(s1));
      s1 = std::move(next);
    }
  }

  const IntPoly& base() const { return chain_.front(); }
  const std::vector<IntPoly>& chain() const { return chain_; }

  /// Sign changes of the chain at x (zeros skipped).
  std::size_t variations(const mpq_class& x) const {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& s : chain_) {
      const int sg = s.sign_at(x);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
    return v;
  }

  std::size_t variations_at_infinity(bool positive) const {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& s : chain_) {
      const int sg = s.sign_at_infinity(positive);
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
    return v;
  }

  /// Number of distinct real roots in the half-open interval (a, b], a < b.
  std::size_t count_roots(const mpq_class& a, const mpq_class& b) const {
    return variations(a) - variations(b);
  }

  /// Number of distinct real roots in (a, +infinity).
  std::size_t count_roots_above(const mpq_class& a) const {
    return variations(a) - variations_at_infinity(true);
  }

  std::size_t count_real_roots() const {
    return variations_at_infinity(false) - variations_at_infinity(true);
  }

 private:
  std::vector<IntPoly> chain_;
};

/// Half-open interval (lo, hi] holding exactly one root of interest.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
  bool overlaps(const RootInterval& o) const { return lo < o.hi && o.lo < hi; }
};

/// Cauchy bound: every root satisfies |x| < 1 + max|c_k| / |c_d|.
inline mpz_class cauchy_root_bound(const IntPoly& p) {
  mpz_class m = 0;
  for (long k = 0; k < p.degree(); ++k) m = std::max(m, mpz_class(abs(p[static_cast<std::size_t>(k)])));
  mpz_class lc = abs(p.leading());
  mpz_class q = m / lc;
  return q + 2;
}

/// Halves (lo, hi] keeping the largest root of the chain inside it.
/// Requires no root of the chain in (hi, +infinity).
inline void bisect_largest(const SturmSequence& s, RootInterval& iv) {
  const mpq_class mid = (iv.lo + iv.hi) / 2;
  if (s.count_roots(mid, iv.hi) >= 1) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
}

/// Isolates the largest real root of p in an interval (lo, hi] that contains
/// no other root and has width at most `max_width`.
inline RootInterval isolate_largest_root(const SturmSequence& s, const mpq_class& max_width) {
  if (s.count_real_roots() == 0) {
    throw Error(ErrorKind::ParameterOutOfRange, "polynomial has no real roots");
  }
  const mpz_class bound = cauchy_root_bound(s.base());
  RootInterval iv{mpq_class(-bound), mpq_class(bound)};
  while (s.count_roots(iv.lo, iv.hi) > 1 || iv.width() > max_width) bisect_largest(s, iv);
  return iv;
}

inline RootInterval isolate_largest_root(const IntPoly& p, const mpq_class& max_width) {
  return isolate_largest_root(SturmSequence(p), max_width);
}

/// log2 of a lower bound on the distance between distinct roots of the
/// square-free integer polynomial f (Mahler's bound
/// sqrt(3) d^{-(d+2)/2} ||f||_2^{1-d}), rounded down conservatively.
inline long root_separation_log2(const IntPoly& f) {
  const long d = f.degree();
  if (d <= 1) return 0;
  mpz_class norm_sq = 0;
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  // log2 ||f||_2 <= bits(norm_sq) / 2
  const double log_norm = static_cast<double>(mpz_sizeinbase(norm_sq.get_mpz_t(), 2)) / 2.0;
  const double lg = 0.79 - (static_cast<double>(d) + 2.0) / 2.0 * std::log2(static_cast<double>(d)) -
                    static_cast<double>(d - 1) * log_norm;
  return static_cast<long>(std::floor(lg)) - 1;
}

/// 2^e as an exact rational.
inline mpq_class pow2(long e) {
  mpq_class r = 1;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

}  // namespace gspec
