#include <gtest/gtest.h>

#include <cmath>

#include "gspec/enumerate.hpp"
#include "gspec/polynomial.hpp"
#include "oracles.hpp"

using namespace gspec;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p = poly({1});
  for (long r : roots) p = p * poly({-r, 1});
  return p;
}

void expect_matches_oracle(const Graph& g) {
  const IntPoly p = char_poly(g);
  const oracle::Poly q = oracle::char_poly(g);
  ASSERT_EQ(static_cast<std::size_t>(p.degree() + 1), q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    ASSERT_EQ(p[k], mpz_class(static_cast<long>(q[k]))) << "coefficient " << k;
  }
}

}  // namespace

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(Graph(2, {{0, 1}})), poly({-1, 0, 1}));
  EXPECT_EQ(char_poly(make_family({FamilyKind::Star, 4})), poly({0, 0, 0, -4, 0, 1}));
  EXPECT_EQ(char_poly(make_family({FamilyKind::Cycle, 4})), poly({0, 0, -4, 0, 1}));
  EXPECT_EQ(char_poly(make_family({FamilyKind::Complete, 3})), poly({-2, -3, 0, 1}));
}

TEST(CharPoly, MatchesCofactorExpansionExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_connected(n, [&](const Graph& g, std::uint64_t) { expect_matches_oracle(g); });
  }
}

TEST(CharPoly, MatchesCofactorExpansionOnRandomGraphs) {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = rng.between(6, 8);
    std::vector<Edge> e;
    for (VertexId j = 1; j < n; ++j)
      for (VertexId a = 0; a < j; ++a)
        if (rng.bernoulli(1, 2)) e.emplace_back(a, j);
    expect_matches_oracle(Graph(n, e));  // connectivity is irrelevant here
  }
}

TEST(CharPoly, StructuralCoefficients) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.between(2, 12);
    const Graph g = random_connected_graph(n, {1, 3}, rng);
    const IntPoly p = char_poly(g);
    ASSERT_EQ(p.degree(), static_cast<long>(n));
    EXPECT_EQ(p.leading(), 1);
    EXPECT_EQ(p[n - 1], 0);
    EXPECT_EQ(p[n - 2], -static_cast<long>(g.edge_count()));
  }
}

TEST(CharPoly, Caps) {
  try {
    char_poly(Graph(0, std::vector<Edge>{}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyGraph);
  }
  try {
    char_poly(make_family({FamilyKind::Path, 17}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
  EXPECT_NO_THROW(char_poly(make_family({FamilyKind::Path, 17}), {.size_cap = 20}));
}

TEST(Poly, Arithmetic) {
  const IntPoly p = poly({-1, 0, 1});
  EXPECT_EQ(p.derivative(), poly({0, 2}));
  EXPECT_EQ(p * poly({1, 1}), poly({-1, -1, 1, 1}));
  EXPECT_EQ(poly({4, 6, 2}).content(), 2);
  EXPECT_EQ(poly({4, 6, 2}).primitive(), poly({2, 3, 1}));
  EXPECT_EQ(p.sign_at(mpq_class(1, 2)), -1);
  EXPECT_EQ(p.sign_at(1), 0);
  EXPECT_EQ(p.sign_at(mpq_class(-3, 2)), 1);
  EXPECT_EQ(poly({0, 0, -1}).sign_at_infinity(false), -1);
  EXPECT_EQ(poly({0, 0, 0, 1}).sign_at_infinity(false), -1);
  EXPECT_EQ(p.evaluate(mpq_class(3, 2)), mpq_class(5, 4));
  EXPECT_EQ(poly({0, -4, 0, 1}).to_string(), "x^3 - 4x");
}

TEST(Poly, GcdAndSquareFree) {
  const IntPoly a = from_roots({1, 2, 2, -3});
  const IntPoly b = from_roots({2, 5, -3, -3});
  EXPECT_EQ(gcd(a, b), from_roots({2, -3}));
  EXPECT_EQ(square_free_part(a), from_roots({1, 2, -3}));
  EXPECT_EQ(exact_quotient(a, from_roots({2, 2})), from_roots({1, -3}));
  EXPECT_EQ(gcd(from_roots({1}), from_roots({2})), poly({1}));
}

TEST(Sturm, CountsMatchKnownRoots) {
  const std::vector<long> roots{-3, -1, 0, 0, 2, 2, 2, 5};
  const SturmSequence s(from_roots(roots));
  EXPECT_EQ(s.count_real_roots(), 5U);  // distinct roots
  for (long a = -5; a <= 6; ++a) {
    for (long b = a + 1; b <= 7; ++b) {
      std::set<long> inside;
      for (long r : roots)
        if (a < r && r <= b) inside.insert(r);
      ASSERT_EQ(s.count_roots(a, b), inside.size()) << "(" << a << ", " << b << "]";
    }
  }
  EXPECT_EQ(s.count_roots_above(2), 1U);
}

TEST(Sturm, IrrationalRoots) {
  // x^4 - 5x^2 + 6 has roots +-sqrt2, +-sqrt3; x^2 + 1 has none.
  const SturmSequence s(poly({6, 0, -5, 0, 1}));
  EXPECT_EQ(s.count_real_roots(), 4U);
  EXPECT_EQ(s.count_roots(mpq_class(14, 10), mpq_class(15, 10)), 1U);
  EXPECT_EQ(s.count_roots(mpq_class(15, 10), mpq_class(17, 10)), 0U);
  EXPECT_EQ(SturmSequence(poly({1, 0, 1})).count_real_roots(), 0U);
}

TEST(Isolation, LargestRoot) {
  const IntPoly p = poly({6, 0, -5, 0, 1});
  const RootInterval iv = isolate_largest_root(p, mpq_class(1, 1000000));
  EXPECT_LE(iv.width(), mpq_class(1, 1000000));
  EXPECT_LT(iv.lo.get_d(), std::sqrt(3.0));
  EXPECT_GE(iv.hi.get_d(), std::sqrt(3.0) - 1e-15);
  EXPECT_EQ(SturmSequence(p).count_roots(iv.lo, iv.hi), 1U);
}

TEST(Isolation, ExactRootAtRightEnd) {
  // The half-open convention keeps an exactly representable root reachable.
  const RootInterval iv = isolate_largest_root(from_roots({-2, 0, 2}), mpq_class(1, 1024));
  EXPECT_LT(iv.lo, 2);
  EXPECT_GE(iv.hi, 2);
}

TEST(Isolation, SeparationBoundIsBelowActualGap) {
  const IntPoly f = from_roots({1, 2, 3, 4});
  EXPECT_LE(pow2(root_separation_log2(f)), 1);
  EXPECT_EQ(pow2(-3), mpq_class(1, 8));
  EXPECT_EQ(pow2(4), 16);
}
