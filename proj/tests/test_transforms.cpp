#include <gtest/gtest.h>

#include <cmath>

#include "gspec/enumerate.hpp"
#include "gspec/graph6.hpp"
#include "gspec/transforms.hpp"
#include "oracles.hpp"

using namespace gspec;

namespace {

Graph fam(FamilyKind k, std::size_t p) { return make_family({k, p}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected gspec::Error";
  return ErrorKind::EmptyGraph;
}

std::set<Edge> edge_set(const std::vector<Edge>& e) { return {e.begin(), e.end()}; }

// Triangles {0,1,2} and {3,4,5}, joined by 2 - 6 - 7 - 5.
Graph two_triangles() {
  return Graph(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 6}, {6, 7}, {7, 5}});
}

}  // namespace

TEST(InternalPaths, TildeDCentralPath) {
  // TildeD(k) has k + 1 vertices, so its central path has k - 5 interior
  // vertices: one for TildeD(6), two for TildeD(7).
  for (std::size_t k = 5; k <= 9; ++k) {
    const auto paths = find_internal_paths(fam(FamilyKind::TildeD, k));
    ASSERT_EQ(paths.size(), 1U);
    EXPECT_EQ(paths[0].interior_count(), k - 5) << k;
  }
}

TEST(InternalPaths, CycleHasNone) {
  EXPECT_TRUE(find_internal_paths(fam(FamilyKind::Cycle, 5)).empty());
  EXPECT_TRUE(find_internal_paths(fam(FamilyKind::Path, 6)).empty());
}

TEST(InternalPaths, TwoTrianglesJoinedByAPath) {
  // The connecting path is the only open internal path. Each triangle also
  // closes into a path whose two ends coincide at the degree-3 corner.
  const Graph g = two_triangles();
  const auto paths = find_internal_paths(g);
  std::vector<InternalPath> open;
  for (const auto& p : paths)
    if (p.front() != p.back()) open.push_back(p);
  ASSERT_EQ(open.size(), 1U);
  EXPECT_EQ(open[0].vertices, (std::vector<VertexId>{2, 6, 7, 5}));
  EXPECT_EQ(paths.size(), 3U);
  EXPECT_EQ(edge_set(internal_path_edges(g)), oracle::internal_edges_by_definition(g));
}

TEST(InternalPaths, CanonicalOrientation) {
  for (const auto& p : find_internal_paths(two_triangles())) {
    if (p.front() == p.back()) {
      EXPECT_LT(p.vertices[1], p.vertices[p.vertices.size() - 2]);
    } else {
      EXPECT_LT(p.front(), p.back());
    }
  }
}

TEST(InternalPaths, EdgesMatchDefinitionExhaustively) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for_each_connected(n, [](const Graph& g, std::uint64_t) {
      ASSERT_EQ(edge_set(internal_path_edges(g)), oracle::internal_edges_by_definition(g));
    });
  }
}

TEST(Subdivide, TildeDFiveCentralEdge) {
  const Graph g = fam(FamilyKind::TildeD, 5);
  const Graph h = subdivide_edge(g, 0, 1);
  EXPECT_EQ(h.degree_sequence(), (std::vector<std::size_t>{3, 3, 2, 1, 1, 1, 1}));
  EXPECT_EQ(recognize(h), (NamedFamily{FamilyKind::TildeD, 6}));
  EXPECT_EQ(h.degree(6), 2U);
}

TEST(Subdivide, CompleteFourEdge) {
  const Graph h = subdivide_edge(fam(FamilyKind::Complete, 4), 0, 1);
  EXPECT_EQ(h.order(), 5U);
  EXPECT_EQ(h.edge_count(), 7U);
  EXPECT_EQ(h.degree(4), 2U);
  EXPECT_FALSE(h.adjacent(0, 1));
}

TEST(Subdivide, Errors) {
  EXPECT_EQ(kind_of([] { subdivide_edge(fam(FamilyKind::Cycle, 6), 0, 1); }), ErrorKind::NotInternalPathEdge);
  EXPECT_EQ(kind_of([] { subdivide_edge(fam(FamilyKind::Complete, 4), 0, 9); }), ErrorKind::NoSuchEdge);
  // Pendant edge of TildeD(5): not on the central path.
  EXPECT_EQ(kind_of([] { subdivide_edge(fam(FamilyKind::TildeD, 5), 0, 2); }), ErrorKind::NotInternalPathEdge);
}

TEST(Subdivide, GrowsThePathByOneInterior) {
  for (std::size_t n = 4; n <= 6; ++n) {
    for_each_connected(n, [](const Graph& g, std::uint64_t) {
      for (auto [u, w] : internal_path_edges(g)) {
        const Graph h = subdivide_edge(g, u, w);
        ASSERT_EQ(h.order(), g.order() + 1);
        ASSERT_EQ(h.edge_count(), g.edge_count() + 1);
        ASSERT_EQ(h.neighbors(g.order()).size(), 2U);
        std::size_t before = 0;
        std::size_t after = 0;
        for (const auto& p : find_internal_paths(g))
          if (p.contains_edge(u, w)) before = p.interior_count();
        for (const auto& p : find_internal_paths(h))
          if (p.contains_edge(u, g.order())) after = p.interior_count();
        ASSERT_EQ(after, before + 1);
      }
    });
  }
}

TEST(SplitAdjacent, StarFive) {
  const Graph h = split_vertex_adjacent(fam(FamilyKind::Star, 5), {0, {1, 2}, {3, 4, 5}});
  EXPECT_EQ(h.order(), 7U);
  EXPECT_EQ(h.degree(0), 3U);
  EXPECT_EQ(h.degree(6), 4U);
  EXPECT_TRUE(h.adjacent(0, 6));
  EXPECT_TRUE(h.adjacent(6, 5));
}

TEST(SplitAdjacent, StarFourGivesTildeDFive) {
  const Graph h = split_vertex_adjacent(fam(FamilyKind::Star, 4), {0, {1, 2}, {3, 4}});
  EXPECT_EQ(recognize(h), (NamedFamily{FamilyKind::TildeD, 5}));
}

TEST(SplitAdjacent, Errors) {
  EXPECT_EQ(kind_of([] { split_vertex_adjacent(fam(FamilyKind::Cycle, 4), {0, {1}, {3}}); }),
            ErrorKind::DegreeTooSmall);
  const Graph s5 = fam(FamilyKind::Star, 5);
  EXPECT_EQ(kind_of([&] { split_vertex_adjacent(s5, {0, {1}, {2, 3, 4, 5}}); }), ErrorKind::BadPartition);
  EXPECT_EQ(kind_of([&] { split_vertex_adjacent(s5, {0, {1, 2}, {3, 4}}); }), ErrorKind::BadPartition);
  EXPECT_EQ(kind_of([&] { split_vertex_adjacent(s5, {0, {1, 2, 3}, {3, 4, 5}}); }), ErrorKind::BadPartition);
  EXPECT_EQ(kind_of([&] { split_vertex_adjacent(s5, {9, {1, 2}, {3, 4, 5}}); }), ErrorKind::IndexOutOfRange);
}

TEST(SplitNonadjacent, Examples) {
  const Graph p3 = split_vertex_nonadjacent(fam(FamilyKind::Path, 3), {1, {0}, {2}});
  EXPECT_EQ(p3, Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(components(p3).size(), 2U);

  const Graph c4 = split_vertex_nonadjacent(fam(FamilyKind::Cycle, 4), {0, {1}, {3}});
  EXPECT_EQ(c4.edge_count(), 4U);
  EXPECT_TRUE(is_connected(c4));
  EXPECT_EQ(c4.degree_sequence(), (std::vector<std::size_t>{2, 2, 2, 1, 1}));

  const Graph k12 = fam(FamilyKind::Star, 2);
  const Graph two_k2 = split_vertex_nonadjacent(k12, {0, {1}, {2}});
  EXPECT_NEAR(spectral_radius(k12).rho, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(spectral_radius(two_k2).rho, 1.0, 1e-9);
  EXPECT_EQ(rho_compare(two_k2, k12).relation, Ordering::Less);
}

TEST(SplitNonadjacent, Errors) {
  EXPECT_EQ(kind_of([] { split_vertex_nonadjacent(fam(FamilyKind::Path, 3), {0, {1}, {}}); }),
            ErrorKind::DegreeTooSmall);
  EXPECT_EQ(kind_of([] { split_vertex_nonadjacent(fam(FamilyKind::Path, 3), {1, {0, 2}, {}}); }),
            ErrorKind::BadPartition);
}

TEST(Expand, TwoPartsEqualsAdjacentSplit) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_hub_graph(rng.between(6, 10), 4, {1, 3}, rng);
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 4) continue;
      for (const auto& spec : neighbor_bipartitions(g, v, 2)) {
        ASSERT_EQ(expand_to_complete(g, {v, {spec.x_side, spec.y_side}}), split_vertex_adjacent(g, spec));
      }
    }
  }
}

TEST(Expand, StarNineIntoTriangle) {
  const Graph s9 = fam(FamilyKind::Star, 9);
  const Graph h = expand_to_complete(s9, {0, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}});
  EXPECT_EQ(h.order(), 12U);
  EXPECT_EQ(h.edge_count(), 12U);
  EXPECT_TRUE(h.adjacent(0, 10) && h.adjacent(0, 11) && h.adjacent(10, 11));
  for (VertexId corner : {0U, 10U, 11U}) EXPECT_EQ(h.degree(corner), 5U);
  EXPECT_TRUE(h.adjacent(10, 5));
}

TEST(Expand, Errors) {
  const Graph s9 = fam(FamilyKind::Star, 9);
  EXPECT_EQ(kind_of([&] { expand_to_complete(s9, {0, {{1, 2}, {3, 4, 5}, {6, 7, 8, 9}}}); }),
            ErrorKind::PartitionTooSmall);
  EXPECT_EQ(kind_of([&] { expand_to_complete(s9, {0, {{1, 2, 3, 4, 5, 6, 7, 8, 9}}}); }),
            ErrorKind::BadPartition);
  EXPECT_EQ(kind_of([&] { expand_to_complete(s9, {0, {{1, 2, 3}, {4, 5, 6}, {7, 8}}}); }),
            ErrorKind::BadPartition);
  EXPECT_EQ(kind_of([] {
              expand_to_complete(fam(FamilyKind::Star, 8), {0, {{1, 2, 3}, {4, 5, 6}, {7, 8}}});
            }),
            ErrorKind::DegreeTooSmall);
}

TEST(Witness, StarFiveIsCaseTwo) {
  const Graph g = fam(FamilyKind::Star, 5);
  const SplitSpec spec{0, {1, 2}, {3, 4, 5}};
  const WitnessVector w = construct_split_witness(g, spec, spectral_radius(g));
  EXPECT_EQ(w.case_id, 2);
  EXPECT_TRUE(w.sound());
  // Max-norm Perron vector: centre 1, leaves 1/sqrt5.
  EXPECT_NEAR(w.sum_x.get_d(), 2 / std::sqrt(5.0), 1e-8);
  EXPECT_NEAR(w.sum_y.get_d(), 3 / std::sqrt(5.0), 1e-8);
  EXPECT_EQ(w.values[0], w.sum_x);
  EXPECT_EQ(w.values[6], w.z_v);
}

TEST(Witness, CaseOneOnTheBoundaryHasNoStrictSlack) {
  // Exact Perron vector of K_{1,4}: centre 2, leaves 1, rho = 2.
  const Graph g = fam(FamilyKind::Star, 4);
  const std::vector<mpq_class> z{2, 1, 1, 1, 1};
  const WitnessVector w = construct_split_witness(g, {0, {1, 2}, {3, 4}}, z, mpq_class(2));
  EXPECT_EQ(w.case_id, 1);
  EXPECT_EQ(w.values[0], 2);
  EXPECT_EQ(w.values[5], 2);
  EXPECT_TRUE(w.nonnegative());
  // Leaves and split vertices all balance exactly.
  for (VertexId u : {1U, 2U, 3U, 4U}) EXPECT_EQ(w.row_slack[u], 0);
}

TEST(Witness, CaseSelection) {
  EXPECT_EQ(split_case(2, 1, 1), 1);
  EXPECT_EQ(split_case(2, 2, 2), 1);
  EXPECT_EQ(split_case(2, 1, 3), 2);
  EXPECT_EQ(split_case(2, 3, 1), 3);
  EXPECT_EQ(split_case(2, 3, 3), 4);
}

TEST(Witness, SoundOnRandomGraphs) {
  Rng rng(17);
  std::array<int, 4> cases{};
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_hub_graph(rng.between(6, 10), 4, {1, 3}, rng);
    const auto r = spectral_radius(g);
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 4) continue;
      for (const auto& spec : neighbor_bipartitions(g, v, 2)) {
        const WitnessVector w = construct_split_witness(g, spec, r);
        ASSERT_TRUE(w.sound()) << to_graph6(g) << " " << describe(spec);
        ++cases[static_cast<std::size_t>(w.case_id - 1)];
      }
    }
  }
  EXPECT_GT(cases[3], 0);
}

TEST(Witness, Errors) {
  const Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 6}});
  const auto r = spectral_radius(g);
  EXPECT_EQ(kind_of([&] { construct_split_witness(g, {0, {1, 2}, {3, 4}}, r); }), ErrorKind::NotConnected);
  const Graph c5 = fam(FamilyKind::Cycle, 5);
  EXPECT_EQ(kind_of([&] { construct_split_witness(c5, {0, {1}, {4}}, spectral_radius(c5)); }),
            ErrorKind::DegreeTooSmall);
}
