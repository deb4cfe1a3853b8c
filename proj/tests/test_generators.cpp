#include <gtest/gtest.h>

#include "support.hpp"

using namespace onepm;

namespace {

std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

// The four FamilyInstance invariants, with the odd count taken from the
// bitmask oracle when the instance is small enough.
void expect_family_invariants(const FamilyInstance& f) {
  SCOPED_TRACE(f.name);
  EXPECT_EQ(min_degree(f.graph), f.delta);
  EXPECT_TRUE(validate(f.drawing).ok());
  EXPECT_EQ(f.drawing.mode(), EdgeMode::simple);
  EXPECT_EQ(format_edge_list(f.drawing.graph()), format_edge_list(f.graph));
  const int n = f.graph.vertex_count();
  const int odd = n <= 32 ? testsupport::odd_count_mask(testsupport::adjacency_masks(f.graph), mask_of(f.witness))
                          : odd_components(f.graph, f.witness).odd_count;
  EXPECT_EQ(odd - static_cast<int>(f.witness.size()), f.predicted_deficiency);
  const int slack = n - f.predicted_deficiency;
  EXPECT_EQ(f.predicted_matching_upper, slack / 2);
}

int count_faces_of_size(const OnePlanarDrawing& d, std::size_t k) {
  int c = 0;
  for (const Face& f : faces(d)) c += f.size() == k;
  return c;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::parse_error;
}

}  // namespace

TEST(StackedTriangulation, FaceCounts) {
  for (int s : {3, 4, 5, 10, 17}) {
    const OnePlanarDrawing d = stacked_triangulation(s);
    EXPECT_TRUE(validate(d).ok());
    EXPECT_EQ(d.dummy_count(), 0);
    EXPECT_EQ(d.edge_count(), 3 * s - 6);
    EXPECT_EQ(static_cast<int>(faces(d).size()), 2 * s - 4);
    EXPECT_EQ(count_faces_of_size(d, 3), 2 * s - 4);
  }
  EXPECT_EQ(faces(stacked_triangulation(3)).size(), 2u);
  EXPECT_EQ(faces(stacked_triangulation(4)).size(), 4u);
  EXPECT_EQ(faces(stacked_triangulation(10)).size(), 16u);
  EXPECT_EQ(code_of([] { stacked_triangulation(2); }), Errc::too_small);
}

TEST(StackedQuadrangulation, FaceCountsAndBipartite) {
  for (int s : {4, 6, 8, 12, 20}) {
    const OnePlanarDrawing d = stacked_quadrangulation(s);
    EXPECT_TRUE(validate(d).ok());
    EXPECT_EQ(d.edge_count(), 2 * s - 4);
    EXPECT_EQ(static_cast<int>(faces(d).size()), s - 2);
    EXPECT_EQ(count_faces_of_size(d, 4), s - 2);
    EXPECT_TRUE(bipartition(d.graph()).has_value());
  }
  EXPECT_EQ(faces(stacked_quadrangulation(8)).size(), 6u);
  EXPECT_EQ(faces(stacked_quadrangulation(12)).size(), 10u);
  EXPECT_EQ(code_of([] { stacked_quadrangulation(2); }), Errc::too_small);
  EXPECT_EQ(code_of([] { stacked_quadrangulation(7); }), Errc::bad_parity);
}

TEST(FamilyDelta3, InvariantsAndCounts) {
  for (int s : {4, 5, 6, 8}) {
    const auto f = family_delta3(s);
    expect_family_invariants(f);
    EXPECT_EQ(f.graph.vertex_count(), 7 * s - 12);
    EXPECT_EQ(f.predicted_deficiency, 5 * s - 12);
    EXPECT_EQ(f.witness.members(), VertexSet::range(0, s).members());
  }
  const auto s4 = family_delta3(4);
  EXPECT_EQ(s4.graph.vertex_count(), 16);
  EXPECT_EQ(s4.predicted_deficiency, 8);
  EXPECT_EQ(s4.predicted_matching_upper, 4);
  EXPECT_EQ(family_delta3(6).predicted_matching_upper, 6);
  EXPECT_EQ(code_of([] { family_delta3(3); }), Errc::too_small);
}

TEST(FamilyDelta3, InsertedVerticesSeeAWholeTriangle) {
  const int s = 6;
  const auto f = family_delta3(s);
  for (Vertex v = s; v < f.graph.vertex_count(); ++v) {
    std::vector<Vertex> base;
    for (Vertex w : f.graph.neighbors(v))
      if (w < s) base.push_back(w);
    ASSERT_EQ(base.size(), 3u);
    EXPECT_TRUE(f.graph.adjacent(base[0], base[1]));
    EXPECT_TRUE(f.graph.adjacent(base[1], base[2]));
    EXPECT_TRUE(f.graph.adjacent(base[0], base[2]));
  }
}

TEST(FamilyDelta4, InvariantsAndCounts) {
  for (int s : {4, 6, 8, 10}) {
    const auto f = family_delta4(s);
    expect_family_invariants(f);
    EXPECT_EQ(f.graph.vertex_count(), 3 * s - 4);
    EXPECT_EQ(f.predicted_deficiency, s - 4);
  }
  const auto s8 = family_delta4(8);
  EXPECT_EQ(s8.graph.vertex_count(), 20);
  EXPECT_EQ(s8.predicted_deficiency, 4);
  EXPECT_EQ(s8.predicted_matching_upper, 8);
  EXPECT_EQ(family_delta4(4).predicted_deficiency, 0);
  EXPECT_EQ(code_of([] { family_delta4(5); }), Errc::bad_parity);
}

TEST(FamilyDelta4, InsertedVerticesSeeAWholeQuad) {
  const int s = 8;
  const auto f = family_delta4(s);
  for (Vertex v = s; v < f.graph.vertex_count(); ++v) {
    std::vector<Vertex> base;
    for (Vertex w : f.graph.neighbors(v))
      if (w < s) base.push_back(w);
    ASSERT_EQ(base.size(), 4u);
    int cycle_edges = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) cycle_edges += f.graph.adjacent(base[i], base[j]);
    EXPECT_EQ(cycle_edges, 4);
  }
}

TEST(FamilyDelta4K5, InvariantsAndCounts) {
  for (int k = 1; k <= 7; ++k) {
    const auto f = family_delta4_k5(k);
    expect_family_invariants(f);
    EXPECT_EQ(f.graph.vertex_count(), 3 * k + 2);
    EXPECT_EQ(f.drawing.dummy_count(), k);
  }
  const auto k6 = family_delta4_k5(6);
  EXPECT_EQ(k6.graph.vertex_count(), 20);
  EXPECT_EQ(k6.predicted_deficiency, 4);
  EXPECT_EQ(k6.predicted_matching_upper, 8);
  EXPECT_EQ(tutte_berge_bruteforce(k6.graph).deficiency, 4);
  EXPECT_EQ(family_delta4_k5(1).graph.edge_count(), 10);
  EXPECT_EQ(code_of([] { family_delta4_k5(0); }), Errc::too_small);
}

TEST(FamilyDelta5, InvariantsAndCounts) {
  for (int g = 1; g <= 5; ++g) {
    const auto f = family_delta5(g);
    expect_family_invariants(f);
    EXPECT_EQ(f.graph.vertex_count(), 5 * g + 1);
    EXPECT_EQ(f.drawing.dummy_count(), 3 * g);
  }
  const auto g4 = family_delta5(4);
  EXPECT_EQ(g4.predicted_deficiency, 3);
  EXPECT_EQ(g4.predicted_matching_upper, 9);
  EXPECT_EQ(family_delta5(1).graph.edge_count(), 15);
}

TEST(FamilyDelta6, InvariantsAndCounts) {
  for (int g = 1; g <= 4; ++g) {
    const auto f = family_delta6(g);
    expect_family_invariants(f);
    EXPECT_EQ(f.graph.vertex_count(), 7 * g + 1);
    EXPECT_EQ(f.drawing.dummy_count(), 6 * g);
    for (Vertex v = 1; v < f.graph.vertex_count(); ++v) EXPECT_EQ(f.graph.degree(v), 6);
  }
  const auto g1 = family_delta6(1);
  EXPECT_EQ(g1.graph.edge_count(), 24);
  EXPECT_EQ(min_degree(g1.graph), 6);
  const auto g3 = family_delta6(3);
  EXPECT_EQ(g3.graph.vertex_count(), 22);
  EXPECT_EQ(g3.predicted_deficiency, 2);
  EXPECT_EQ(g3.predicted_matching_upper, 10);
}

TEST(FamilyDelta6, MatchingIsThreePerBlockPlusOne) {
  for (int g = 1; g <= 3; ++g) {
    const auto f = family_delta6(g);
    EXPECT_EQ(testsupport::matching_size_oracle(f.graph), 3 * g + 1);
    EXPECT_EQ(maximum_matching(f.graph).size(), 3 * g + 1);
  }
}

TEST(Delta7Block, IsSimpleOnePlanarMinDegreeSeven) {
  const OnePlanarDrawing b = delta7_block();
  EXPECT_TRUE(validate(b).ok());
  EXPECT_EQ(b.mode(), EdgeMode::simple);
  EXPECT_EQ(b.real_count(), 24);
  EXPECT_EQ(min_degree(b.graph()), 7);
  EXPECT_TRUE(bigons(b).empty());
  // Every crossing uses two distinct edges, and no edge is crossed twice.
  std::vector<int> times(static_cast<std::size_t>(b.edge_count()), 0);
  for (int p = 0; p < b.pvertex_count(); ++p)
    if (b.pvertex(p).dummy) {
      EXPECT_NE(b.pvertex(p).edge_a, b.pvertex(p).edge_b);
      ++times[b.pvertex(p).edge_a];
      ++times[b.pvertex(p).edge_b];
    }
  for (int t : times) EXPECT_LE(t, 1);
}

TEST(FamilyDelta7, InvariantsAndCounts) {
  const auto g1 = family_delta7(1);
  expect_family_invariants(g1);
  EXPECT_EQ(g1.graph.vertex_count(), 24);
  EXPECT_EQ(g1.predicted_deficiency, 0);
  const auto g2 = family_delta7(2);
  expect_family_invariants(g2);
  EXPECT_EQ(g2.graph.vertex_count(), 47);
  EXPECT_EQ(g2.predicted_deficiency, 1);
  EXPECT_EQ(g2.predicted_matching_upper, 23);
  EXPECT_EQ((11 * 47 + 12) / 23, 23);
  EXPECT_EQ(maximum_matching(g2.graph).size(), 23);
}

TEST(Families, SolverMatchesPredictedUpperAtThresholds) {
  EXPECT_EQ(maximum_matching(family_delta3(4).graph).size(), 4);
  EXPECT_EQ(maximum_matching(family_delta4(8).graph).size(), 8);
  EXPECT_EQ(maximum_matching(family_delta4_k5(6).graph).size(), 8);
  EXPECT_EQ(maximum_matching(family_delta5(4).graph).size(), 9);
  EXPECT_EQ(testsupport::matching_size_oracle(family_delta3(4).graph), 4);
  EXPECT_EQ(testsupport::matching_size_oracle(family_delta4(8).graph), 8);
  EXPECT_EQ(testsupport::matching_size_oracle(family_delta5(4).graph), 9);
}

TEST(Families, SolverNeverExceedsPrediction) {
  std::vector<FamilyInstance> all;
  for (int s : {4, 5, 7}) all.push_back(family_delta3(s));
  for (int s : {4, 6, 10}) all.push_back(family_delta4(s));
  for (int k : {1, 2, 5}) all.push_back(family_delta4_k5(k));
  for (int g : {1, 2, 6}) all.push_back(family_delta5(g));
  for (int g : {1, 2, 5}) all.push_back(family_delta6(g));
  all.push_back(family_delta7(3));
  for (const auto& f : all) EXPECT_LE(maximum_matching(f.graph).size(), f.predicted_matching_upper) << f.name;
}

TEST(RandomOnePlanar, Examples) {
  const OnePlanarDrawing planar = random_oneplanar(10, 0, 1);
  EXPECT_TRUE(validate(planar).ok());
  EXPECT_EQ(planar.dummy_count(), 0);
  EXPECT_EQ(planar.real_count(), 10);

  const OnePlanarDrawing d = random_oneplanar(12, 3, 7);
  EXPECT_TRUE(validate(d).ok());
  EXPECT_EQ(crossing_partition(d).crossed.size(), 6u);
  EXPECT_EQ(d.real_count(), 12);
  EXPECT_EQ(format_1pg(random_oneplanar(12, 3, 7)), format_1pg(d));
}

TEST(RandomOnePlanar, DeterministicAndSeedSensitive) {
  int distinct = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::string a = format_1pg(random_oneplanar(14, 2, seed));
    EXPECT_EQ(a, format_1pg(random_oneplanar(14, 2, seed)));
    distinct += a != format_1pg(random_oneplanar(14, 2, seed + 1000));
  }
  EXPECT_GT(distinct, 20);
}

TEST(RandomOnePlanar, SweepIsValid) {
  for (int n = 4; n <= 30; ++n)
    for (int x = 0; 2 * x <= n - 3 && x <= 2 * (n - 2 * x) - 4; ++x) {
      const OnePlanarDrawing d = random_oneplanar(n, x, static_cast<std::uint64_t>(n * 100 + x));
      EXPECT_TRUE(validate(d).ok()) << n << ' ' << x;
      EXPECT_EQ(d.dummy_count(), x);
      EXPECT_EQ(d.real_count(), n);
    }
}

TEST(RandomOnePlanar, Rejections) {
  EXPECT_EQ(code_of([] { random_oneplanar(3, 0, 1); }), Errc::too_small);
  EXPECT_EQ(code_of([] { random_oneplanar(8, 3, 1); }), Errc::too_many_crossings);
  EXPECT_EQ(code_of([] { random_oneplanar(8, -1, 1); }), Errc::too_many_crossings);
}
