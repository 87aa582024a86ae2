// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rainbow/plane_forest.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "rainbow/error.h"
#include "rainbow/naive.h"
#include "rainbow/random_instances.h"

namespace rainbow {
namespace {

GeometricGraph Graph(std::vector<Point> pts) {
  return GeometricGraph(PointSet::Build(pts));
}

const std::vector<Point> kTriangle = {{0, 0}, {2, 0}, {1, 2}};
const std::vector<Point> kSquare = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
const std::vector<Point> kSquarePlusInterior = {
    {0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}};
const std::vector<Point> kQuadPlusInterior = {
    {0, 0}, {5, 0}, {6, 4}, {1, 5}, {2, 2}};
const std::vector<Point> kPentagon = {
    {0, 0}, {4, 0}, {6, 3}, {2, 6}, {-2, 3}};

EdgeSet Edges(const GeometricGraph& g,
              std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet s;
  for (auto [a, b] : pairs) s.Insert(g.EdgeIndex(a, b));
  return s;
}

TEST(GeometricGraphTest, EdgeIndexMatchesLexicographicOrder) {
  const GeometricGraph g = Graph(kPentagon);
  ASSERT_EQ(g.edge_count(), 10);
  for (int j = 0; j < g.edge_count(); ++j) {
    EXPECT_EQ(g.EdgeIndex(g.edge(j).a, g.edge(j).b), j);
    EXPECT_EQ(g.EdgeIndex(g.edge(j).b, g.edge(j).a), j);
    if (j > 0) EXPECT_LT(g.edge(j - 1), g.edge(j));
  }
  EXPECT_EQ(g.hull_edges().Size(), 5);
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(EnumeratePlaneSpanningTrees(Graph(kTriangle)).size(), 3u);
  EXPECT_EQ(EnumeratePlaneSpanningTrees(Graph(kSquare)).size(), 12u);
  // Frozen from a subset-filter brute force over all C(10,4) edge sets.
  EXPECT_EQ(EnumeratePlaneSpanningTrees(Graph(kSquarePlusInterior)).size(),
            77u);
}

TEST(EnumerateTest, MatchesSubsetFilterOracleInLexicographicOrder) {
  for (InstanceKind kind : {InstanceKind::kConvex, InstanceKind::kOneInterior,
                            InstanceKind::kGeneral}) {
    for (int n = 4; n <= 7; ++n) {
      const PointSet p = RandomPointSet(kind, n, 100 + n);
      const GeometricGraph g(p);
      const std::vector<PlaneTree> trees = EnumeratePlaneSpanningTrees(g);
      std::vector<SmallSet> masks;
      for (std::size_t i = 0; i < trees.size(); ++i) {
        masks.push_back(trees[i].edges);
        if (i > 0) EXPECT_TRUE(LexLess(trees[i - 1].edges, trees[i].edges));
      }
      std::sort(masks.begin(), masks.end(),
                [](SmallSet a, SmallSet b) { return a.bits() < b.bits(); });
      EXPECT_EQ(masks, naive::PlaneSpanningTrees(p))
          << InstanceKindName(kind) << " n=" << n;
    }
  }
}

TEST(EnumerateTest, RespectsCap) {
  const GeometricGraph g(RandomPointSet(InstanceKind::kConvex, 8, 1));
  try {
    EnumeratePlaneSpanningTrees(g, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(ClassifyTest, StarAndHullPath) {
  const GeometricGraph g = Graph(kSquare);
  const TreeClass star = ClassifyTree(g, {Edges(g, {{0, 1}, {0, 2}, {0, 3}})});
  EXPECT_TRUE(star.is_star);
  const TreeClass path = ClassifyTree(g, {Edges(g, {{0, 1}, {1, 2}, {2, 3}})});
  EXPECT_FALSE(path.is_star);
  EXPECT_TRUE(path.is_caterpillar);
  EXPECT_TRUE(path.is_geometric_caterpillar);
}

TEST(ClassifyTest, BodyThroughADiagonalIsNotGeometric) {
  const GeometricGraph g = Graph(kSquare);
  const PlaneTree t{Edges(g, {{0, 1}, {0, 2}, {2, 3}})};
  const TreeClass cls = ClassifyTree(g, t);
  EXPECT_TRUE(cls.is_caterpillar);
  EXPECT_FALSE(cls.is_geometric_caterpillar);
  EXPECT_TRUE(ComplementPlaneTree(g, t).has_value());
}

TEST(ClassifyTest, SpiderIsNotACaterpillar) {
  const GeometricGraph g(RandomPointSet(InstanceKind::kConvex, 7, 4));
  // Hull order 0..6 is not guaranteed; relabel through the hull cycle.
  const auto& h = g.points().hull();
  const PlaneTree t{Edges(g, {{h[0], h[1]},
                              {h[1], h[2]},
                              {h[0], h[3]},
                              {h[3], h[4]},
                              {h[0], h[5]},
                              {h[5], h[6]}})};
  ASSERT_TRUE(IsPlaneSpanningTree(g, t.edges));
  const TreeClass cls = ClassifyTree(g, t);
  EXPECT_FALSE(cls.is_star);
  EXPECT_FALSE(cls.is_caterpillar);
  EXPECT_FALSE(cls.is_geometric_caterpillar);
}

TEST(ClassifyTest, LegLineHittingTheTreeIsNotGeometric) {
  // The line through (0,0)-(2,1) meets the edge (4,0)-(4,4) at (4,2).
  const GeometricGraph g = Graph(kSquarePlusInterior);
  const PlaneTree t{Edges(g, {{0, 1}, {0, 3}, {0, 4}, {1, 2}})};
  ASSERT_TRUE(IsPlaneSpanningTree(g, t.edges));
  const TreeClass cls = ClassifyTree(g, t);
  EXPECT_TRUE(cls.is_caterpillar);
  EXPECT_FALSE(cls.is_geometric_caterpillar);
  EXPECT_TRUE(ComplementPlaneTree(g, t).has_value());
}

TEST(FindWithinTest, Examples) {
  const GeometricGraph g = Graph(kSquare);
  const auto hull_tree = FindPlaneTreeWithin(g, g.hull_edges());
  ASSERT_TRUE(hull_tree);
  EXPECT_TRUE(hull_tree->edges.IsSubsetOf(g.hull_edges()));
  EXPECT_EQ(hull_tree->edges.Size(), 3);
  EXPECT_FALSE(FindPlaneTreeWithin(g, Edges(g, {{0, 2}, {1, 3}})));
}

TEST(FindWithinTest, ComplementOfFewEdgesAlwaysHasAPlaneTree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet p = RandomPointSet(InstanceKind::kConvex, 6, trial);
    const GeometricGraph g(p);
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    EdgeSet removed;
    for (int i = 0; i < 4; ++i) removed.Insert(order[i]);
    const auto found = FindPlaneTreeWithin(g, g.all_edges() - removed);
    ASSERT_TRUE(found);
    EXPECT_TRUE((found->edges & removed).Empty());
    EXPECT_TRUE(IsPlaneSpanningTree(g, found->edges));
  }
}

TEST(ComplementTest, Examples) {
  const GeometricGraph square = Graph(kSquare);
  EXPECT_FALSE(ComplementPlaneTree(
      square, {Edges(square, {{0, 1}, {1, 2}, {2, 3}})}));
  const GeometricGraph pentagon = Graph(kPentagon);
  EXPECT_FALSE(ComplementPlaneTree(
      pentagon, {Edges(pentagon, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})}));
}

TEST(ComplementTest, BiconditionalOnSmallInstances) {
  for (InstanceKind kind : {InstanceKind::kConvex, InstanceKind::kOneInterior,
                            InstanceKind::kGeneral}) {
    for (int n = 4; n <= 6; ++n) {
      const GeometricGraph g(RandomPointSet(kind, n, 31 * n));
      for (const PlaneTree& t : EnumeratePlaneSpanningTrees(g)) {
        const TreeClass cls = ClassifyTree(g, t);
        const bool blocked = cls.is_star || cls.is_geometric_caterpillar;
        const auto c = ComplementPlaneTree(g, t);
        EXPECT_EQ(!c.has_value(), blocked);
        if (c) EXPECT_TRUE((c->edges & t.edges).Empty());
      }
    }
  }
}

TEST(HullTransversalTest, Examples) {
  EXPECT_EQ(HullTransversal(Graph(kPentagon)).edges.Size(), 5);
  const GeometricGraph tri = Graph(kTriangle);
  EXPECT_EQ(HullTransversal(tri).edges, tri.all_edges());
  try {
    HullTransversal(Graph(kSquarePlusInterior));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotConvexPosition);
  }
}

TEST(HullTransversalTest, EveryPlaneTreeMeetsItTwice) {
  for (int n = 3; n <= 7; ++n) {
    const GeometricGraph g(RandomPointSet(InstanceKind::kConvex, n, n));
    const TransversalQ q = HullTransversal(g);
    EXPECT_EQ(q.kind, TransversalQ::Kind::kHullOnly);
    for (const PlaneTree& t : EnumeratePlaneSpanningTrees(g)) {
      EXPECT_GE((t.edges & q.edges).Size(), 2);
    }
  }
}

TEST(InteriorTransversalTest, UniqueMaximum) {
  const GeometricGraph g = Graph(kQuadPlusInterior);
  const TransversalQ q = InteriorTransversal(g);
  EXPECT_EQ(q.kind, TransversalQ::Kind::kHullPlusInterior);
  EXPECT_EQ(q.edges, g.hull_edges() | Edges(g, {{0, 4}, {2, 4}}));
}

TEST(InteriorTransversalTest, TieBreaksLexicographically) {
  const GeometricGraph g = Graph(kSquarePlusInterior);
  const auto& p = g.points();
  EXPECT_EQ(CompareAngles(p[4], p[0], p[2], p[1], p[3]),
            std::strong_ordering::equal);
  EXPECT_EQ(InteriorTransversal(g).edges,
            g.hull_edges() | Edges(g, {{0, 4}, {2, 4}}));
}

TEST(InteriorTransversalTest, TriangleWithInteriorOmitsOneEdge) {
  const GeometricGraph g = Graph({{0, 0}, {6, 0}, {2, 5}, {2, 2}});
  const TransversalQ q = InteriorTransversal(g);
  EXPECT_EQ(q.edges.Size(), 5);
  EXPECT_EQ(g.edge_count(), 6);
}

TEST(InteriorTransversalTest, WrongInteriorCount) {
  try {
    InteriorTransversal(Graph(kPentagon));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongInteriorCount);
  }
}

TEST(InteriorTransversalTest, EveryPlaneTreeMeetsItTwice) {
  for (int n = 4; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const GeometricGraph g(
          RandomPointSet(InstanceKind::kOneInterior, n, seed));
      const TransversalQ q = InteriorTransversal(g);
      EXPECT_EQ(q.edges.Size(), n + 1);
      for (const PlaneTree& t : EnumeratePlaneSpanningTrees(g)) {
        EXPECT_GE((t.edges & q.edges).Size(), 2);
      }
    }
  }
}

TEST(RainbowConvexTest, SquareExample) {
  const GeometricGraph g = Graph(kSquare);
  const Colouring c = Colouring::FromVector({1, 2, 3, 4, 1, 1});
  const PlaneTree t = RainbowTreeConvex(g, c);
  EXPECT_TRUE(IsPlaneSpanningTree(g, t.edges));
  EXPECT_TRUE(c.IsRainbow(t.edges));
  EXPECT_TRUE(naive::HasRainbowPlaneTree(g.points(), c));
}

TEST(RainbowConvexTest, TriangleTwoColours) {
  const GeometricGraph g = Graph(kTriangle);
  const Colouring c = Colouring::FromVector({1, 1, 2});
  const PlaneTree t = RainbowTreeConvex(g, c);
  EXPECT_EQ(t.edges.Size(), 2);
  EXPECT_TRUE(c.IsRainbow(t.edges));
}

TEST(RainbowConvexTest, EveryCanonicalColouringOfThePentagon) {
  const GeometricGraph g = Graph(kPentagon);
  int count = 0;
  ForEachCanonicalColouring(10, 7, [&](const Colouring& c) {
    const PlaneTree t = RainbowTreeConvex(g, c);
    EXPECT_TRUE(IsPlaneSpanningTree(g, t.edges));
    EXPECT_TRUE(c.IsRainbow(t.edges));
    ++count;
    return true;
  });
  EXPECT_EQ(count, 5880);  // Stirling S(10, 7)
}

TEST(RainbowConvexTest, Errors) {
  try {
    RainbowTreeConvex(Graph(kSquare), Colouring::FromVector({1, 2, 3, 1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongColourCount);
  }
  try {
    RainbowTreeConvex(Graph(kSquarePlusInterior),
                      Colouring::FromVector({1, 2, 3, 4, 5, 6, 7, 7, 7, 7}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotConvexPosition);
  }
}

TEST(RainbowOneInteriorTest, EveryCanonicalColouring) {
  const GeometricGraph g = Graph(kQuadPlusInterior);
  int count = 0;
  ForEachCanonicalColouring(10, 6, [&](const Colouring& c) {
    const RainbowTreeResult r = RainbowTreeOneInterior(g, c);
    EXPECT_TRUE(IsPlaneSpanningTree(g, r.tree.edges));
    EXPECT_TRUE(c.IsRainbow(r.tree.edges));
    EXPECT_NE(r.branch, RainbowBranch::kExhaustiveFallback);
    ++count;
    return true;
  });
  EXPECT_EQ(count, 22827);  // Stirling S(10, 6)
}

TEST(RainbowOneInteriorTest, CaterpillarAndStarLeftoversTakeTheSwapBranch) {
  const GeometricGraph g = Graph(kQuadPlusInterior);
  std::mt19937_64 rng(1);
  int caterpillars = 0;
  int stars = 0;
  for (const PlaneTree& s : EnumeratePlaneSpanningTrees(g)) {
    const TreeClass cls = ClassifyTree(g, s);
    if (!cls.is_star && !cls.is_geometric_caterpillar) continue;
    const auto c = LeftoverColouring(g.edge_count(), s.edges, rng);
    if (!c) continue;
    const RainbowTreeResult r = RainbowTreeOneInterior(g, *c);
    EXPECT_EQ(r.branch, cls.is_star ? RainbowBranch::kStarSwap
                                    : RainbowBranch::kCaterpillarSwap);
    EXPECT_TRUE(c->IsRainbow(r.tree.edges));
    EXPECT_TRUE(IsPlaneSpanningTree(g, r.tree.edges));
    (cls.is_star ? stars : caterpillars) += 1;
  }
  EXPECT_GT(caterpillars, 0);
  EXPECT_GT(stars, 0);
}

TEST(RainbowOneInteriorTest, DisconnectedLeftoverUsesRepresentatives) {
  const GeometricGraph g = Graph(kQuadPlusInterior);
  // Leftover {01, 02, 12, 34} contains a triangle, so it is not a tree.
  const EdgeSet leftover = Edges(g, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  std::mt19937_64 rng(2);
  const auto c = LeftoverColouring(g.edge_count(), leftover, rng);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->num_colours(), 6);
  const RainbowTreeResult r = RainbowTreeOneInterior(g, *c);
  EXPECT_EQ(r.branch, RainbowBranch::kWithinRepresentatives);
  EXPECT_TRUE(c->IsRainbow(r.tree.edges));
}

TEST(RainbowOneInteriorTest, Deterministic) {
  const GeometricGraph g(RandomPointSet(InstanceKind::kOneInterior, 7, 3));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Colouring c = RandomSurjectiveColouring(21, 15, rng);
    EXPECT_EQ(RainbowTreeOneInterior(g, c).tree,
              RainbowTreeOneInterior(g, c).tree);
  }
}

TEST(ConjectureScanTest, SmallInstances) {
  const ConjectureReport pentagon = ConjectureScan(Graph(kPentagon));
  EXPECT_EQ(pentagon.tau, 5);
  EXPECT_TRUE(pentagon.holds);
  const ConjectureReport square = ConjectureScan(Graph(kSquarePlusInterior));
  EXPECT_EQ(square.bound, 6);
  EXPECT_EQ(square.tau, 6);
  EXPECT_TRUE(square.holds);
}

}  // namespace
}  // namespace rainbow
