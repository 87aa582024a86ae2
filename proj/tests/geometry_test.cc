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

#include "rainbow/geometry.h"

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "rainbow/error.h"

namespace rainbow {
namespace {

ErrorCode BuildError(const std::vector<Point>& pts) {
  try {
    PointSet::Build(pts);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorCode::kInvalidInput;
}

TEST(OrientTest, UnitTurns) {
  EXPECT_EQ(Orient({0, 0}, {1, 0}, {0, 1}), Orientation::kCounterClockwise);
  EXPECT_EQ(Orient({0, 0}, {1, 1}, {2, 2}), Orientation::kCollinear);
  EXPECT_EQ(Orient({0, 0}, {0, 1}, {1, 0}), Orientation::kClockwise);
}

TEST(OrientTest, AntisymmetricUnderSwap) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-kMaxCoordinate,
                                                kMaxCoordinate);
  for (int i = 0; i < 1000; ++i) {
    const Point p{c(rng), c(rng)}, q{c(rng), c(rng)}, r{c(rng), c(rng)};
    const int o = static_cast<int>(Orient(p, q, r));
    EXPECT_EQ(static_cast<int>(Orient(q, p, r)), -o);
    EXPECT_EQ(static_cast<int>(Orient(p, r, q)), -o);
    EXPECT_EQ(static_cast<int>(Orient(r, q, p)), -o);
  }
}

TEST(OrientTest, ExactAtCoordinateLimit) {
  const std::int64_t m = kMaxCoordinate;
  EXPECT_EQ(Orient({-m, -m}, {m, m}, {m - 1, m}),
            Orientation::kCounterClockwise);
  EXPECT_EQ(Orient({-m, -m}, {m, m}, {0, 0}), Orientation::kCollinear);
}

TEST(SegmentsCrossTest, Examples) {
  EXPECT_TRUE(SegmentsCross({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  EXPECT_FALSE(SegmentsCross({{0, 0}, {2, 2}}, {{2, 2}, {3, 0}}));
  EXPECT_FALSE(SegmentsCross({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}));
}

TEST(SegmentsCrossTest, SymmetricAndEndpointInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> c(0, 20);
  for (int i = 0; i < 2000; ++i) {
    const Segment e{{c(rng), c(rng)}, {c(rng), c(rng)}};
    const Segment f{{c(rng), c(rng)}, {c(rng), c(rng)}};
    const bool x = SegmentsCross(e, f);
    EXPECT_EQ(SegmentsCross(f, e), x);
    EXPECT_EQ(SegmentsCross({e.b, e.a}, f), x);
    EXPECT_EQ(SegmentsCross(e, {f.b, f.a}), x);
  }
}

TEST(PointSetTest, SquareWithInnerPoint) {
  const std::vector<Point> pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}};
  const PointSet set = PointSet::Build(pts);
  EXPECT_EQ(set.hull(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(set.interior(), (std::vector<int>{4}));
  EXPECT_EQ(set.interior_count(), 1);
}

TEST(PointSetTest, QuadrilateralWithInnerPoint) {
  const std::vector<Point> pts = {{0, 0}, {5, 0}, {6, 4}, {1, 5}, {2, 2}};
  const PointSet set = PointSet::Build(pts);
  EXPECT_EQ(set.hull(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(set.interior(), (std::vector<int>{4}));
}

TEST(PointSetTest, HullStartsAtLexicographicMinimum) {
  const std::vector<Point> pts = {{3, 3}, {0, 1}, {5, 0}, {2, -4}};
  const PointSet set = PointSet::Build(pts);
  EXPECT_EQ(set.hull().front(), 1);
  EXPECT_EQ(set.hull(), (std::vector<int>{1, 3, 2, 0}));
}

TEST(PointSetTest, RejectsDegenerateInput) {
  EXPECT_EQ(BuildError({{0, 0}, {1, 0}, {2, 0}}), ErrorCode::kCollinearTriple);
  EXPECT_EQ(BuildError({{0, 0}, {1, 0}}), ErrorCode::kTooFewPoints);
  EXPECT_EQ(BuildError({{0, 0}, {1, 0}, {0, 0}}), ErrorCode::kDuplicatePoint);
  EXPECT_EQ(BuildError({{0, 0}, {1, 0}, {0, kMaxCoordinate + 1}}),
            ErrorCode::kCoordinateOverflow);
}

TEST(PointSetTest, CollinearErrorCarriesIndices) {
  try {
    PointSet::Build(std::vector<Point>{{0, 0}, {5, 5}, {1, 0}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.indices(), (std::vector<int>{0, 2, 3}));
  }
}

TEST(PointSetTest, InteriorPointsLieLeftOfEveryHullEdge) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> c(-1000, 1000);
  int built = 0;
  while (built < 200) {
    std::vector<Point> pts(8);
    for (Point& p : pts) p = {c(rng), c(rng)};
    std::optional<PointSet> built_set;
    try {
      built_set = PointSet::Build(pts);
    } catch (const Error&) {
      continue;
    }
    const PointSet& set = *built_set;
    ++built;
    const auto& h = set.hull();
    EXPECT_EQ(set.hull().size() + set.interior().size(), 8u);
    for (int i = 0; i < 8; ++i) {
      for (std::size_t k = 0; k < h.size(); ++k) {
        const int a = h[k], b = h[(k + 1) % h.size()];
        if (i == a || i == b) continue;
        EXPECT_EQ(Orient(set[a], set[b], set[i]),
                  Orientation::kCounterClockwise);
      }
    }
  }
}

TEST(CompareAnglesTest, Examples) {
  EXPECT_EQ(CompareAngles({0, 0}, {1, 0}, {0, 1}, {1, 0}, {1, 1}),
            std::strong_ordering::greater);
  EXPECT_EQ(CompareAngles({0, 0}, {1, 0}, {0, 1}, {0, 1}, {-1, 0}),
            std::strong_ordering::equal);
  EXPECT_EQ(CompareAngles({2, 2}, {0, 0}, {6, 4}, {5, 0}, {1, 5}),
            std::strong_ordering::greater);
}

TEST(CompareAnglesTest, ApexCoincides) {
  try {
    CompareAngles({0, 0}, {0, 0}, {1, 0}, {1, 1}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kApexCoincides);
  }
}

TEST(CompareAnglesTest, ExtremeCoordinatesDoNotOverflow) {
  const std::int64_t m = kMaxCoordinate;
  // Nearly flat angles at opposite corners differ by one grid unit.
  EXPECT_EQ(CompareAngles({0, 0}, {m, 1}, {-m, 0}, {m, 0}, {-m, 1}),
            std::strong_ordering::equal);
  EXPECT_EQ(CompareAngles({-m, -m}, {m, m - 1}, {m - 1, m}, {m, m - 2},
                          {m - 1, m}),
            std::strong_ordering::less);
}

long double Angle(const Point& w, const Point& u, const Point& v) {
  const long double ax = u.x - w.x, ay = u.y - w.y;
  const long double bx = v.x - w.x, by = v.y - w.y;
  return std::atan2(std::fabs(ax * by - ay * bx), ax * bx + ay * by);
}

TEST(CompareAnglesTest, AgreesWithFloatingOracleAndIsTransitive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> c(-1000, 1000);
  auto random_point = [&] { return Point{c(rng), c(rng)}; };
  int decided = 0;
  for (int i = 0; i < 10000; ++i) {
    const Point w = random_point();
    Point p[6];
    for (Point& q : p) {
      do q = random_point(); while (q == w);
    }
    const long double a = Angle(w, p[0], p[1]);
    const long double b = Angle(w, p[2], p[3]);
    const auto order = CompareAngles(w, p[0], p[1], p[2], p[3]);
    if (std::fabs(a - b) > 1e-12L) {
      ++decided;
      EXPECT_EQ(order, a < b ? std::strong_ordering::less
                             : std::strong_ordering::greater);
    }
    const auto ab = order;
    const auto bc = CompareAngles(w, p[2], p[3], p[4], p[5]);
    const auto ac = CompareAngles(w, p[0], p[1], p[4], p[5]);
    if (ab <= 0 && bc <= 0) EXPECT_TRUE(ac <= 0);
    if (ab >= 0 && bc >= 0) EXPECT_TRUE(ac >= 0);
  }
  EXPECT_GT(decided, 9900);
}

}  // namespace
}  // namespace rainbow
