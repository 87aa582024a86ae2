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

#ifndef RAINBOW_GEOMETRY_H_
#define RAINBOW_GEOMETRY_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

// Largest accepted absolute coordinate. Keeps orientation determinants in
// 64 bits and angle comparisons in 128 bits.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 20;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

// Sign of (q - p) x (r - p).
Orientation Orient(const Point& p, const Point& q, const Point& r);

// True iff the relative interiors of the two segments intersect in a single
// point. Segments sharing an endpoint never cross.
bool SegmentsCross(const Segment& e, const Segment& f);

// Compares the convex angles u1-apex-v1 and u2-apex-v2, each in [0, pi],
// exactly. Throws kApexCoincides when the apex equals a ray endpoint.
std::strong_ordering CompareAngles(const Point& apex, const Point& u1,
                                   const Point& v1, const Point& u2,
                                   const Point& v2);

// An edge of the complete geometric graph: point indices with a < b.
struct EdgeId {
  int a = 0;
  int b = 0;

  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// A validated point set in general position together with its convex hull.
class PointSet {
 public:
  // Validates |coords| <= kMaxCoordinate, distinctness, no collinear triple
  // and n >= 3. The hull is listed counter-clockwise starting from the
  // lexicographically smallest point.
  static PointSet Build(std::span<const Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](int i) const { return points_[i]; }
  const std::vector<int>& hull() const { return hull_; }
  const std::vector<int>& interior() const { return interior_; }
  // Number of points strictly inside the hull.
  int interior_count() const { return static_cast<int>(interior_.size()); }
  bool OnHull(int i) const { return on_hull_[i]; }
  // True iff {a, b} is a side of the hull polygon.
  bool IsHullEdge(int a, int b) const;

 private:
  PointSet() = default;

  std::vector<Point> points_;
  std::vector<int> hull_;
  std::vector<int> interior_;
  std::vector<bool> on_hull_;
};

// Counter-clockwise hull indices, starting at the lexicographically smallest
// point. Input must be in general position.
std::vector<int> ConvexHull(std::span<const Point> points);

}  // namespace rainbow

#endif  // RAINBOW_GEOMETRY_H_
