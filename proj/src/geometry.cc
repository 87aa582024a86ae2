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

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/error.h"

namespace rainbow {
namespace {

using Int128 = __int128;

std::int64_t Cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

std::string Describe(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Angle in [0, pi] between two non-zero vectors, reduced to the pair
// (dot, |cross|). Zero cross means the angle is 0 or pi.
struct AngleKey {
  Int128 dot;
  Int128 cross;  // non-negative
};

AngleKey KeyOf(const Point& apex, const Point& u, const Point& v) {
  const Int128 ux = u.x - apex.x, uy = u.y - apex.y;
  const Int128 vx = v.x - apex.x, vy = v.y - apex.y;
  const Int128 cross = ux * vy - uy * vx;
  return {ux * vx + uy * vy, cross < 0 ? -cross : cross};
}

// 0 for angle 0, 1 for the open interval, 2 for pi.
int Band(const AngleKey& k) {
  if (k.cross != 0) return 1;
  return k.dot > 0 ? 0 : 2;
}

}  // namespace

Orientation Orient(const Point& p, const Point& q, const Point& r) {
  const std::int64_t d = Cross(p, q, r);
  if (d > 0) return Orientation::kCounterClockwise;
  if (d < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

bool SegmentsCross(const Segment& e, const Segment& f) {
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  const Orientation o1 = Orient(e.a, e.b, f.a);
  const Orientation o2 = Orient(e.a, e.b, f.b);
  const Orientation o3 = Orient(f.a, f.b, e.a);
  const Orientation o4 = Orient(f.a, f.b, e.b);
  return o1 != Orientation::kCollinear && o2 != Orientation::kCollinear &&
         o3 != Orientation::kCollinear && o4 != Orientation::kCollinear &&
         o1 != o2 && o3 != o4;
}

std::strong_ordering CompareAngles(const Point& apex, const Point& u1,
                                   const Point& v1, const Point& u2,
                                   const Point& v2) {
  for (const Point* p : {&u1, &v1, &u2, &v2}) {
    if (*p == apex) {
      throw Error(ErrorCode::kApexCoincides,
                  "apex " + Describe(apex) + " is also a ray endpoint");
    }
  }
  const AngleKey a = KeyOf(apex, u1, v1);
  const AngleKey b = KeyOf(apex, u2, v2);
  const int band_a = Band(a);
  const int band_b = Band(b);
  if (band_a != band_b || band_a != 1) return band_a <=> band_b;
  // cot = dot / cross decreases strictly on (0, pi).
  const Int128 lhs = b.dot * a.cross;
  const Int128 rhs = a.dot * b.cross;
  if (lhs > rhs) return std::strong_ordering::greater;
  if (lhs < rhs) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::vector<int> ConvexHull(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return points[i] < points[j]; });
  if (n < 3) return order;

  // Andrew's monotone chain; lower chain then upper chain.
  std::vector<int> hull;
  hull.reserve(2 * n);
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t floor = hull.size();
    for (int k = 0; k < n; ++k) {
      const int i = pass == 0 ? order[k] : order[n - 1 - k];
      while (hull.size() >= floor + 2 &&
             Orient(points[hull[hull.size() - 2]], points[hull.back()],
                    points[i]) != Orientation::kCounterClockwise) {
        hull.pop_back();
      }
      hull.push_back(i);
    }
    hull.pop_back();
  }
  return hull;
}

PointSet PointSet::Build(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) {
    throw Error(ErrorCode::kTooFewPoints,
                "need at least 3 points, got " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    const Point& p = points[i];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate ||
        p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
      throw Error(ErrorCode::kCoordinateOverflow,
                  "point " + std::to_string(i) + " " + Describe(p) +
                      " exceeds |coordinate| <= 2^20",
                  {i});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorCode::kDuplicatePoint,
                    "points " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide",
                    {i, j});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (Orient(points[i], points[j], points[k]) ==
            Orientation::kCollinear) {
          throw Error(ErrorCode::kCollinearTriple,
                      "points " + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + std::to_string(k) +
                          " are collinear",
                      {i, j, k});
        }
      }
    }
  }

  PointSet set;
  set.points_.assign(points.begin(), points.end());
  set.hull_ = ConvexHull(points);
  set.on_hull_.assign(n, false);
  for (int i : set.hull_) set.on_hull_[i] = true;
  for (int i = 0; i < n; ++i) {
    if (!set.on_hull_[i]) set.interior_.push_back(i);
  }
  return set;
}

bool PointSet::IsHullEdge(int a, int b) const {
  const int h = static_cast<int>(hull_.size());
  for (int k = 0; k < h; ++k) {
    const int p = hull_[k];
    const int q = hull_[(k + 1) % h];
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

}  // namespace rainbow
