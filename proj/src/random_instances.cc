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

#include "rainbow/random_instances.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "rainbow/error.h"

namespace rainbow {
namespace {

constexpr int kRetryBudget = 1000;
constexpr double kCircleRadius = 100000.0;
constexpr std::int64_t kGridSize = 1000;

std::vector<Point> OnCircle(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<double> angles(n);
  for (double& a : angles) a = angle(rng);
  std::sort(angles.begin(), angles.end());
  std::vector<Point> points;
  for (double a : angles) {
    points.push_back({std::llround(kCircleRadius * std::cos(a)),
                      std::llround(kCircleRadius * std::sin(a))});
  }
  return points;
}

std::optional<PointSet> Audit(const std::vector<Point>& points,
                              int interior) {
  try {
    PointSet set = PointSet::Build(points);
    if (interior >= 0 && set.interior_count() != interior) return std::nullopt;
    return set;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

InstanceKind ParseInstanceKind(std::string_view name) {
  if (name == "convex") return InstanceKind::kConvex;
  if (name == "one-interior") return InstanceKind::kOneInterior;
  if (name == "general") return InstanceKind::kGeneral;
  throw Error(ErrorCode::kInvalidInput,
              "unknown instance kind \"" + std::string(name) + "\"");
}

std::string_view InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kConvex: return "convex";
    case InstanceKind::kOneInterior: return "one-interior";
    case InstanceKind::kGeneral: return "general";
  }
  return "unknown";
}

std::vector<Point> RandomPoints(InstanceKind kind, int n, std::uint64_t seed) {
  const int minimum = kind == InstanceKind::kOneInterior ? 4 : 3;
  if (n < minimum) {
    throw Error(ErrorCode::kTooFewPoints,
                std::string(InstanceKindName(kind)) + " instances need n >= " +
                    std::to_string(minimum) + ", got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<Point> points;
    int interior = -1;
    switch (kind) {
      case InstanceKind::kConvex:
        points = OnCircle(n, rng);
        interior = 0;
        break;
      case InstanceKind::kOneInterior: {
        points = OnCircle(n - 1, rng);
        std::optional<PointSet> hull = Audit(points, 0);
        if (!hull) continue;
        // Rejection-sample a point strictly inside the hull polygon.
        std::uniform_int_distribution<std::int64_t> coord(
            -static_cast<std::int64_t>(kCircleRadius),
            static_cast<std::int64_t>(kCircleRadius));
        for (int tries = 0; tries < kRetryBudget; ++tries) {
          const Point p{coord(rng), coord(rng)};
          const auto& h = hull->hull();
          bool inside = true;
          for (std::size_t k = 0; k < h.size() && inside; ++k) {
            inside = Orient(points[h[k]], points[h[(k + 1) % h.size()]], p) ==
                     Orientation::kCounterClockwise;
          }
          if (inside) {
            points.push_back(p);
            break;
          }
        }
        interior = 1;
        break;
      }
      case InstanceKind::kGeneral: {
        std::uniform_int_distribution<std::int64_t> coord(0, kGridSize);
        for (int i = 0; i < n; ++i) points.push_back({coord(rng), coord(rng)});
        break;
      }
    }
    if (static_cast<int>(points.size()) == n && Audit(points, interior)) {
      return points;
    }
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no valid " + std::string(InstanceKindName(kind)) +
                  " instance with n = " + std::to_string(n) + " after " +
                  std::to_string(kRetryBudget) + " attempts");
}

Colouring RandomSurjectiveColouring(int size, int num_colours,
                                    std::mt19937_64& rng) {
  if (num_colours < 1 || num_colours > size) {
    throw Error(ErrorCode::kBadParameters,
                "cannot colour " + std::to_string(size) + " items with " +
                    std::to_string(num_colours) + " colours");
  }
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> colour(1, num_colours);
  std::vector<int> colours(size);
  for (int i = 0; i < size; ++i) {
    colours[order[i]] = i < num_colours ? i + 1 : colour(rng);
  }
  return Colouring::FromVector(std::move(colours));
}

std::optional<Colouring> LeftoverColouring(int size, SmallSet leftover,
                                           std::mt19937_64& rng) {
  std::vector<int> colours(size, 0);
  std::vector<int> kept;
  for (int i = 0; i < size; ++i) {
    if (leftover.Contains(i)) {
      if (kept.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, kept.size() - 1);
      colours[i] = colours[kept[pick(rng)]];
    } else {
      kept.push_back(i);
      colours[i] = static_cast<int>(kept.size());
    }
  }
  return Colouring::FromVector(std::move(colours));
}

Hypergraph RandomHypergraph(int vertex_count, int edge_count,
                            int max_edge_size, std::mt19937_64& rng) {
  max_edge_size = std::min(max_edge_size, vertex_count);
  if (vertex_count < 2 || max_edge_size < 2 || edge_count < 1) {
    throw Error(ErrorCode::kBadParameters, "degenerate random hypergraph");
  }
  std::uniform_int_distribution<int> size(2, max_edge_size);
  std::vector<int> vertices(vertex_count);
  std::iota(vertices.begin(), vertices.end(), 0);
  std::set<std::uint64_t> seen;
  std::vector<SmallSet> edges;
  for (int attempt = 0;
       static_cast<int>(edges.size()) < edge_count && attempt < 100 * edge_count;
       ++attempt) {
    std::shuffle(vertices.begin(), vertices.end(), rng);
    SmallSet e;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) e.Insert(vertices[i]);
    if (seen.insert(e.bits()).second) edges.push_back(e);
  }
  return Hypergraph(vertex_count, std::move(edges));
}

}  // namespace rainbow
