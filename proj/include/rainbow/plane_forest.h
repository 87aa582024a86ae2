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

#ifndef RAINBOW_PLANE_FOREST_H_
#define RAINBOW_PLANE_FOREST_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/geometry.h"
#include "rainbow/hypergraph.h"
#include "rainbow/small_set.h"

namespace rainbow {

// Edge subsets of a complete geometric graph, indexed in lexicographic
// EdgeId order.
using EdgeSet = SmallSet;

inline constexpr int kDefaultEnumerationCap = 9;
// C(11, 2) = 55 edges still fit in an EdgeSet.
inline constexpr int kMaxGraphPoints = 11;

// The complete geometric graph on a point set, with its edges numbered
// lexicographically and the pairwise crossing relation precomputed.
class GeometricGraph {
 public:
  explicit GeometricGraph(PointSet points);

  const PointSet& points() const { return points_; }
  int vertex_count() const { return points_.size(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeId& edge(int index) const { return edges_[index]; }
  Segment segment(int index) const {
    return {points_[edges_[index].a], points_[edges_[index].b]};
  }
  int EdgeIndex(int a, int b) const;
  EdgeSet all_edges() const { return EdgeSet::Prefix(edge_count()); }
  EdgeSet hull_edges() const { return hull_edges_; }
  // Edges whose segment properly crosses edge `index`.
  EdgeSet crossing(int index) const { return crossing_[index]; }

 private:
  PointSet points_;
  std::vector<EdgeId> edges_;
  std::vector<EdgeSet> crossing_;
  EdgeSet hull_edges_;
};

struct PlaneTree {
  EdgeSet edges;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// Spanning, acyclic and crossing-free.
bool IsPlaneSpanningTree(const GeometricGraph& g, EdgeSet edges);

// Visits every plane spanning tree using only `allowed` edges, in
// lexicographic order of edge lists. `visit` returns false to stop.
void ForEachPlaneSpanningTree(const GeometricGraph& g, EdgeSet allowed,
                              const std::function<bool(EdgeSet)>& visit);

// All plane spanning trees. Throws kTooLarge above `cap` points.
std::vector<PlaneTree> EnumeratePlaneSpanningTrees(
    const GeometricGraph& g, int cap = kDefaultEnumerationCap);

// The hypergraph on E(G) whose hyperedges are plane spanning trees.
Hypergraph PlaneTreeHypergraph(const GeometricGraph& g,
                               int cap = kDefaultEnumerationCap);

struct TreeClass {
  bool is_star = false;
  bool is_caterpillar = false;
  bool is_geometric_caterpillar = false;
};

TreeClass ClassifyTree(const GeometricGraph& g, const PlaneTree& tree);

// First plane spanning tree (lexicographic) inside `allowed`.
std::optional<PlaneTree> FindPlaneTreeWithin(const GeometricGraph& g,
                                             EdgeSet allowed);

// A plane spanning tree edge-disjoint from `tree`. None exists exactly when
// `tree` is a star or a geometric caterpillar.
std::optional<PlaneTree> ComplementPlaneTree(const GeometricGraph& g,
                                             const PlaneTree& tree);

// First plane spanning tree inside `allowed` with pairwise distinct edge
// colours.
std::optional<PlaneTree> FindRainbowPlaneTree(const GeometricGraph& g,
                                              EdgeSet allowed,
                                              const Colouring& colouring);

struct TransversalQ {
  enum class Kind { kHullOnly, kHullPlusInterior };

  EdgeSet edges;
  Kind kind = Kind::kHullOnly;
};

// The hull boundary; requires convex position.
TransversalQ HullTransversal(const GeometricGraph& g);

// Hull boundary plus uw and vw, where w is the single interior point and
// the angle u-w-v is maximal (lexicographically smallest (u, v) on ties).
TransversalQ InteriorTransversal(const GeometricGraph& g);

// Colouring of the edges with C(n,2) - n + 2 colours, convex position.
PlaneTree RainbowTreeConvex(const GeometricGraph& g,
                            const Colouring& colouring);

enum class RainbowBranch {
  // The complement of the representative set is not a plane tree.
  kWithinRepresentatives,
  // It is a plane tree that is neither star nor geometric caterpillar.
  kComplementOfLeftover,
  // It is a geometric caterpillar; one body edge swapped for its colour
  // representative.
  kCaterpillarSwap,
  // It is a star; one edge swapped for its colour representative.
  kStarSwap,
  // No swap produced a tree; exhaustive rainbow search.
  kExhaustiveFallback,
};

std::string_view RainbowBranchName(RainbowBranch branch);

struct RainbowTreeResult {
  PlaneTree tree;
  RainbowBranch branch = RainbowBranch::kWithinRepresentatives;
  // Swap attempts made before success (0 outside the swap branches).
  int swaps_tried = 0;
};

// Colouring of the edges with C(n,2) - n + 1 colours, one interior point.
RainbowTreeResult RainbowTreeOneInterior(const GeometricGraph& g,
                                         const Colouring& colouring);

struct ConjectureReport {
  int n = 0;
  int interior = 0;
  int tau = 0;
  int bound = 0;  // n + interior
  bool holds = false;
  DoubleTransversal witness;
};

// Exact tau of the plane-tree hypergraph compared with n + i(P).
ConjectureReport ConjectureScan(const GeometricGraph& g,
                                int tau_cap = kDefaultTransversalCap);

}  // namespace rainbow

#endif  // RAINBOW_PLANE_FOREST_H_
