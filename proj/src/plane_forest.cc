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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "rainbow/error.h"

namespace rainbow {
namespace {

// Component label per point; small enough to copy on every search step.
using Components = std::array<std::int8_t, kMaxGraphPoints>;

Components Singletons(int n) {
  Components c{};
  for (int v = 0; v < n; ++v) c[v] = static_cast<std::int8_t>(v);
  return c;
}

void Join(Components& c, int n, int a, int b) {
  const std::int8_t from = c[b];
  const std::int8_t to = c[a];
  if (from == to) return;
  for (int v = 0; v < n; ++v) {
    if (c[v] == from) c[v] = to;
  }
}

bool AllJoined(const Components& c, int n) {
  for (int v = 1; v < n; ++v) {
    if (c[v] != c[0]) return false;
  }
  return true;
}

class TreeSearch {
 public:
  TreeSearch(const GeometricGraph& g, EdgeSet allowed,
             const Colouring* colouring,
             const std::function<bool(EdgeSet)>& visit)
      : g_(g),
        n_(g.vertex_count()),
        allowed_(allowed),
        colouring_(colouring),
        visit_(visit) {}

  void Run() { Step(0, EdgeSet(), EdgeSet(), Singletons(n_), SmallSet()); }

 private:
  // Returns false once the visitor asks to stop.
  bool Step(int from, EdgeSet chosen, EdgeSet blocked,
            const Components& comps, SmallSet colours_used) {
    if (chosen.Size() == n_ - 1) return visit_(chosen);

    const EdgeSet candidates =
        (allowed_ - blocked - chosen) - EdgeSet::Prefix(from);
    if (candidates.Size() < n_ - 1 - chosen.Size()) return true;
    Components reach = comps;
    for (int j : candidates) Join(reach, n_, g_.edge(j).a, g_.edge(j).b);
    if (!AllJoined(reach, n_)) return true;

    for (int j : candidates) {
      const EdgeId& e = g_.edge(j);
      if (comps[e.a] == comps[e.b]) continue;
      SmallSet colours_next = colours_used;
      if (colouring_ != nullptr) {
        const int colour = (*colouring_)[j];
        if (colours_used.Contains(colour)) continue;
        colours_next.Insert(colour);
      }
      Components next = comps;
      Join(next, n_, e.a, e.b);
      EdgeSet grown = chosen;
      grown.Insert(j);
      if (!Step(j + 1, grown, blocked | g_.crossing(j), next, colours_next)) {
        return false;
      }
    }
    return true;
  }

  const GeometricGraph& g_;
  int n_;
  EdgeSet allowed_;
  const Colouring* colouring_;
  const std::function<bool(EdgeSet)>& visit_;
};

void CheckEdgeColouring(const GeometricGraph& g, const Colouring& colouring,
                        int expected_colours) {
  if (colouring.size() != g.edge_count()) {
    throw Error(ErrorCode::kWrongColourCount,
                "colouring covers " + std::to_string(colouring.size()) +
                    " edges, graph has " + std::to_string(g.edge_count()));
  }
  if (colouring.num_colours() != expected_colours) {
    throw Error(ErrorCode::kWrongColourCount,
                "expected exactly " + std::to_string(expected_colours) +
                    " colours, got " +
                    std::to_string(colouring.num_colours()));
  }
}

std::vector<int> Degrees(const GeometricGraph& g, EdgeSet edges) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (int j : edges) {
    ++degree[g.edge(j).a];
    ++degree[g.edge(j).b];
  }
  return degree;
}

// Edges of `tree` joining two vertices of degree >= 2.
EdgeSet BodyEdges(const GeometricGraph& g, EdgeSet tree) {
  const std::vector<int> degree = Degrees(g, tree);
  EdgeSet body;
  for (int j : tree) {
    if (degree[g.edge(j).a] >= 2 && degree[g.edge(j).b] >= 2) body.Insert(j);
  }
  return body;
}

// The line through `leg` meets the drawing only inside `leg`.
bool LegLineIsClear(const GeometricGraph& g, int leg, EdgeSet tree) {
  const EdgeId& e = g.edge(leg);
  const Point& p = g.points()[e.a];
  const Point& q = g.points()[e.b];
  for (int j : tree) {
    const EdgeId& f = g.edge(j);
    if (f.a == e.a || f.a == e.b || f.b == e.a || f.b == e.b) continue;
    if (Orient(p, q, g.points()[f.a]) != Orient(p, q, g.points()[f.b])) {
      return false;
    }
  }
  return true;
}

int Binomial2(int n) { return n * (n - 1) / 2; }

}  // namespace

GeometricGraph::GeometricGraph(PointSet points) : points_(std::move(points)) {
  const int n = points_.size();
  if (n > kMaxGraphPoints) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " points exceed the " +
                    std::to_string(kMaxGraphPoints) + "-point edge-set limit");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges_.push_back({a, b});
  }
  crossing_.assign(edges_.size(), EdgeSet());
  for (int i = 0; i < edge_count(); ++i) {
    if (points_.IsHullEdge(edges_[i].a, edges_[i].b)) hull_edges_.Insert(i);
    for (int j = i + 1; j < edge_count(); ++j) {
      if (SegmentsCross(segment(i), segment(j))) {
        crossing_[i].Insert(j);
        crossing_[j].Insert(i);
      }
    }
  }
}

int GeometricGraph::EdgeIndex(int a, int b) const {
  if (a > b) std::swap(a, b);
  const int n = vertex_count();
  if (a < 0 || b >= n || a == b) {
    throw Error(ErrorCode::kInvalidInput,
                "no edge between " + std::to_string(a) + " and " +
                    std::to_string(b),
                {a, b});
  }
  // Edges starting at 0..a-1 come first.
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

bool IsPlaneSpanningTree(const GeometricGraph& g, EdgeSet edges) {
  const int n = g.vertex_count();
  if (!edges.IsSubsetOf(g.all_edges()) || edges.Size() != n - 1) return false;
  Components comps = Singletons(n);
  for (int j : edges) {
    const EdgeId& e = g.edge(j);
    if (comps[e.a] == comps[e.b]) return false;
    Join(comps, n, e.a, e.b);
    if (!(g.crossing(j) & edges).Empty()) return false;
  }
  return true;
}

void ForEachPlaneSpanningTree(const GeometricGraph& g, EdgeSet allowed,
                              const std::function<bool(EdgeSet)>& visit) {
  TreeSearch(g, allowed & g.all_edges(), nullptr, visit).Run();
}

std::vector<PlaneTree> EnumeratePlaneSpanningTrees(const GeometricGraph& g,
                                                   int cap) {
  if (g.vertex_count() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration capped at " + std::to_string(cap) +
                    " points, got " + std::to_string(g.vertex_count()));
  }
  std::vector<PlaneTree> trees;
  ForEachPlaneSpanningTree(g, g.all_edges(), [&](EdgeSet t) {
    trees.push_back({t});
    return true;
  });
  return trees;
}

Hypergraph PlaneTreeHypergraph(const GeometricGraph& g, int cap) {
  std::vector<SmallSet> edges;
  for (const PlaneTree& t : EnumeratePlaneSpanningTrees(g, cap)) {
    edges.push_back(t.edges);
  }
  return Hypergraph(g.edge_count(), std::move(edges));
}

TreeClass ClassifyTree(const GeometricGraph& g, const PlaneTree& tree) {
  const int n = g.vertex_count();
  const std::vector<int> degree = Degrees(g, tree.edges);
  TreeClass cls;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == n - 1) cls.is_star = true;
  }

  const EdgeSet body = BodyEdges(g, tree.edges);
  // Removing leaves keeps a tree; it is a path iff no body vertex has three
  // body neighbours.
  const std::vector<int> body_degree = Degrees(g, body);
  cls.is_caterpillar = true;
  for (int v = 0; v < n; ++v) {
    if (body_degree[v] > 2) cls.is_caterpillar = false;
  }
  if (!cls.is_caterpillar) return cls;

  bool geometric = true;
  for (int v = 0; v < n && geometric; ++v) {
    if (degree[v] >= 2 && !g.points().OnHull(v)) geometric = false;
  }
  for (int j : body) {
    if (!g.hull_edges().Contains(j)) geometric = false;
  }
  for (int j : tree.edges - body) {
    if (!geometric) break;
    geometric = LegLineIsClear(g, j, tree.edges);
  }
  cls.is_geometric_caterpillar = geometric;
  return cls;
}

std::optional<PlaneTree> FindPlaneTreeWithin(const GeometricGraph& g,
                                             EdgeSet allowed) {
  std::optional<PlaneTree> found;
  ForEachPlaneSpanningTree(g, allowed, [&](EdgeSet t) {
    found = PlaneTree{t};
    return false;
  });
  return found;
}

std::optional<PlaneTree> ComplementPlaneTree(const GeometricGraph& g,
                                             const PlaneTree& tree) {
  return FindPlaneTreeWithin(g, g.all_edges() - tree.edges);
}

std::optional<PlaneTree> FindRainbowPlaneTree(const GeometricGraph& g,
                                              EdgeSet allowed,
                                              const Colouring& colouring) {
  if (colouring.size() != g.edge_count()) {
    throw Error(ErrorCode::kWrongColourCount,
                "colouring does not cover the edges of the graph");
  }
  std::optional<PlaneTree> found;
  const std::function<bool(EdgeSet)> visit = [&](EdgeSet t) {
    found = PlaneTree{t};
    return false;
  };
  TreeSearch(g, allowed & g.all_edges(), &colouring, visit).Run();
  return found;
}

TransversalQ HullTransversal(const GeometricGraph& g) {
  if (g.points().interior_count() != 0) {
    throw Error(ErrorCode::kNotConvexPosition,
                std::to_string(g.points().interior_count()) +
                    " points lie inside the hull",
                g.points().interior());
  }
  return {g.hull_edges(), TransversalQ::Kind::kHullOnly};
}

TransversalQ InteriorTransversal(const GeometricGraph& g) {
  const PointSet& p = g.points();
  if (p.interior_count() != 1) {
    throw Error(ErrorCode::kWrongInteriorCount,
                "need exactly one interior point, found " +
                    std::to_string(p.interior_count()),
                p.interior());
  }
  const int w = p.interior()[0];
  int best_u = -1;
  int best_v = -1;
  for (int u = 0; u < p.size(); ++u) {
    for (int v = u + 1; v < p.size(); ++v) {
      if (u == w || v == w) continue;
      if (best_u < 0 || CompareAngles(p[w], p[u], p[v], p[best_u],
                                      p[best_v]) > 0) {
        best_u = u;
        best_v = v;
      }
    }
  }
  EdgeSet q = g.hull_edges();
  q.Insert(g.EdgeIndex(best_u, w));
  q.Insert(g.EdgeIndex(best_v, w));
  return {q, TransversalQ::Kind::kHullPlusInterior};
}

PlaneTree RainbowTreeConvex(const GeometricGraph& g,
                            const Colouring& colouring) {
  const int n = g.vertex_count();
  if (g.points().interior_count() != 0) {
    throw Error(ErrorCode::kNotConvexPosition,
                "rainbow tree construction needs convex position",
                g.points().interior());
  }
  CheckEdgeColouring(g, colouring, Binomial2(n) - n + 2);
  // The leftover Y has n - 2 edges, too few for a spanning tree, so a plane
  // tree lies entirely inside the representatives.
  const EdgeSet representatives = colouring.Representatives();
  std::optional<PlaneTree> tree = FindPlaneTreeWithin(g, representatives);
  if (!tree) {
    throw std::logic_error("no plane tree inside the colour representatives");
  }
  return *tree;
}

std::string_view RainbowBranchName(RainbowBranch branch) {
  switch (branch) {
    case RainbowBranch::kWithinRepresentatives: return "within-representatives";
    case RainbowBranch::kComplementOfLeftover: return "complement-of-leftover";
    case RainbowBranch::kCaterpillarSwap: return "caterpillar-swap";
    case RainbowBranch::kStarSwap: return "star-swap";
    case RainbowBranch::kExhaustiveFallback: return "exhaustive-fallback";
  }
  return "unknown";
}

RainbowTreeResult RainbowTreeOneInterior(const GeometricGraph& g,
                                         const Colouring& colouring) {
  const int n = g.vertex_count();
  if (g.points().interior_count() != 1) {
    throw Error(ErrorCode::kWrongInteriorCount,
                "need exactly one interior point, found " +
                    std::to_string(g.points().interior_count()),
                g.points().interior());
  }
  CheckEdgeColouring(g, colouring, Binomial2(n) - n + 1);

  const EdgeSet representatives = colouring.Representatives();
  const EdgeSet leftover = g.all_edges() - representatives;
  auto checked = [&](PlaneTree tree, RainbowBranch branch, int swaps) {
    if (!IsPlaneSpanningTree(g, tree.edges) ||
        !colouring.IsRainbow(tree.edges)) {
      throw std::logic_error("rainbow tree construction produced a bad tree");
    }
    return RainbowTreeResult{tree, branch, swaps};
  };

  if (!IsPlaneSpanningTree(g, leftover)) {
    std::optional<PlaneTree> tree = FindPlaneTreeWithin(g, representatives);
    if (!tree) {
      throw std::logic_error("no plane tree inside the colour representatives");
    }
    return checked(*tree, RainbowBranch::kWithinRepresentatives, 0);
  }

  const PlaneTree s{leftover};
  const TreeClass cls = ClassifyTree(g, s);
  if (!cls.is_star && !cls.is_geometric_caterpillar) {
    std::optional<PlaneTree> tree = ComplementPlaneTree(g, s);
    if (!tree) {
      throw std::logic_error(
          "leftover tree is neither star nor geometric caterpillar but its "
          "complement has no plane spanning tree");
    }
    return checked(*tree, RainbowBranch::kComplementOfLeftover, 0);
  }

  // Swap one leftover edge y for the representative x of its colour. The
  // complement of S' = S - y + x lies in (X - x) + y, still rainbow.
  const RainbowBranch branch =
      cls.is_star ? RainbowBranch::kStarSwap : RainbowBranch::kCaterpillarSwap;
  const EdgeSet swappable = cls.is_star ? s.edges : BodyEdges(g, s.edges);
  int swaps = 0;
  for (int y : swappable) {
    const int x = colouring.RepresentativeOf(colouring[y]);
    EdgeSet swapped = s.edges;
    swapped.Erase(y);
    swapped.Insert(x);
    ++swaps;
    if (IsPlaneSpanningTree(g, swapped)) {
      const TreeClass swapped_cls = ClassifyTree(g, PlaneTree{swapped});
      if (swapped_cls.is_star || swapped_cls.is_geometric_caterpillar) {
        continue;
      }
    }
    if (std::optional<PlaneTree> tree =
            FindPlaneTreeWithin(g, g.all_edges() - swapped)) {
      return checked(*tree, branch, swaps);
    }
  }
  std::optional<PlaneTree> tree =
      FindRainbowPlaneTree(g, g.all_edges(), colouring);
  if (!tree) throw std::logic_error("no rainbow plane spanning tree exists");
  return checked(*tree, RainbowBranch::kExhaustiveFallback, swaps);
}

ConjectureReport ConjectureScan(const GeometricGraph& g, int tau_cap) {
  const Hypergraph h = PlaneTreeHypergraph(g);
  ConjectureReport report;
  report.n = g.vertex_count();
  report.interior = g.points().interior_count();
  report.witness = MinDoubleTransversal(h, tau_cap);
  report.tau = report.witness.size();
  report.bound = report.n + report.interior;
  report.holds = report.tau <= report.bound;
  return report;
}

}  // namespace rainbow
