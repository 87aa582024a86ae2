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

#include "rainbow/naive.h"

#include <algorithm>
#include <functional>
#include <utility>

namespace rainbow::naive {
namespace {

std::vector<std::pair<int, int>> LexEdges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return edges;
}

bool Connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adjacent(n);
  for (const auto& [a, b] : edges) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adjacent[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

// Calls visit on every k-subset of 0..m-1 as an ascending index list.
void ForEachSubset(int m, int k,
                   const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > m) return;
  while (true) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<SmallSet> PlaneSpanningTrees(const PointSet& points) {
  const int n = points.size();
  const auto all = LexEdges(n);
  std::vector<SmallSet> trees;
  ForEachSubset(static_cast<int>(all.size()), n - 1,
                [&](const std::vector<int>& pick) {
                  std::vector<std::pair<int, int>> chosen;
                  for (int i : pick) chosen.push_back(all[i]);
                  if (!Connected(n, chosen)) return;
                  for (std::size_t i = 0; i < chosen.size(); ++i) {
                    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
                      const Segment s{points[chosen[i].first],
                                      points[chosen[i].second]};
                      const Segment t{points[chosen[j].first],
                                      points[chosen[j].second]};
                      if (SegmentsCross(s, t)) return;
                    }
                  }
                  SmallSet mask;
                  for (int i : pick) mask.Insert(i);
                  trees.push_back(mask);
                });
  std::sort(trees.begin(), trees.end(),
            [](SmallSet a, SmallSet b) { return a.bits() < b.bits(); });
  return trees;
}

int HeterochromaticNumber(const Hypergraph& h) {
  const int nu = h.vertex_count();
  std::vector<int> block(nu, 0);
  int best = 0;
  auto rainbow_free = [&]() {
    for (SmallSet e : h.edges()) {
      bool repeated = false;
      for (int u : e) {
        for (int v : e) {
          if (u < v && block[u] == block[v]) repeated = true;
        }
      }
      if (!repeated) return false;
    }
    return true;
  };
  std::function<void(int, int)> grow = [&](int v, int blocks) {
    if (v == nu) {
      if (blocks > best && rainbow_free()) best = blocks;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[v] = b;
      grow(v + 1, std::max(blocks, b + 1));
    }
  };
  grow(0, 0);
  return best + 1;
}

int MinDoubleTransversalSize(const Hypergraph& h) {
  const int nu = h.vertex_count();
  for (int k = 0; k <= nu; ++k) {
    bool found = false;
    ForEachSubset(nu, k, [&](const std::vector<int>& pick) {
      if (found) return;
      SmallSet t;
      for (int v : pick) t.Insert(v);
      found = std::all_of(h.edges().begin(), h.edges().end(),
                          [&](SmallSet e) { return (e & t).Size() >= 2; });
    });
    if (found) return k;
  }
  return nu;
}

std::vector<ElementSet> Bases(const Matroid& m) {
  std::vector<ElementSet> bases;
  const std::uint64_t count = std::uint64_t{1} << m.ground_size();
  for (std::uint64_t s = 0; s < count; ++s) {
    const ElementSet e(s);
    if (e.Size() == m.rank() && m.IsIndependent(e)) bases.push_back(e);
  }
  return bases;
}

bool HasRainbowPlaneTree(const PointSet& points, const Colouring& colouring) {
  for (SmallSet tree : PlaneSpanningTrees(points)) {
    if (colouring.IsRainbow(tree)) return true;
  }
  return false;
}

}  // namespace rainbow::naive
