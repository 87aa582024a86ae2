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

#ifndef RAINBOW_HYPERGRAPH_H_
#define RAINBOW_HYPERGRAPH_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/small_set.h"

namespace rainbow {

inline constexpr int kDefaultTransversalCap = 16;
inline constexpr int kDefaultHeterochromaticCap = 12;

// A surjective assignment of colours 1..k to items 0..size-1.
class Colouring {
 public:
  // Throws kNotSurjective unless the values are exactly {1, ..., max}.
  static Colouring FromVector(std::vector<int> colours);

  int size() const { return static_cast<int>(colours_.size()); }
  int num_colours() const { return num_colours_; }
  int operator[](int item) const { return colours_[item]; }
  const std::vector<int>& colours() const { return colours_; }

  // True iff the items of `items` receive pairwise distinct colours.
  bool IsRainbow(SmallSet items) const;
  // Lexicographically smallest item of each colour class.
  SmallSet Representatives() const;
  // Smallest item of colour `colour`.
  int RepresentativeOf(int colour) const;

 private:
  std::vector<int> colours_;
  int num_colours_ = 0;
};

// Calls `visit` once per surjective colouring of `size` items with exactly
// `num_colours` colours, up to renaming of colours (restricted-growth
// strings, colour 1 first). Stops early when `visit` returns false.
void ForEachCanonicalColouring(int size, int num_colours,
                               const std::function<bool(const Colouring&)>& visit);

// Vertex universe 0..vertex_count-1 with a non-empty list of hyperedges,
// each with at least two vertices. Duplicate hyperedges are dropped, keeping
// first occurrences in order.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<SmallSet> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<SmallSet>& edges() const { return edges_; }

  // Hyperedges with no proper sub-hyperedge. Sufficient for transversal
  // questions; not for rainbow detection.
  std::vector<SmallSet> MinimalEdges() const;

 private:
  int vertex_count_;
  std::vector<SmallSet> edges_;
};

// Index of the first hyperedge whose vertices get pairwise distinct colours.
std::optional<int> FindRainbowHyperedge(const Hypergraph& h,
                                        const Colouring& c);

struct DoubleTransversal {
  SmallSet vertices;

  int size() const { return vertices.Size(); }
};

bool IsDoubleTransversal(const Hypergraph& h, SmallSet vertices);

// Exact minimum double transversal by branch and bound. Throws kTooLarge if
// vertex_count exceeds `cap`.
DoubleTransversal MinDoubleTransversal(const Hypergraph& h,
                                       int cap = kDefaultTransversalCap);

// Colour 1 on the transversal and a fresh colour on every other vertex:
// nu - |T| + 1 colours, no rainbow hyperedge.
Colouring LowerBoundColouring(const Hypergraph& h, const DoubleTransversal& t);

struct HeterochromaticResult {
  int value = 0;
  // A colouring with value - 1 colours and no rainbow hyperedge.
  Colouring witness;
};

// Smallest k such that every surjective k-colouring has a rainbow hyperedge.
// Throws kTooLarge if vertex_count exceeds `cap`.
HeterochromaticResult HeterochromaticNumber(
    const Hypergraph& h, int cap = kDefaultHeterochromaticCap);

}  // namespace rainbow

#endif  // RAINBOW_HYPERGRAPH_H_
