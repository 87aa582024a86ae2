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

#ifndef RAINBOW_RANDOM_INSTANCES_H_
#define RAINBOW_RANDOM_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "rainbow/geometry.h"
#include "rainbow/hypergraph.h"
#include "rainbow/small_set.h"

namespace rainbow {

enum class InstanceKind { kConvex, kOneInterior, kGeneral };

// "convex", "one-interior" or "general"; kInvalidInput otherwise.
InstanceKind ParseInstanceKind(std::string_view name);
std::string_view InstanceKindName(InstanceKind kind);

// Deterministic in (kind, n, seed). The result always passes
// PointSet::Build, with 0 or 1 interior points for the first two kinds.
// Throws kTooFewPoints for n < 3 (n < 4 for one interior point) and
// kGenerationFailed when the retry budget runs out.
std::vector<Point> RandomPoints(InstanceKind kind, int n, std::uint64_t seed);

inline PointSet RandomPointSet(InstanceKind kind, int n, std::uint64_t seed) {
  return PointSet::Build(RandomPoints(kind, n, seed));
}

// Uniform-ish surjective colouring of `size` items with exactly
// `num_colours` colours.
Colouring RandomSurjectiveColouring(int size, int num_colours,
                                    std::mt19937_64& rng);

// A colouring with one colour per item outside `leftover` (in index order)
// whose colour representatives are exactly the items outside `leftover`:
// every leftover item copies the colour of a smaller non-leftover item.
// None when some leftover item has no smaller non-leftover item.
std::optional<Colouring> LeftoverColouring(int size, SmallSet leftover,
                                           std::mt19937_64& rng);

// Random hypergraph with `edge_count` distinct hyperedges of sizes in
// [2, max_edge_size].
Hypergraph RandomHypergraph(int vertex_count, int edge_count,
                            int max_edge_size, std::mt19937_64& rng);

}  // namespace rainbow

#endif  // RAINBOW_RANDOM_INSTANCES_H_
