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

#ifndef RAINBOW_NAIVE_H_
#define RAINBOW_NAIVE_H_

// Brute-force reference implementations. They share no search code with the
// solvers they are used to check: plane trees come from filtering every edge
// subset, heterochromatic numbers from every set partition, transversals
// from every vertex subset.

#include <vector>

#include "rainbow/geometry.h"
#include "rainbow/hypergraph.h"
#include "rainbow/matroid.h"
#include "rainbow/small_set.h"

namespace rainbow::naive {

// Plane spanning trees as edge masks over lexicographically numbered edges,
// sorted by mask. Intended for n <= 8.
std::vector<SmallSet> PlaneSpanningTrees(const PointSet& points);

// Max over all set partitions without a rainbow hyperedge, plus one.
// Intended for vertex_count <= 10.
int HeterochromaticNumber(const Hypergraph& h);

// Size of a smallest double transversal, by subsets of increasing size.
int MinDoubleTransversalSize(const Hypergraph& h);

// Every subset of size rank that the oracle calls independent.
std::vector<ElementSet> Bases(const Matroid& m);

// True iff some plane spanning tree has pairwise distinct edge colours.
bool HasRainbowPlaneTree(const PointSet& points, const Colouring& colouring);

}  // namespace rainbow::naive

#endif  // RAINBOW_NAIVE_H_
