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

#ifndef RAINBOW_IO_H_
#define RAINBOW_IO_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rainbow/geometry.h"
#include "rainbow/hypergraph.h"
#include "rainbow/matroid.h"
#include "rainbow/plane_forest.h"

namespace rainbow {

using Json = nlohmann::json;

// Reads and parses a JSON document; kInvalidInput on I/O or syntax errors.
Json ReadJsonFile(const std::string& path);

// {"points": [[x, y], ...]}
std::vector<Point> ParsePoints(const Json& doc);
Json PointsToJson(const std::vector<Point>& points);

// {"colours": [c1, c2, ...]}, aligned to lexicographic edge or element order.
Colouring ParseColouring(const Json& doc);
Json ColouringToJson(const Colouring& colouring);

// {"nu": n, "edges": [[v, ...], ...]}
Hypergraph ParseHypergraph(const Json& doc);
Json HypergraphToJson(const Hypergraph& h);

// {"type": "graphic", "vertices": n, "edges": [[u, v], ...]}
// {"type": "uniform", "r": r, "m": m}
// {"type": "linear", "field": "gf(p)" | "rational", "columns": [[...], ...]}
// Rational entries are integers or strings "a/b".
std::unique_ptr<Matroid> ParseMatroid(const Json& doc);

// Named matroids: "U_r_m" (uniform), "K<n>" (graphic complete graph) and
// "GF2" (columns (1,0), (0,1), (1,1) over GF(2)). Throws kInvalidInput.
std::unique_ptr<Matroid> MatroidPreset(std::string_view name);

// [[a, b], ...] for the edges of `edges`.
Json EdgeListToJson(const GeometricGraph& g, EdgeSet edges);

}  // namespace rainbow

#endif  // RAINBOW_IO_H_
