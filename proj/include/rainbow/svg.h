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

#ifndef RAINBOW_SVG_H_
#define RAINBOW_SVG_H_

#include <string>

#include "rainbow/hypergraph.h"
#include "rainbow/plane_forest.h"

namespace rainbow {

// Standalone SVG of the complete geometric graph: every edge drawn faint,
// the witness tree bold, strokes coloured by edge colour when a colouring is
// given. Either pointer may be null.
std::string RenderGeometricGraphSvg(const GeometricGraph& g,
                                    const Colouring* colouring,
                                    const PlaneTree* witness);

}  // namespace rainbow

#endif  // RAINBOW_SVG_H_
