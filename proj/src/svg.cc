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

#include "rainbow/svg.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rainbow {
namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 30.0;

std::string Hue(int colour) {
  // Golden-angle spacing keeps neighbouring colour ids apart.
  const int hue = (colour * 137) % 360;
  return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

}  // namespace

std::string RenderGeometricGraphSvg(const GeometricGraph& g,
                                    const Colouring* colouring,
                                    const PlaneTree* witness) {
  const auto& pts = g.points().points();
  std::int64_t min_x = pts[0].x, max_x = pts[0].x;
  std::int64_t min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span =
      static_cast<double>(std::max<std::int64_t>(
          1, std::max(max_x - min_x, max_y - min_y)));
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto sx = [&](std::int64_t x) { return kMargin + (x - min_x) * scale; };
  // SVG y grows downwards.
  auto sy = [&](std::int64_t y) { return kCanvas - kMargin - (y - min_y) * scale; };

  std::ostringstream out;
  out.precision(2);
  out << std::fixed;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' '
      << kCanvas << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"edges\" stroke-width=\"1\" stroke-opacity=\"0.25\">\n";
  for (int j = 0; j < g.edge_count(); ++j) {
    const EdgeId& e = g.edge(j);
    out << "<line x1=\"" << sx(pts[e.a].x) << "\" y1=\"" << sy(pts[e.a].y)
        << "\" x2=\"" << sx(pts[e.b].x) << "\" y2=\"" << sy(pts[e.b].y)
        << "\" stroke=\""
        << (colouring != nullptr ? Hue((*colouring)[j]) : "gray")
        << "\" data-edge=\"" << e.a << '-' << e.b << "\"/>\n";
  }
  out << "</g>\n";

  if (witness != nullptr) {
    out << "<g id=\"witness\" stroke-width=\"4\">\n";
    for (int j : witness->edges) {
      const EdgeId& e = g.edge(j);
      out << "<line x1=\"" << sx(pts[e.a].x) << "\" y1=\"" << sy(pts[e.a].y)
          << "\" x2=\"" << sx(pts[e.b].x) << "\" y2=\"" << sy(pts[e.b].y)
          << "\" stroke=\""
          << (colouring != nullptr ? Hue((*colouring)[j]) : "black")
          << "\" data-edge=\"" << e.a << '-' << e.b << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"points\">\n";
  for (int i = 0; i < g.vertex_count(); ++i) {
    const bool hull = g.points().OnHull(i);
    out << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y)
        << "\" r=\"5\" fill=\"" << (hull ? "black" : "red") << "\"/>\n"
        << "<text x=\"" << sx(pts[i].x) + 7 << "\" y=\"" << sy(pts[i].y) - 7
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << i
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace rainbow
