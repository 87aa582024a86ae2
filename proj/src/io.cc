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

#include "rainbow/io.h"

#include <fstream>
#include <regex>
#include <sstream>
#include <utility>

#include "rainbow/error.h"

namespace rainbow {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::int64_t Integer(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) Malformed(where + " is not an integer");
  return value.get<std::int64_t>();
}

const Json& Array(const Json& value, const std::string& where) {
  if (!value.is_array()) Malformed(where + " is not an array");
  return value;
}

Rational ParseRational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) Malformed(where + " is not an integer or \"a/b\"");
  static const std::regex kFraction(R"(\s*(-?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch match;
  const std::string text = value.get<std::string>();
  if (!std::regex_match(text, match, kFraction)) {
    Malformed(where + " \"" + text + "\" is not a fraction");
  }
  using boost::multiprecision::cpp_int;
  const cpp_int num(match[1].str());
  const cpp_int den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0) Malformed(where + " has a zero denominator");
  return Rational(num, den);
}

}  // namespace

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    Malformed(path + ": " + e.what());
  }
}

std::vector<Point> ParsePoints(const Json& doc) {
  std::vector<Point> points;
  const Json& list = Array(Field(doc, "points"), "points");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const Json& p = Array(list[i], where);
    if (p.size() != 2) Malformed(where + " must be [x, y]");
    points.push_back({Integer(p[0], where), Integer(p[1], where)});
  }
  return points;
}

Json PointsToJson(const std::vector<Point>& points) {
  Json list = Json::array();
  for (const Point& p : points) list.push_back({p.x, p.y});
  return Json{{"points", list}};
}

Colouring ParseColouring(const Json& doc) {
  std::vector<int> colours;
  const Json& list = Array(Field(doc, "colours"), "colours");
  for (std::size_t i = 0; i < list.size(); ++i) {
    colours.push_back(static_cast<int>(
        Integer(list[i], "colours[" + std::to_string(i) + "]")));
  }
  return Colouring::FromVector(std::move(colours));
}

Json ColouringToJson(const Colouring& colouring) {
  return Json{{"colours", colouring.colours()}};
}

Hypergraph ParseHypergraph(const Json& doc) {
  const std::int64_t nu = Integer(Field(doc, "nu"), "nu");
  if (nu < 1 || nu > SmallSet::kCapacity) Malformed("nu must be in 1..64");
  std::vector<SmallSet> edges;
  const Json& list = Array(Field(doc, "edges"), "edges");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    SmallSet e;
    for (const Json& v : Array(list[i], where)) {
      const std::int64_t vertex = Integer(v, where);
      if (vertex < 0 || vertex >= nu) Malformed(where + " has a bad vertex");
      e.Insert(static_cast<int>(vertex));
    }
    edges.push_back(e);
  }
  return Hypergraph(static_cast<int>(nu), std::move(edges));
}

Json HypergraphToJson(const Hypergraph& h) {
  Json edges = Json::array();
  for (SmallSet e : h.edges()) edges.push_back(e.ToVector());
  return Json{{"nu", h.vertex_count()}, {"edges", edges}};
}

std::unique_ptr<Matroid> ParseMatroid(const Json& doc) {
  const Json& type = Field(doc, "type");
  if (!type.is_string()) Malformed("type is not a string");
  const std::string kind = type.get<std::string>();
  if (kind == "graphic") {
    GraphSpec g;
    g.vertex_count = static_cast<int>(Integer(Field(doc, "vertices"), "vertices"));
    const Json& list = Array(Field(doc, "edges"), "edges");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const Json& e = Array(list[i], where);
      if (e.size() != 2) Malformed(where + " must be [u, v]");
      g.edges.emplace_back(static_cast<int>(Integer(e[0], where)),
                           static_cast<int>(Integer(e[1], where)));
    }
    return std::make_unique<GraphicMatroid>(std::move(g));
  }
  if (kind == "uniform") {
    return std::make_unique<UniformMatroid>(
        static_cast<int>(Integer(Field(doc, "r"), "r")),
        static_cast<int>(Integer(Field(doc, "m"), "m")));
  }
  if (kind == "linear") {
    const Json& field = Field(doc, "field");
    if (!field.is_string()) Malformed("field is not a string");
    const std::string name = field.get<std::string>();
    const Json& columns = Array(Field(doc, "columns"), "columns");
    static const std::regex kPrime(R"(gf\((\d+)\))", std::regex::icase);
    std::smatch match;
    if (std::regex_match(name, match, kPrime)) {
      std::vector<std::vector<std::int64_t>> cols;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        const std::string where = "columns[" + std::to_string(j) + "]";
        std::vector<std::int64_t> col;
        for (const Json& v : Array(columns[j], where)) {
          col.push_back(Integer(v, where));
        }
        cols.push_back(std::move(col));
      }
      return std::make_unique<LinearMatroid>(
          LinearMatroid::OverPrimeField(std::stoll(match[1].str()), cols));
    }
    if (name == "rational") {
      std::vector<std::vector<Rational>> cols;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        const std::string where = "columns[" + std::to_string(j) + "]";
        std::vector<Rational> col;
        for (const Json& v : Array(columns[j], where)) {
          col.push_back(ParseRational(v, where));
        }
        cols.push_back(std::move(col));
      }
      return std::make_unique<LinearMatroid>(
          LinearMatroid::OverRationals(std::move(cols)));
    }
    Malformed("unknown field \"" + name + "\"");
  }
  Malformed("unknown matroid type \"" + kind + "\"");
}

std::unique_ptr<Matroid> MatroidPreset(std::string_view name) {
  const std::string text(name);
  static const std::regex kUniform(R"([Uu]_(\d+)_(\d+))");
  static const std::regex kComplete(R"([Kk](\d+))");
  std::smatch match;
  if (std::regex_match(text, match, kUniform)) {
    return std::make_unique<UniformMatroid>(std::stoi(match[1].str()),
                                            std::stoi(match[2].str()));
  }
  if (std::regex_match(text, match, kComplete)) {
    const int n = std::stoi(match[1].str());
    if (n < 2 || n > 11) Malformed("K<n> needs 2 <= n <= 11");
    return std::make_unique<GraphicMatroid>(CompleteGraph(n));
  }
  if (text == "GF2" || text == "gf2") {
    return std::make_unique<LinearMatroid>(
        LinearMatroid::OverPrimeField(2, {{1, 0}, {0, 1}, {1, 1}}));
  }
  Malformed("unknown matroid preset \"" + text + "\"");
}

Json EdgeListToJson(const GeometricGraph& g, EdgeSet edges) {
  Json list = Json::array();
  for (int e : edges) list.push_back({g.edge(e).a, g.edge(e).b});
  return list;
}

}  // namespace rainbow
