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

// Command-line front end.
//
//   rainbow analyze FILE
//   rainbow verify SUITE [--n A..B] [--trials T] [--matroid NAME]...
//   rainbow find tree --points FILE [--colouring FILE]
//   rainbow find basis --matroid FILE|PRESET [--colouring FILE]
//   rainbow random KIND N
//   rainbow conjecture-scan [FILE] [--kind KIND --n A..B --trials T]
//
// Global flags: --seed, --cap-nu, --svg PATH, --json.
// Exit status: 0 success, 2 invalid input, 3 counterexample found.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/error.h"
#include "rainbow/hypergraph.h"
#include "rainbow/io.h"
#include "rainbow/matroid.h"
#include "rainbow/plane_forest.h"
#include "rainbow/random_instances.h"
#include "rainbow/svg.h"
#include "rainbow/verify.h"

namespace rainbow {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCounterexample = 3;

struct Globals {
  std::uint64_t seed = 1;
  int cap_nu = kDefaultHeterochromaticCap;
  std::string svg;
  bool json = false;
};

int Choose2(int n) { return n * (n - 1) / 2; }

// "A..B" or "A".
std::pair<int, int> ParseRange(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidInput, "bad range \"" + text + "\"");
  }
}

void Emit(const Globals& globals, const Json& report) {
  if (globals.json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    std::cout << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

void WriteSvg(const Globals& globals, const GeometricGraph& g,
              const Colouring* colouring, const PlaneTree* tree) {
  if (globals.svg.empty()) return;
  std::ofstream out(globals.svg);
  if (!out) {
    throw Error(ErrorCode::kInvalidInput, "cannot write " + globals.svg);
  }
  out << RenderGeometricGraphSvg(g, colouring, tree);
}

int TauCap(const Globals& globals) {
  return std::max(kDefaultTransversalCap, globals.cap_nu);
}

Json AnalyzeHypergraph(const Globals& globals, const Hypergraph& h) {
  Json report{{"nu", h.vertex_count()},
              {"hyperedges", h.edges().size()}};
  if (h.vertex_count() <= TauCap(globals)) {
    const int tau = MinDoubleTransversal(h, TauCap(globals)).size();
    report["tau"] = tau;
    report["lower_bound"] = h.vertex_count() - tau + 2;
  }
  if (h.vertex_count() <= globals.cap_nu) {
    report["h_c"] = HeterochromaticNumber(h, globals.cap_nu).value;
  }
  return report;
}

int Analyze(const Globals& globals, const std::string& path) {
  const Json doc = ReadJsonFile(path);
  if (doc.contains("type")) {
    const std::unique_ptr<Matroid> m = ParseMatroid(doc);
    Json report{{"matroid", m->Describe()},
                {"rank", m->rank()},
                {"bases", EnumerateBases(*m).size()}};
    report.update(AnalyzeHypergraph(globals, BasisHypergraph(*m)));
    Emit(globals, report);
    return kExitOk;
  }
  if (doc.contains("nu")) {
    Emit(globals, AnalyzeHypergraph(globals, ParseHypergraph(doc)));
    return kExitOk;
  }
  const GeometricGraph g(PointSet::Build(ParsePoints(doc)));
  const PointSet& ps = g.points();
  const int n = ps.size();
  const int i = ps.interior_count();
  Json report{{"n", n}, {"hull", ps.hull()}, {"interior", i}};
  if (n <= kDefaultEnumerationCap) {
    const Hypergraph h = PlaneTreeHypergraph(g);
    report["plane_trees"] = h.edges().size();
    if (g.edge_count() <= TauCap(globals)) {
      report["tau"] = MinDoubleTransversal(h, TauCap(globals)).size();
    }
    if (g.edge_count() <= globals.cap_nu) {
      report["h_c"] = HeterochromaticNumber(h, globals.cap_nu).value;
    }
  }
  if (i <= 1) report["predicted_h_c"] = Choose2(n) - (n + i) + 2;
  Emit(globals, report);
  WriteSvg(globals, g, nullptr, nullptr);
  return kExitOk;
}

Colouring LoadOrDrawColouring(const Globals& globals, const std::string& path,
                              int size, int colours) {
  if (!path.empty()) return ParseColouring(ReadJsonFile(path));
  if (colours < 1 || colours > size) {
    throw Error(ErrorCode::kWrongColourCount, "no colouring with " +
                                                  std::to_string(colours) +
                                                  " colours exists");
  }
  std::mt19937_64 rng(globals.seed);
  return RandomSurjectiveColouring(size, colours, rng);
}

Json ColouredItems(const std::vector<int>& items, const Colouring& c) {
  Json list = Json::array();
  for (int e : items) list.push_back(c[e]);
  return list;
}

int FindTree(const Globals& globals, const std::string& points_path,
             const std::string& colouring_path) {
  const GeometricGraph g(
      PointSet::Build(ParsePoints(ReadJsonFile(points_path))));
  const int n = g.vertex_count();
  const int i = g.points().interior_count();
  if (i > 1) {
    throw Error(ErrorCode::kWrongInteriorCount,
                "rainbow trees are constructed for at most one interior point");
  }
  const Colouring c = LoadOrDrawColouring(globals, colouring_path,
                                          g.edge_count(), Choose2(n) - n + 2 - i);
  Json report{{"n", n}, {"interior", i}, {"colours", c.num_colours()}};
  PlaneTree tree;
  if (i == 0) {
    tree = RainbowTreeConvex(g, c);
  } else {
    const RainbowTreeResult r = RainbowTreeOneInterior(g, c);
    tree = r.tree;
    report["branch"] = std::string(RainbowBranchName(r.branch));
  }
  report["tree"] = EdgeListToJson(g, tree.edges);
  report["tree_colours"] = ColouredItems(tree.edges.ToVector(), c);
  Emit(globals, report);
  WriteSvg(globals, g, &c, &tree);
  return kExitOk;
}

std::unique_ptr<Matroid> LoadMatroid(const std::string& spec) {
  if (std::filesystem::exists(spec)) return ParseMatroid(ReadJsonFile(spec));
  return MatroidPreset(spec);
}

int FindBasis(const Globals& globals, const std::string& matroid,
              const std::string& colouring_path) {
  const std::unique_ptr<Matroid> m = LoadMatroid(matroid);
  const int tau = TauBases(*m);
  const Colouring c = LoadOrDrawColouring(globals, colouring_path,
                                          m->ground_size(),
                                          m->ground_size() - tau + 2);
  const RainbowBasisResult r = RainbowBasis(*m, c, tau);
  static constexpr const char* kStep[] = {"first", "second", "exchange"};
  Emit(globals, Json{{"matroid", m->Describe()},
                     {"tau", tau},
                     {"colours", c.num_colours()},
                     {"basis", r.basis.ToVector()},
                     {"basis_colours", ColouredItems(r.basis.ToVector(), c)},
                     {"step", kStep[static_cast<int>(r.step)]}});
  return kExitOk;
}

int Verify(const Globals& globals, const std::string& suite,
           const std::string& range, int trials,
           const std::vector<std::string>& matroids, bool exhaustive) {
  VerifyParams params;
  if (!range.empty()) std::tie(params.n_min, params.n_max) = ParseRange(range);
  params.trials = trials;
  params.seed = globals.seed;
  params.exhaustive = exhaustive;
  params.matroids = matroids;
  params.cap_nu = globals.cap_nu;
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = SuiteNames();
  } else {
    suites.push_back(suite);
  }
  Json reports = Json::array();
  bool ok = true;
  for (const std::string& name : suites) {
    const VerifyReport report = RunSuite(name, params);
    ok = ok && report.ok();
    if (globals.json) {
      reports.push_back(report.ToJson());
      continue;
    }
    std::cout << (report.ok() ? "PASS " : "FAIL ") << report.suite << " ["
              << report.instance << "] " << report.passed << "/"
              << report.attempted << " in " << report.seconds << "s\n";
    if (!report.details.empty()) {
      std::cout << "  details: " << report.details.dump() << "\n";
    }
    if (!report.ok()) {
      std::cout << "  counterexample: " << report.counterexample.dump() << "\n"
                << "  confirmed by naive oracle: "
                << (report.confirmed_by_oracle ? "yes" : "no") << "\n";
    }
  }
  if (globals.json) std::cout << reports.dump(2) << "\n";
  return ok ? kExitOk : kExitCounterexample;
}

int Random(const Globals& globals, const std::string& kind, int n) {
  const std::vector<Point> points =
      RandomPoints(ParseInstanceKind(kind), n, globals.seed);
  std::cout << PointsToJson(points).dump() << "\n";
  if (!globals.svg.empty()) {
    WriteSvg(globals, GeometricGraph(PointSet::Build(points)), nullptr,
             nullptr);
  }
  return kExitOk;
}

Json ScanJson(const ConjectureReport& r, const GeometricGraph& g) {
  return Json{{"n", r.n},
              {"interior", r.interior},
              {"tau", r.tau},
              {"n_plus_interior", r.bound},
              {"holds", r.holds},
              {"transversal", EdgeListToJson(g, r.witness.vertices)}};
}

int ConjectureScanCommand(const Globals& globals, const std::string& path,
                          const std::string& kind, const std::string& range,
                          int trials) {
  if (!path.empty()) {
    const GeometricGraph g(PointSet::Build(ParsePoints(ReadJsonFile(path))));
    const ConjectureReport r = ConjectureScan(g, TauCap(globals));
    Emit(globals, ScanJson(r, g));
    return r.holds ? kExitOk : kExitCounterexample;
  }
  const auto [lo, hi] = ParseRange(range.empty() ? "4..6" : range);
  std::mt19937_64 seeds(globals.seed);
  Json rows = Json::array();
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    for (int t = 0; t < trials; ++t) {
      const GeometricGraph g(
          RandomPointSet(ParseInstanceKind(kind), n, seeds()));
      const ConjectureReport r = ConjectureScan(g, TauCap(globals));
      ok = ok && r.holds;
      Json row = ScanJson(r, g);
      row["points"] = PointsToJson(g.points().points())["points"];
      if (!globals.json) {
        std::cout << "n=" << r.n << " i=" << r.interior << " tau=" << r.tau
                  << " n+i=" << r.bound << (r.holds ? " holds" : " FAILS")
                  << "\n";
      }
      rows.push_back(std::move(row));
    }
  }
  if (globals.json) std::cout << rows.dump(2) << "\n";
  return ok ? kExitOk : kExitCounterexample;
}

int Main(int argc, char** argv) {
  CLI::App app("Rainbow spanning structures in geometric graphs and matroids");
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for all randomness");
  app.add_option("--cap-nu", globals.cap_nu,
                 "Largest vertex count for the exact h_c solver");
  app.add_option("--svg", globals.svg, "Write an SVG figure to this path");
  app.add_flag("--json", globals.json, "Machine-readable output");

  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Report tau and h_c for a point, hypergraph or matroid file");
  analyze->add_option("file", analyze_path)->required();

  std::string suite, range;
  int trials = 0;
  std::vector<std::string> matroids;
  bool exhaustive = false;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  std::vector<std::string> suite_choices = SuiteNames();
  suite_choices.push_back("all");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--n", range, "Size range A..B");
  verify->add_option("--trials", trials, "Instances or colourings per size");
  verify->add_option("--matroid", matroids, "Matroid presets (thm7)");
  verify->add_flag("--exhaustive", exhaustive,
                   "Enumerate all canonical colourings");

  CLI::App* find = app.add_subcommand("find", "Construct a rainbow witness");
  find->require_subcommand(1);
  std::string points_path, colouring_path, matroid_spec;
  CLI::App* find_tree = find->add_subcommand("tree", "Rainbow plane tree");
  find_tree->add_option("--points", points_path)->required();
  find_tree->add_option("--colouring", colouring_path,
                        "Colouring file; drawn from --seed when absent");
  CLI::App* find_basis = find->add_subcommand("basis", "Rainbow basis");
  find_basis->add_option("--matroid", matroid_spec, "Matroid file or preset")
      ->required();
  find_basis->add_option("--colouring", colouring_path,
                         "Colouring file; drawn from --seed when absent");

  std::string kind = "convex";
  int n = 0;
  CLI::App* random = app.add_subcommand("random", "Seeded random point set");
  random->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"convex", "one-interior", "general"}));
  random->add_option("n", n)->required();

  std::string scan_path;
  CLI::App* scan = app.add_subcommand(
      "conjecture-scan", "Compare tau with n + i(P) on files or random sets");
  scan->add_option("file", scan_path);
  scan->add_option("--kind", kind)->check(
      CLI::IsMember({"convex", "one-interior", "general"}));
  scan->add_option("--n", range, "Size range A..B");
  scan->add_option("--trials", trials, "Instances per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze) return Analyze(globals, analyze_path);
    if (*verify) {
      return Verify(globals, suite, range, trials, matroids, exhaustive);
    }
    if (*find_tree) return FindTree(globals, points_path, colouring_path);
    if (*find_basis) return FindBasis(globals, matroid_spec, colouring_path);
    if (*random) return Random(globals, kind, n);
    if (*scan) {
      return ConjectureScanCommand(globals, scan_path, kind, range,
                                   trials > 0 ? trials : 3);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.indices().empty()) {
      std::cerr << " (indices";
      for (int index : e.indices()) std::cerr << " " << index;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace
}  // namespace rainbow

int main(int argc, char** argv) { return rainbow::Main(argc, argv); }
