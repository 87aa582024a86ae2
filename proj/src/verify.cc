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

#include "rainbow/verify.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <utility>

#include "rainbow/error.h"
#include "rainbow/matroid.h"
#include "rainbow/naive.h"
#include "rainbow/plane_forest.h"
#include "rainbow/random_instances.h"

namespace rainbow {
namespace {

constexpr int kInstancesPerSize = 5;

int Choose2(int n) { return n * (n - 1) / 2; }

// Records checks; the first failure is kept as the counterexample and
// re-examined by `confirm`, which consults the naive oracles only.
class Tally {
 public:
  explicit Tally(VerifyReport& report) : report_(report) {}

  void Check(bool ok, const std::function<Json()>& payload,
             const std::function<bool()>& confirm) {
    ++report_.attempted;
    if (ok) {
      ++report_.passed;
      return;
    }
    if (report_.counterexample.is_null()) {
      report_.counterexample = payload();
      report_.confirmed_by_oracle = confirm();
    }
  }

 private:
  VerifyReport& report_;
};

struct Range {
  int lo;
  int hi;
};

Range Sizes(const VerifyParams& params, Range fallback, Range limit) {
  const Range r{params.n_min > 0 ? params.n_min : fallback.lo,
                params.n_max > 0 ? params.n_max : fallback.hi};
  if (r.lo > r.hi) {
    throw Error(ErrorCode::kBadParameters, "empty size range");
  }
  if (r.lo < limit.lo) {
    throw Error(ErrorCode::kBadParameters,
                "sizes start at " + std::to_string(limit.lo));
  }
  if (r.hi > limit.hi) {
    throw Error(ErrorCode::kTooLarge,
                "sizes above " + std::to_string(limit.hi) + " are out of reach");
  }
  return r;
}

int Trials(const VerifyParams& params, int fallback) {
  if (params.trials < 0) {
    throw Error(ErrorCode::kBadParameters, "negative trial count");
  }
  return params.trials > 0 ? params.trials : fallback;
}

std::string Describe(Range r, int trials, const VerifyParams& params) {
  return "n=" + std::to_string(r.lo) + ".." + std::to_string(r.hi) +
         " trials=" + std::to_string(trials) +
         " seed=" + std::to_string(params.seed);
}

Json InstanceJson(const PointSet& ps) { return PointsToJson(ps.points()); }

bool NaiveHasTree(const PointSet& ps, EdgeSet tree) {
  const std::vector<SmallSet> trees = naive::PlaneSpanningTrees(ps);
  return std::find(trees.begin(), trees.end(), tree) != trees.end();
}

// Every plane tree meets the transversal in two or more edges.
void TransversalSuite(InstanceKind kind, const VerifyParams& params,
                      VerifyReport& report) {
  const Range sizes = Sizes(params, {kind == InstanceKind::kConvex ? 3 : 4, 8},
                            {kind == InstanceKind::kConvex ? 3 : 4, 8});
  const int trials = Trials(params, 20);
  report.instance =
      std::string(InstanceKindName(kind)) + " " + Describe(sizes, trials, params);
  std::mt19937_64 seeds(params.seed);
  Tally tally(report);
  std::int64_t trees = 0;
  for (int n = sizes.lo; n <= sizes.hi; ++n) {
    for (int t = 0; t < trials; ++t) {
      const PointSet ps = RandomPointSet(kind, n, seeds());
      const GeometricGraph g(ps);
      const TransversalQ q = kind == InstanceKind::kConvex
                                 ? HullTransversal(g)
                                 : InteriorTransversal(g);
      ForEachPlaneSpanningTree(g, g.all_edges(), [&](EdgeSet tree) {
        ++trees;
        tally.Check(
            (tree & q.edges).Size() >= 2,
            [&] {
              return Json{{"points", InstanceJson(ps)["points"]},
                          {"tree", EdgeListToJson(g, tree)},
                          {"transversal", EdgeListToJson(g, q.edges)}};
            },
            [&] { return NaiveHasTree(ps, tree) && (tree & q.edges).Size() < 2; });
        return true;
      });
    }
  }
  report.details["trees"] = trees;
}

// No edge-disjoint plane tree exactly for stars and geometric caterpillars.
void ComplementSuite(const VerifyParams& params, VerifyReport& report) {
  const Range sizes = Sizes(params, {3, 7}, {3, 8});
  const int trials = Trials(params, 3);
  report.instance = "all kinds " + Describe(sizes, trials, params);
  std::mt19937_64 seeds(params.seed);
  Tally tally(report);
  std::int64_t stars = 0, geometric = 0, other = 0;
  for (InstanceKind kind : {InstanceKind::kConvex, InstanceKind::kOneInterior,
                            InstanceKind::kGeneral}) {
    for (int n = std::max(sizes.lo, kind == InstanceKind::kOneInterior ? 4 : 3);
         n <= sizes.hi; ++n) {
      for (int t = 0; t < trials; ++t) {
        const PointSet ps = RandomPointSet(kind, n, seeds());
        const GeometricGraph g(ps);
        for (const PlaneTree& tree : EnumeratePlaneSpanningTrees(g)) {
          const TreeClass cls = ClassifyTree(g, tree);
          const bool blocked = cls.is_star || cls.is_geometric_caterpillar;
          const std::optional<PlaneTree> other_tree =
              ComplementPlaneTree(g, tree);
          bool ok = blocked == !other_tree.has_value();
          if (other_tree) {
            ok = ok && IsPlaneSpanningTree(g, other_tree->edges) &&
                 (other_tree->edges & tree.edges).Empty();
          }
          if (cls.is_star) {
            ++stars;
          } else if (cls.is_geometric_caterpillar) {
            ++geometric;
          } else {
            ++other;
          }
          tally.Check(
              ok,
              [&] {
                return Json{{"points", InstanceJson(ps)["points"]},
                            {"tree", EdgeListToJson(g, tree.edges)},
                            {"star", cls.is_star},
                            {"geometric_caterpillar",
                             cls.is_geometric_caterpillar},
                            {"complement_found", other_tree.has_value()}};
              },
              [&] {
                bool disjoint = false;
                for (SmallSet s : naive::PlaneSpanningTrees(ps)) {
                  disjoint = disjoint || (s & tree.edges).Empty();
                }
                return disjoint == blocked;
              });
        }
      }
    }
  }
  report.details["stars"] = stars;
  report.details["geometric_caterpillars"] = geometric;
  report.details["other"] = other;
}

void CheckRainbowTree(const PointSet& ps, const GeometricGraph& g,
                      const Colouring& c, Tally& tally,
                      const std::function<PlaneTree()>& find) {
  std::optional<PlaneTree> tree;
  std::string failure;
  try {
    tree = find();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const bool ok = tree && IsPlaneSpanningTree(g, tree->edges) &&
                  c.IsRainbow(tree->edges);
  tally.Check(
      ok,
      [&] {
        Json j{{"points", InstanceJson(ps)["points"]},
               {"colours", c.colours()}};
        if (tree) j["tree"] = EdgeListToJson(g, tree->edges);
        if (!failure.empty()) j["error"] = failure;
        return j;
      },
      [&] { return !naive::HasRainbowPlaneTree(ps, c); });
}

// Rainbow plane trees in convex position with C(n,2) - n + 2 colours.
void ConvexRainbowSuite(const VerifyParams& params, VerifyReport& report) {
  const Range sizes = Sizes(params, {3, 6}, {3, params.exhaustive ? 5 : 8});
  const int trials = Trials(params, 200);
  report.instance = std::string(params.exhaustive ? "exhaustive " : "") +
                    "convex " + Describe(sizes, trials, params);
  std::mt19937_64 seeds(params.seed);
  Tally tally(report);
  for (int n = sizes.lo; n <= sizes.hi; ++n) {
    const int colours = Choose2(n) - n + 2;
    for (int i = 0; i < kInstancesPerSize; ++i) {
      const PointSet ps = RandomPointSet(InstanceKind::kConvex, n, seeds());
      const GeometricGraph g(ps);
      auto run = [&](const Colouring& c) {
        CheckRainbowTree(ps, g, c, tally,
                         [&] { return RainbowTreeConvex(g, c); });
        return true;
      };
      if (params.exhaustive) {
        ForEachCanonicalColouring(g.edge_count(), colours, run);
      } else {
        std::mt19937_64 rng(seeds());
        for (int t = 0; t < trials; ++t) {
          run(RandomSurjectiveColouring(g.edge_count(), colours, rng));
        }
      }
    }
  }
}

// Rainbow plane trees with one interior point and C(n,2) - n + 1 colours.
// Beside uniform colourings, a quarter of the trials plant a leftover set
// equal to a star or geometric caterpillar to reach the swap branches.
void OneInteriorRainbowSuite(const VerifyParams& params, VerifyReport& report) {
  const Range sizes = Sizes(params, {4, 7}, {4, params.exhaustive ? 5 : 8});
  const int trials = Trials(params, 200);
  report.instance = std::string(params.exhaustive ? "exhaustive " : "") +
                    "one-interior " + Describe(sizes, trials, params);
  std::mt19937_64 seeds(params.seed);
  Tally tally(report);
  std::map<std::string, std::int64_t> branches;
  for (int n = sizes.lo; n <= sizes.hi; ++n) {
    const int colours = Choose2(n) - n + 1;
    for (int i = 0; i < kInstancesPerSize; ++i) {
      const PointSet ps = RandomPointSet(InstanceKind::kOneInterior, n, seeds());
      const GeometricGraph g(ps);
      auto run = [&](const Colouring& c) {
        CheckRainbowTree(ps, g, c, tally, [&] {
          const RainbowTreeResult r = RainbowTreeOneInterior(g, c);
          ++branches[std::string(RainbowBranchName(r.branch))];
          return r.tree;
        });
        return true;
      };
      if (params.exhaustive) {
        ForEachCanonicalColouring(g.edge_count(), colours, run);
        continue;
      }
      std::mt19937_64 rng(seeds());
      for (int t = 0; t < trials; ++t) {
        run(RandomSurjectiveColouring(g.edge_count(), colours, rng));
      }
      std::vector<EdgeSet> blocked;
      for (const PlaneTree& tree : EnumeratePlaneSpanningTrees(g)) {
        const TreeClass cls = ClassifyTree(g, tree);
        if (cls.is_star || cls.is_geometric_caterpillar) {
          blocked.push_back(tree.edges);
        }
      }
      std::uniform_int_distribution<std::size_t> pick(0, blocked.size() - 1);
      for (int t = 0; t < trials / 4 && !blocked.empty(); ++t) {
        const std::optional<Colouring> c =
            LeftoverColouring(g.edge_count(), blocked[pick(rng)], rng);
        if (c) run(*c);
      }
    }
  }
  for (const auto& [name, count] : branches) report.details[name] = count;
}

std::vector<std::string> MatroidList(const VerifyParams& params) {
  if (!params.matroids.empty()) return params.matroids;
  return {"K4", "U_2_4", "U_2_5", "U_3_5", "U_3_6", "GF2"};
}

// Shuffled greedy priorities; the only choices that reach the exchange step.
BasisChooser ShuffledChooser(std::mt19937_64& rng) {
  return [&rng](const Matroid& m, ElementSet avoid) {
    std::vector<int> order = m.ground_set().ToVector();
    std::shuffle(order.begin(), order.end(), rng);
    return BasisAvoidingInOrder(m, avoid, order);
  };
}

// Rainbow bases under m - tau + 2 colours, with the default and with
// shuffled basis choices.
void RainbowBasisSuite(const VerifyParams& params, VerifyReport& report) {
  const int trials = Trials(params, 500);
  std::string names;
  for (const std::string& name : MatroidList(params)) {
    names += (names.empty() ? "" : ",") + name;
  }
  report.instance = (params.exhaustive ? "exhaustive " : "trials=" +
                                             std::to_string(trials) + " ") +
                    names + " seed=" + std::to_string(params.seed);
  std::mt19937_64 rng(params.seed);
  const BasisChooser shuffled = ShuffledChooser(rng);
  Tally tally(report);
  std::map<std::string, std::int64_t> steps;
  for (const std::string& name : MatroidList(params)) {
    const std::unique_ptr<Matroid> m = MatroidPreset(name);
    if (m->ground_size() > 12) {
      throw Error(ErrorCode::kTooLarge, name + " has more than 12 elements");
    }
    const int tau = TauBases(*m);
    const int colours = m->ground_size() - tau + 2;
    auto attempt = [&](const Colouring& c, const BasisChooser& choose,
                       const char* label) {
      std::optional<RainbowBasisResult> r;
      std::string failure;
      try {
        r = RainbowBasis(*m, c, tau, false, choose);
      } catch (const std::exception& e) {
        failure = e.what();
      }
      if (r) {
        static constexpr const char* kStep[] = {"first", "second", "exchange"};
        ++steps[std::string(label) + "_" + kStep[static_cast<int>(r->step)]];
      }
      tally.Check(
          r && m->IsBasis(r->basis) && c.IsRainbow(r->basis),
          [&] {
            Json j{{"matroid", m->Describe()}, {"colours", c.colours()}};
            if (r) j["basis"] = r->basis.ToVector();
            if (!failure.empty()) j["error"] = failure;
            return j;
          },
          [&] {
            for (ElementSet b : naive::Bases(*m)) {
              if (c.IsRainbow(b)) return false;
            }
            return true;
          });
    };
    auto run = [&](const Colouring& c) {
      attempt(c, BasisAvoiding, "default");
      attempt(c, shuffled, "shuffled");
      return true;
    };
    if (colours < 1 || colours > m->ground_size()) continue;
    if (params.exhaustive) {
      ForEachCanonicalColouring(m->ground_size(), colours, run);
    } else {
      for (int t = 0; t < trials; ++t) {
        run(RandomSurjectiveColouring(m->ground_size(), colours, rng));
      }
    }
  }
  for (const auto& [name, count] : steps) report.details[name] = count;
}

// K_n: h_c = C(n-2, 2) + 2 and tau = 2n - 3.
void CompleteGraphSuite(const VerifyParams& params, VerifyReport& report) {
  int limit = 3;
  while (Choose2(limit + 1) <= params.cap_nu) ++limit;
  const Range sizes = Sizes(params, {4, std::min(5, limit)}, {3, limit});
  report.instance = "K_n n=" + std::to_string(sizes.lo) + ".." +
                    std::to_string(sizes.hi);
  Tally tally(report);
  for (int n = sizes.lo; n <= sizes.hi; ++n) {
    const GraphicMatroid m(CompleteGraph(n));
    const Hypergraph h = BasisHypergraph(m);
    const int tau = MinDoubleTransversal(h).size();
    const int hc = HeterochromaticNumber(h, params.cap_nu).value;
    const int expected_hc = Choose2(n - 2) + 2;
    report.details["K" + std::to_string(n)] = {{"h_c", hc}, {"tau", tau}};
    auto payload = [&] {
      return Json{{"n", n}, {"h_c", hc}, {"tau", tau},
                  {"expected_h_c", expected_hc}, {"expected_tau", 2 * n - 3}};
    };
    tally.Check(hc == expected_hc, payload, [&] {
      return naive::HeterochromaticNumber(h) != expected_hc;
    });
    tally.Check(tau == 2 * n - 3, payload, [&] {
      return naive::MinDoubleTransversalSize(h) != 2 * n - 3;
    });
    tally.Check(hc == Choose2(n) - tau + 2, payload, [&] {
      return naive::HeterochromaticNumber(h) !=
             Choose2(n) - naive::MinDoubleTransversalSize(h) + 2;
    });
  }
}

GraphSpec RandomConnectedGraph(int n, std::mt19937_64& rng) {
  GraphSpec g{n, {}};
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    g.edges.emplace_back(u, v);
    used[u][v] = true;
  }
  std::bernoulli_distribution extra(0.4);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[u][v] && extra(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

// Gamma against the transversal number of the basis hypergraph.
void GammaTauSuite(const VerifyParams& params, VerifyReport& report) {
  const Range sizes = Sizes(params, {4, 6}, {2, 8});
  const int trials = Trials(params, 10);
  report.instance = "fixed family + random " + Describe(sizes, trials, params);
  std::vector<std::pair<std::string, GraphSpec>> graphs;
  for (int n = 3; n <= 6; ++n) {
    graphs.emplace_back("P" + std::to_string(n), PathGraph(n));
    graphs.emplace_back("C" + std::to_string(n), CycleGraph(n));
  }
  graphs.emplace_back("K4", CompleteGraph(4));
  graphs.emplace_back("K5", CompleteGraph(5));
  graphs.emplace_back("K2,3", CompleteBipartiteGraph(2, 3));
  graphs.emplace_back("K3,3", CompleteBipartiteGraph(3, 3));
  std::mt19937_64 rng(params.seed);
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(sizes.lo, sizes.hi)(rng);
    graphs.emplace_back("random" + std::to_string(t),
                        RandomConnectedGraph(n, rng));
  }
  Tally tally(report);
  for (const auto& [name, graph] : graphs) {
    if (graph.edges.size() > static_cast<std::size_t>(kDefaultBasisCap)) {
      continue;
    }
    const GraphicMatroid m(graph);
    const int gamma = Gamma(graph);
    const int tau = TauBases(m);
    report.details[name] = {{"gamma", gamma}, {"tau", tau}};
    tally.Check(
        gamma == tau,
        [&] {
          Json edges = Json::array();
          for (auto [u, v] : graph.edges) edges.push_back({u, v});
          return Json{{"graph", name},  {"vertices", graph.vertex_count},
                      {"edges", edges}, {"gamma", gamma},
                      {"tau", tau}};
        },
        [&] {
          return naive::MinDoubleTransversalSize(BasisHypergraph(m)) != gamma;
        });
  }
}

// Random hypergraphs: exact search matches brute force and respects
// h_c >= nu - tau + 2, and the transversal colouring is rainbow-free.
void BoundSuite(const VerifyParams& params, VerifyReport& report) {
  const Range sizes =
      Sizes(params, {3, std::min(8, params.cap_nu)},
            {2, std::min(params.cap_nu, 10)});
  const int trials = Trials(params, 10);
  report.instance = "random hypergraphs " + Describe(sizes, trials, params);
  std::mt19937_64 rng(params.seed);
  Tally tally(report);
  for (int nu = sizes.lo; nu <= sizes.hi; ++nu) {
    for (int t = 0; t < trials; ++t) {
      const int edges = std::uniform_int_distribution<int>(1, 8)(rng);
      const int max_size = std::uniform_int_distribution<int>(2, nu)(rng);
      const Hypergraph h = RandomHypergraph(nu, edges, max_size, rng);
      const DoubleTransversal tr = MinDoubleTransversal(h);
      const HeterochromaticResult hc = HeterochromaticNumber(h, params.cap_nu);
      const Colouring lower = LowerBoundColouring(h, tr);
      auto payload = [&] {
        Json j = HypergraphToJson(h);
        j["h_c"] = hc.value;
        j["tau"] = tr.size();
        return j;
      };
      tally.Check(hc.value == naive::HeterochromaticNumber(h), payload,
                  [] { return true; });
      tally.Check(
          hc.value >= nu - tr.size() + 2, payload, [&] {
            return naive::HeterochromaticNumber(h) <
                   nu - naive::MinDoubleTransversalSize(h) + 2;
          });
      tally.Check(!FindRainbowHyperedge(h, lower).has_value() &&
                      !FindRainbowHyperedge(h, hc.witness).has_value(),
                  payload, [&] {
                    for (SmallSet e : h.edges()) {
                      if (lower.IsRainbow(e) || hc.witness.IsRainbow(e)) {
                        return true;
                      }
                    }
                    return false;
                  });
    }
  }
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = {
      "lemma3", "lemma4",     "urrutia",   "thm5", "thm6",
      "thm7",   "jiang-west", "gamma-tau", "bound"};
  return kNames;
}

Json VerifyReport::ToJson() const {
  return Json{{"suite", suite},
              {"instance", instance},
              {"attempted", attempted},
              {"passed", passed},
              {"counterexample", counterexample},
              {"confirmed_by_oracle", confirmed_by_oracle},
              {"details", details},
              {"seconds", seconds}};
}

VerifyReport RunSuite(std::string_view suite, const VerifyParams& params) {
  VerifyReport report;
  report.suite = std::string(suite);
  const auto start = std::chrono::steady_clock::now();
  if (suite == "lemma3") {
    TransversalSuite(InstanceKind::kConvex, params, report);
  } else if (suite == "lemma4") {
    TransversalSuite(InstanceKind::kOneInterior, params, report);
  } else if (suite == "urrutia") {
    ComplementSuite(params, report);
  } else if (suite == "thm5") {
    ConvexRainbowSuite(params, report);
  } else if (suite == "thm6") {
    OneInteriorRainbowSuite(params, report);
  } else if (suite == "thm7") {
    RainbowBasisSuite(params, report);
  } else if (suite == "jiang-west") {
    CompleteGraphSuite(params, report);
  } else if (suite == "gamma-tau") {
    GammaTauSuite(params, report);
  } else if (suite == "bound") {
    BoundSuite(params, report);
  } else {
    throw Error(ErrorCode::kInvalidInput,
                "unknown suite \"" + std::string(suite) + "\"");
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace rainbow
