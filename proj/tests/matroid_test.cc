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

#include "rainbow/matroid.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "rainbow/error.h"
#include "rainbow/naive.h"
#include "rainbow/random_instances.h"

namespace rainbow {
namespace {

int EdgeOf(const GraphSpec& g, int a, int b) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    if ((u == a && v == b) || (u == b && v == a)) return static_cast<int>(i);
  }
  return -1;
}

LinearMatroid Gf2ThreeColumns() {
  return LinearMatroid::OverPrimeField(2, {{1, 0}, {0, 1}, {1, 1}});
}

TEST(GraphicTest, Examples) {
  const GraphicMatroid k3(CompleteGraph(3));
  EXPECT_EQ(k3.ground_size(), 3);
  EXPECT_EQ(k3.rank(), 2);
  EXPECT_EQ(EnumerateBases(k3).size(), 3u);
  EXPECT_EQ(EnumerateBases(GraphicMatroid(CompleteGraph(4))).size(), 16u);
  const auto path = EnumerateBases(GraphicMatroid(PathGraph(3)));
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(path[0], SmallSet({0, 1}));
}

TEST(GraphicTest, RejectsLoops) {
  try {
    GraphicMatroid(GraphSpec{2, {{0, 1}, {1, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLoopEdge);
    EXPECT_EQ(e.indices(), std::vector<int>{1});
  }
}

TEST(UniformTest, Examples) {
  EXPECT_EQ(EnumerateBases(UniformMatroid(2, 4)).size(), 6u);
  EXPECT_EQ(EnumerateBases(UniformMatroid(3, 5)).size(), 10u);
  EXPECT_EQ(EnumerateBases(UniformMatroid(2, 2)).size(), 1u);
  EXPECT_THROW(UniformMatroid(1, 3), Error);
  EXPECT_THROW(UniformMatroid(4, 3), Error);
}

TEST(LinearTest, Examples) {
  const LinearMatroid identity =
      LinearMatroid::OverPrimeField(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(EnumerateBases(identity).size(), 1u);
  EXPECT_EQ(EnumerateBases(Gf2ThreeColumns()).size(), 3u);
  const LinearMatroid equal =
      LinearMatroid::OverPrimeField(3, {{1, 2}, {1, 2}, {1, 2}});
  EXPECT_EQ(equal.rank(), 1);
  EXPECT_THROW(RainbowBasis(equal, Colouring::FromVector({1, 1, 1}), 3), Error);
  EXPECT_THROW(LinearMatroid::OverPrimeField(4, {{1}}), Error);
  EXPECT_THROW(LinearMatroid::OverPrimeField(2, {}), Error);
}

TEST(LinearTest, CharacteristicMatters) {
  // (1,1), (1,-1) are dependent over GF(2) but not over Q or GF(3).
  EXPECT_EQ(LinearMatroid::OverPrimeField(2, {{1, 1}, {1, -1}}).rank(), 1);
  EXPECT_EQ(LinearMatroid::OverPrimeField(3, {{1, 1}, {1, -1}}).rank(), 2);
  EXPECT_EQ(LinearMatroid::OverRationals({{1, 1}, {1, -1}}).rank(), 2);
  EXPECT_EQ(LinearMatroid::OverRationals(
                {{Rational(1, 2), 1}, {1, 2}, {Rational(1, 3), 0}})
                .rank(),
            2);
}

TEST(AxiomTest, FamiliesSatisfyAxioms) {
  EXPECT_TRUE(SatisfiesMatroidAxioms(GraphicMatroid(CompleteGraph(4))));
  EXPECT_TRUE(SatisfiesMatroidAxioms(UniformMatroid(3, 6)));
  EXPECT_TRUE(SatisfiesMatroidAxioms(Gf2ThreeColumns()));
  EXPECT_TRUE(SatisfiesMatroidAxioms(LinearMatroid::OverRationals(
      {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}})));
}

TEST(FundamentalCircuitTest, Examples) {
  const GraphSpec k3 = CompleteGraph(3);
  const GraphicMatroid m3(k3);
  const SmallSet b{EdgeOf(k3, 0, 1), EdgeOf(k3, 1, 2)};
  EXPECT_EQ(FundamentalCircuit(m3, b, EdgeOf(k3, 0, 2)), m3.ground_set());

  EXPECT_EQ(FundamentalCircuit(UniformMatroid(2, 4), {0, 1}, 2),
            SmallSet({0, 1, 2}));

  const GraphSpec k4 = CompleteGraph(4);
  const GraphicMatroid m4(k4);
  const SmallSet star{EdgeOf(k4, 1, 0), EdgeOf(k4, 1, 2), EdgeOf(k4, 1, 3)};
  EXPECT_EQ(FundamentalCircuit(m4, star, EdgeOf(k4, 2, 3)),
            SmallSet({EdgeOf(k4, 2, 3), EdgeOf(k4, 1, 2), EdgeOf(k4, 1, 3)}));
}

TEST(FundamentalCircuitTest, Errors) {
  const UniformMatroid m(2, 4);
  try {
    FundamentalCircuit(m, {0}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABasis);
  }
  try {
    FundamentalCircuit(m, {0, 1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kElementInBasis);
  }
}

TEST(FundamentalCircuitTest, IsAMinimalDependentSet) {
  const LinearMatroid m = LinearMatroid::OverRationals(
      {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}, {2, 2, 0}});
  for (SmallSet b : EnumerateBases(m)) {
    for (int e : m.ground_set() - b) {
      const SmallSet c = FundamentalCircuit(m, b, e);
      EXPECT_FALSE(m.IsIndependent(c));
      for (int x : c) {
        SmallSet smaller = c;
        smaller.Erase(x);
        EXPECT_TRUE(m.IsIndependent(smaller));
      }
    }
  }
}

TEST(BasisAvoidingTest, Examples) {
  EXPECT_EQ(BasisAvoiding(UniformMatroid(2, 4), {3}), SmallSet({0, 1}));
  const GraphicMatroid k3(CompleteGraph(3));
  EXPECT_EQ(BasisAvoiding(k3, k3.ground_set()), std::nullopt);

  const GraphSpec k4 = CompleteGraph(4);
  const SmallSet triangle{EdgeOf(k4, 0, 1), EdgeOf(k4, 0, 2),
                          EdgeOf(k4, 1, 2)};
  const auto b = BasisAvoiding(GraphicMatroid(k4), triangle);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, SmallSet({EdgeOf(k4, 0, 3), EdgeOf(k4, 1, 3),
                          EdgeOf(k4, 2, 3)}));
}

TEST(BasisAvoidingTest, NoneExactlyForDoubleTransversals) {
  const GraphicMatroid m(CompleteGraph(4));
  const Hypergraph h = BasisHypergraph(m);
  for (std::uint64_t z = 0; z < (1u << 6); ++z) {
    const auto b = BasisAvoiding(m, SmallSet(z));
    EXPECT_EQ(!b.has_value(), IsDoubleTransversal(h, SmallSet(z)));
    if (b) {
      EXPECT_TRUE(m.IsBasis(*b));
      EXPECT_LE((*b & SmallSet(z)).Size(), 1);
    }
  }
}

TEST(TauBasesTest, Examples) {
  EXPECT_EQ(TauBases(GraphicMatroid(CompleteGraph(5))), 7);
  EXPECT_EQ(TauBases(GraphicMatroid(CompleteGraph(3))), 3);
  for (int m = 2; m <= 8; ++m) {
    for (int r = 2; r <= m; ++r) {
      EXPECT_EQ(TauBases(UniformMatroid(r, m)), m - r + 2)
          << "U_{" << r << "," << m << "}";
    }
  }
}

TEST(RainbowBasisTest, Examples) {
  const RainbowBasisResult u24 =
      RainbowBasis(UniformMatroid(2, 4), Colouring::FromVector({1, 1, 2, 2}));
  EXPECT_EQ(u24.basis, SmallSet({0, 2}));

  const GraphicMatroid k4(CompleteGraph(4));
  const Colouring c = Colouring::FromVector({1, 1, 1, 2, 2, 3});
  const RainbowBasisResult r = RainbowBasis(k4, c, 5);
  EXPECT_TRUE(k4.IsBasis(r.basis));
  EXPECT_TRUE(c.IsRainbow(r.basis));

  const UniformMatroid u36(3, 6);
  const Colouring c36 = Colouring::FromVector({1, 2, 1, 3, 2, 3});
  const RainbowBasisResult r36 = RainbowBasis(u36, c36, 5);
  EXPECT_EQ(r36.basis.Size(), 3);
  EXPECT_TRUE(c36.IsRainbow(r36.basis));
}

TEST(RainbowBasisTest, Errors) {
  try {
    RainbowBasis(UniformMatroid(2, 4), Colouring::FromVector({1, 2, 3, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongColourCount);
  }
  try {
    RainbowBasis(UniformMatroid(2, 4), Colouring::FromVector({1, 1, 2, 2}), 3,
                 /*check_tau=*/true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTauMismatch);
  }
}

// Greedy with a fresh random priority on every call; any basis meeting the
// set at most once is a legal choice.
BasisChooser ShuffledChooser(std::mt19937_64& rng) {
  return [&rng](const Matroid& m, ElementSet avoid) {
    std::vector<int> order = m.ground_set().ToVector();
    std::shuffle(order.begin(), order.end(), rng);
    return BasisAvoidingInOrder(m, avoid, order);
  };
}

TEST(RainbowBasisTest, ExhaustiveOverCanonicalColourings) {
  std::vector<std::unique_ptr<Matroid>> family;
  family.push_back(std::make_unique<GraphicMatroid>(CompleteGraph(4)));
  family.push_back(std::make_unique<UniformMatroid>(2, 5));
  family.push_back(std::make_unique<UniformMatroid>(3, 6));
  family.push_back(std::make_unique<UniformMatroid>(4, 7));
  family.push_back(std::make_unique<GraphicMatroid>(CycleGraph(5)));
  family.push_back(std::make_unique<GraphicMatroid>(
      GraphSpec{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 2}}}));
  family.push_back(std::make_unique<LinearMatroid>(LinearMatroid::OverRationals(
      {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}, {2, 2, 0}})));
  std::mt19937_64 rng(8);
  const BasisChooser shuffled = ShuffledChooser(rng);
  int exchanges = 0;
  for (const auto& m : family) {
    const int tau = TauBases(*m);
    ForEachCanonicalColouring(
        m->ground_size(), m->ground_size() - tau + 2,
        [&](const Colouring& c) {
          const RainbowBasisResult r = RainbowBasis(*m, c, tau);
          EXPECT_TRUE(m->IsBasis(r.basis)) << m->Describe();
          EXPECT_TRUE(c.IsRainbow(r.basis)) << m->Describe();
          EXPECT_NE(r.step, RainbowBasisStep::kExchange);
          for (int trial = 0; trial < 5; ++trial) {
            const RainbowBasisResult s =
                RainbowBasis(*m, c, tau, false, shuffled);
            EXPECT_TRUE(m->IsBasis(s.basis)) << m->Describe();
            EXPECT_TRUE(c.IsRainbow(s.basis)) << m->Describe();
            exchanges += s.step == RainbowBasisStep::kExchange;
          }
          return true;
        });
  }
  EXPECT_GT(exchanges, 0);
}

TEST(RainbowBasisTest, RandomColouringsOfLargerMatroids) {
  std::mt19937_64 rng(5);
  const GraphicMatroid k5(CompleteGraph(5));
  const int tau = TauBases(k5);
  for (int i = 0; i < 2000; ++i) {
    const Colouring c = RandomSurjectiveColouring(10, 10 - tau + 2, rng);
    const RainbowBasisResult r = RainbowBasis(k5, c, tau);
    ASSERT_TRUE(k5.IsBasis(r.basis));
    ASSERT_TRUE(c.IsRainbow(r.basis));
  }
}

TEST(RainbowBasisTest, BasisHypergraphExactness) {
  for (const GraphSpec& g :
       {CompleteGraph(4), CycleGraph(5), CompleteBipartiteGraph(2, 3)}) {
    const GraphicMatroid m(g);
    const Hypergraph h = BasisHypergraph(m);
    EXPECT_EQ(HeterochromaticNumber(h).value,
              m.ground_size() - TauBases(m) + 2);
  }
}

TEST(GammaTest, Examples) {
  EXPECT_EQ(Gamma(PathGraph(4)), 2);
  EXPECT_EQ(Gamma(CompleteGraph(4)), 5);
  EXPECT_EQ(Gamma(CompleteBipartiteGraph(1, 3)), 2);
}

TEST(GammaTest, Errors) {
  try {
    Gamma(GraphSpec{4, {{0, 1}, {2, 3}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
  try {
    Gamma(PathGraph(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewVertices);
  }
}

TEST(GammaTest, MatchesTauOfCycleMatroid) {
  for (const GraphSpec& g :
       {PathGraph(5), CycleGraph(6), CompleteGraph(5),
        CompleteBipartiteGraph(3, 3)}) {
    EXPECT_EQ(Gamma(g), TauBases(GraphicMatroid(g)));
  }
}

TEST(EnumerateBasesTest, MatchesSubsetOracle) {
  const LinearMatroid m = LinearMatroid::OverPrimeField(
      3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 1}, {2, 2, 0}});
  auto expected = naive::Bases(m);
  std::sort(expected.begin(), expected.end(),
            [](SmallSet a, SmallSet b) { return a.bits() < b.bits(); });
  EXPECT_EQ(EnumerateBases(m), expected);
}

}  // namespace
}  // namespace rainbow
