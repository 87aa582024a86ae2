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

#ifndef RAINBOW_MATROID_H_
#define RAINBOW_MATROID_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/hypergraph.h"
#include "rainbow/small_set.h"

namespace rainbow {

using ElementSet = SmallSet;

inline constexpr int kDefaultBasisCap = 20;

// A matroid on ground set 0..m-1 given by an independence oracle.
// Immutable after construction.
class Matroid {
 public:
  virtual ~Matroid() = default;

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::Prefix(ground_size_); }

  virtual bool IsIndependent(ElementSet elements) const = 0;
  virtual std::string Describe() const = 0;

  // Size of a maximal independent subset (greedy).
  int RankOf(ElementSet elements) const;
  bool IsBasis(ElementSet elements) const;

 protected:
  explicit Matroid(int ground_size);
  // Derived constructors call this once the oracle is usable.
  void InitRank();

 private:
  int ground_size_;
  int rank_ = 0;
};

struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Cycle matroid: independent sets are forests.
class GraphicMatroid final : public Matroid {
 public:
  // Throws kLoopEdge on a loop.
  explicit GraphicMatroid(GraphSpec graph);

  bool IsIndependent(ElementSet elements) const override;
  std::string Describe() const override;
  const GraphSpec& graph() const { return graph_; }

 private:
  GraphSpec graph_;
};

// U_{r,m}: independent sets are those of size at most r.
class UniformMatroid final : public Matroid {
 public:
  // Throws kBadParameters unless 2 <= r <= m <= 64.
  UniformMatroid(int r, int m);

  bool IsIndependent(ElementSet elements) const override;
  std::string Describe() const override;

 private:
  int r_;
};

using Rational = boost::multiprecision::cpp_rational;

// Column matroid of a matrix over GF(p) or the rationals.
class LinearMatroid final : public Matroid {
 public:
  // `columns[j]` is column j; all columns share a length. Entries are reduced
  // mod p. Throws kEmptyMatrix or kBadParameters (p not prime, ragged).
  static LinearMatroid OverPrimeField(
      std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns);
  static LinearMatroid OverRationals(std::vector<std::vector<Rational>> columns);

  bool IsIndependent(ElementSet elements) const override;
  std::string Describe() const override;

 private:
  LinearMatroid(std::int64_t p, std::vector<std::vector<std::int64_t>> mod_p,
                std::vector<std::vector<Rational>> rational, int columns);

  std::int64_t p_;  // 0 for the rationals
  std::vector<std::vector<std::int64_t>> mod_p_;
  std::vector<std::vector<Rational>> rational_;
};

// Exhaustive check of the independence axioms (empty set, hereditary,
// augmentation). Exponential; intended for m <= 10.
bool SatisfiesMatroidAxioms(const Matroid& m);

// All bases, ascending by bitmask. Throws kTooLarge above `cap` elements.
std::vector<ElementSet> EnumerateBases(const Matroid& m,
                                       int cap = kDefaultBasisCap);

// Hypergraph on the ground set whose hyperedges are the bases.
Hypergraph BasisHypergraph(const Matroid& m, int cap = kDefaultBasisCap);

// The unique circuit inside basis + {element}.
ElementSet FundamentalCircuit(const Matroid& m, ElementSet basis, int element);

// A basis meeting `avoid` in at most one element, built greedily: a maximal
// independent subset of the complement first, then at most one element of
// `avoid`. None when `avoid` is a double transversal of the bases.
std::optional<ElementSet> BasisAvoiding(const Matroid& m, ElementSet avoid);

// Same construction with both greedy phases scanning elements in `priority`
// order instead of index order. `priority` must list every element once.
std::optional<ElementSet> BasisAvoidingInOrder(const Matroid& m,
                                               ElementSet avoid,
                                               std::span<const int> priority);

// Picks a basis meeting a set in at most one element, or none.
using BasisChooser =
    std::function<std::optional<ElementSet>(const Matroid&, ElementSet)>;

// Minimum size of a set meeting every basis at least twice.
int TauBases(const Matroid& m, int cap = kDefaultBasisCap);

enum class RainbowBasisStep {
  kFirstBasis,   // R was already rainbow
  kSecondBasis,  // S was rainbow
  kExchange,     // circuit exchange on R + z
};

struct RainbowBasisResult {
  ElementSet basis;
  RainbowBasisStep step = RainbowBasisStep::kFirstBasis;
};

// Finds a basis with pairwise distinct colours under a colouring with
// exactly m - tau + 2 colours. `tau` is computed when not supplied; with
// `check_tau` a supplied value is also recomputed and a mismatch throws
// kTauMismatch.
//
// With the default chooser the second basis is always rainbow: both greedy
// passes span the closure of the representatives, so they extend by the same
// leftover element. Other choosers reach the circuit-exchange step.
RainbowBasisResult RainbowBasis(const Matroid& m, const Colouring& colouring,
                                std::optional<int> tau = std::nullopt,
                                bool check_tau = false,
                                const BasisChooser& choose = BasisAvoiding);

// Fewest edges whose removal leaves at least three components. Exact over
// 3-partitions of the vertices; n <= 12.
int Gamma(const GraphSpec& graph);

// Convenience families.
GraphSpec CompleteGraph(int n);
GraphSpec PathGraph(int n);
GraphSpec CycleGraph(int n);
GraphSpec CompleteBipartiteGraph(int a, int b);

}  // namespace rainbow

#endif  // RAINBOW_MATROID_H_
