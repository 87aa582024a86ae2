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
#include <numeric>
#include <stdexcept>

#include "rainbow/error.h"

namespace rainbow {

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 1 || ground_size > SmallSet::kCapacity) {
    throw Error(ErrorCode::kBadParameters,
                "ground set size " + std::to_string(ground_size) +
                    " outside 1..64");
  }
}

void Matroid::InitRank() { rank_ = RankOf(ground_set()); }

int Matroid::RankOf(ElementSet elements) const {
  ElementSet independent;
  for (int e : elements) {
    ElementSet grown = independent;
    grown.Insert(e);
    if (IsIndependent(grown)) independent = grown;
  }
  return independent.Size();
}

bool Matroid::IsBasis(ElementSet elements) const {
  return elements.IsSubsetOf(ground_set()) && elements.Size() == rank_ &&
         IsIndependent(elements);
}

GraphicMatroid::GraphicMatroid(GraphSpec graph)
    : Matroid(static_cast<int>(graph.edges.size())), graph_(std::move(graph)) {
  for (std::size_t i = 0; i < graph_.edges.size(); ++i) {
    const auto [u, v] = graph_.edges[i];
    if (u < 0 || v < 0 || u >= graph_.vertex_count ||
        v >= graph_.vertex_count) {
      throw Error(ErrorCode::kInvalidInput,
                  "edge " + std::to_string(i) + " has an endpoint outside 0.." +
                      std::to_string(graph_.vertex_count - 1),
                  {static_cast<int>(i)});
    }
    if (u == v) {
      throw Error(ErrorCode::kLoopEdge,
                  "edge " + std::to_string(i) + " is a loop at vertex " +
                      std::to_string(u),
                  {static_cast<int>(i)});
    }
  }
  InitRank();
}

bool GraphicMatroid::IsIndependent(ElementSet elements) const {
  std::vector<int> parent(graph_.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : elements) {
    const int a = find(graph_.edges[e].first);
    const int b = find(graph_.edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::string GraphicMatroid::Describe() const {
  return "graphic(" + std::to_string(graph_.vertex_count) + " vertices, " +
         std::to_string(graph_.edges.size()) + " edges)";
}

UniformMatroid::UniformMatroid(int r, int m) : Matroid(m), r_(r) {
  if (r < 2 || r > m) {
    throw Error(ErrorCode::kBadParameters,
                "U_{" + std::to_string(r) + "," + std::to_string(m) +
                    "} needs 2 <= r <= m");
  }
  InitRank();
}

bool UniformMatroid::IsIndependent(ElementSet elements) const {
  return elements.Size() <= r_;
}

std::string UniformMatroid::Describe() const {
  return "U_{" + std::to_string(r_) + "," + std::to_string(ground_size()) +
         "}";
}

namespace {

bool IsPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t PowMod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

// Rank of the given columns by Gaussian elimination. `Ops` supplies the
// field arithmetic.
template <typename T, typename Ops>
int ColumnRank(std::vector<std::vector<T>> cols, const Ops& ops) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols[0].size();
  int rank = 0;
  for (std::size_t row = 0; row < rows && rank < static_cast<int>(cols.size());
       ++row) {
    std::size_t pivot = rank;
    while (pivot < cols.size() && ops.IsZero(cols[pivot][row])) ++pivot;
    if (pivot == cols.size()) continue;
    std::swap(cols[rank], cols[pivot]);
    for (std::size_t j = rank + 1; j < cols.size(); ++j) {
      if (ops.IsZero(cols[j][row])) continue;
      const T factor = ops.Div(cols[j][row], cols[rank][row]);
      for (std::size_t i = row; i < rows; ++i) {
        cols[j][i] = ops.Sub(cols[j][i], ops.Mul(factor, cols[rank][i]));
      }
    }
    ++rank;
  }
  return rank;
}

struct PrimeFieldOps {
  std::int64_t p;
  bool IsZero(std::int64_t a) const { return a == 0; }
  std::int64_t Mul(std::int64_t a, std::int64_t b) const { return a * b % p; }
  std::int64_t Sub(std::int64_t a, std::int64_t b) const {
    return ((a - b) % p + p) % p;
  }
  std::int64_t Div(std::int64_t a, std::int64_t b) const {
    return a * PowMod(b, p - 2, p) % p;
  }
};

struct RationalOps {
  bool IsZero(const Rational& a) const { return a == 0; }
  Rational Mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational Sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational Div(const Rational& a, const Rational& b) const { return a / b; }
};

template <typename T>
void CheckShape(const std::vector<std::vector<T>>& columns) {
  if (columns.empty() || columns[0].empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "matrix has no entries");
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != columns[0].size()) {
      throw Error(ErrorCode::kBadParameters,
                  "column " + std::to_string(j) + " has a different length",
                  {static_cast<int>(j)});
    }
  }
}

}  // namespace

LinearMatroid::LinearMatroid(std::int64_t p,
                             std::vector<std::vector<std::int64_t>> mod_p,
                             std::vector<std::vector<Rational>> rational,
                             int columns)
    : Matroid(columns),
      p_(p),
      mod_p_(std::move(mod_p)),
      rational_(std::move(rational)) {
  InitRank();
}

LinearMatroid LinearMatroid::OverPrimeField(
    std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns) {
  CheckShape(columns);
  if (!IsPrime(p) || p >= (std::int64_t{1} << 31)) {
    throw Error(ErrorCode::kBadParameters,
                "field size " + std::to_string(p) +
                    " is not a prime below 2^31");
  }
  std::vector<std::vector<std::int64_t>> reduced = columns;
  for (auto& col : reduced) {
    for (auto& a : col) a = ((a % p) + p) % p;
  }
  return LinearMatroid(p, std::move(reduced), {},
                       static_cast<int>(columns.size()));
}

LinearMatroid LinearMatroid::OverRationals(
    std::vector<std::vector<Rational>> columns) {
  CheckShape(columns);
  const int m = static_cast<int>(columns.size());
  return LinearMatroid(0, {}, std::move(columns), m);
}

bool LinearMatroid::IsIndependent(ElementSet elements) const {
  if (p_ != 0) {
    std::vector<std::vector<std::int64_t>> cols;
    for (int e : elements) cols.push_back(mod_p_[e]);
    return ColumnRank(std::move(cols), PrimeFieldOps{p_}) == elements.Size();
  }
  std::vector<std::vector<Rational>> cols;
  for (int e : elements) cols.push_back(rational_[e]);
  return ColumnRank(std::move(cols), RationalOps{}) == elements.Size();
}

std::string LinearMatroid::Describe() const {
  return "linear over " +
         (p_ != 0 ? "GF(" + std::to_string(p_) + ")" : std::string("Q")) +
         ", " + std::to_string(ground_size()) + " columns";
}

bool SatisfiesMatroidAxioms(const Matroid& m) {
  const int size = m.ground_size();
  if (size > 20) {
    throw Error(ErrorCode::kTooLarge, "axiom check limited to 20 elements");
  }
  const std::uint64_t count = std::uint64_t{1} << size;
  std::vector<bool> independent(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    independent[s] = m.IsIndependent(ElementSet(s));
  }
  if (!independent[0]) return false;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (!independent[s]) continue;
    for (int e : ElementSet(s)) {
      if (!independent[s & ~(std::uint64_t{1} << e)]) return false;
    }
  }
  for (std::uint64_t a = 0; a < count; ++a) {
    if (!independent[a]) continue;
    for (std::uint64_t b = 0; b < count; ++b) {
      if (!independent[b] || ElementSet(b).Size() <= ElementSet(a).Size()) {
        continue;
      }
      bool augmentable = false;
      for (int e : ElementSet(b) - ElementSet(a)) {
        if (independent[a | (std::uint64_t{1} << e)]) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable) return false;
    }
  }
  return true;
}

std::vector<ElementSet> EnumerateBases(const Matroid& m, int cap) {
  if (m.ground_size() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "basis enumeration capped at " + std::to_string(cap) +
                    " elements, matroid has " +
                    std::to_string(m.ground_size()));
  }
  std::vector<ElementSet> bases;
  const int r = m.rank();
  if (r == 0) return {ElementSet()};
  const std::uint64_t limit = std::uint64_t{1} << m.ground_size();
  // Gosper's hack walks the r-subsets in increasing mask order.
  for (std::uint64_t s = (std::uint64_t{1} << r) - 1; s < limit;) {
    if (m.IsIndependent(ElementSet(s))) bases.push_back(ElementSet(s));
    const std::uint64_t c = s & -s;
    const std::uint64_t next = s + c;
    s = (((next ^ s) >> 2) / c) | next;
  }
  return bases;
}

Hypergraph BasisHypergraph(const Matroid& m, int cap) {
  return Hypergraph(m.ground_size(), EnumerateBases(m, cap));
}

ElementSet FundamentalCircuit(const Matroid& m, ElementSet basis,
                              int element) {
  if (!m.IsBasis(basis)) {
    throw Error(ErrorCode::kNotABasis, "set is not a basis", basis.ToVector());
  }
  if (element < 0 || element >= m.ground_size()) {
    throw Error(ErrorCode::kInvalidInput,
                "element " + std::to_string(element) + " not in ground set",
                {element});
  }
  if (basis.Contains(element)) {
    throw Error(ErrorCode::kElementInBasis,
                "element " + std::to_string(element) + " already in basis",
                {element});
  }
  ElementSet circuit = ElementSet::Singleton(element);
  for (int b : basis) {
    ElementSet exchanged = basis;
    exchanged.Erase(b);
    exchanged.Insert(element);
    if (m.IsIndependent(exchanged)) circuit.Insert(b);
  }
  return circuit;
}

std::optional<ElementSet> BasisAvoidingInOrder(const Matroid& m,
                                               ElementSet avoid,
                                               std::span<const int> priority) {
  ElementSet independent;
  for (int e : priority) {
    if (avoid.Contains(e)) continue;
    ElementSet grown = independent;
    grown.Insert(e);
    if (m.IsIndependent(grown)) independent = grown;
  }
  if (independent.Size() < m.rank()) {
    for (int z : priority) {
      if (!avoid.Contains(z)) continue;
      ElementSet grown = independent;
      grown.Insert(z);
      if (m.IsIndependent(grown)) {
        independent = grown;
        break;
      }
    }
  }
  if (independent.Size() < m.rank()) return std::nullopt;
  return independent;
}

std::optional<ElementSet> BasisAvoiding(const Matroid& m, ElementSet avoid) {
  const std::vector<int> order = m.ground_set().ToVector();
  return BasisAvoidingInOrder(m, avoid, order);
}

int TauBases(const Matroid& m, int cap) {
  return MinDoubleTransversal(BasisHypergraph(m, cap), cap).size();
}

RainbowBasisResult RainbowBasis(const Matroid& m, const Colouring& colouring,
                                std::optional<int> tau, bool check_tau,
                                const BasisChooser& choose) {
  if (m.rank() < 2) {
    throw Error(ErrorCode::kRankTooSmall,
                "rank " + std::to_string(m.rank()) + " is below 2");
  }
  if (colouring.size() != m.ground_size()) {
    throw Error(ErrorCode::kWrongColourCount,
                "colouring covers " + std::to_string(colouring.size()) +
                    " elements, matroid has " +
                    std::to_string(m.ground_size()));
  }
  if (!tau) {
    tau = TauBases(m);
  } else if (check_tau) {
    const int computed = TauBases(m);
    if (computed != *tau) {
      throw Error(ErrorCode::kTauMismatch,
                  "supplied tau " + std::to_string(*tau) + " but computed " +
                      std::to_string(computed));
    }
  }
  const int expected = m.ground_size() - *tau + 2;
  if (colouring.num_colours() != expected) {
    throw Error(ErrorCode::kWrongColourCount,
                "expected exactly " + std::to_string(expected) +
                    " colours, got " +
                    std::to_string(colouring.num_colours()));
  }

  const ElementSet x_set = colouring.Representatives();
  const ElementSet y_set = m.ground_set() - x_set;

  // |Y| = tau - 2, so Y is not a double transversal.
  const std::optional<ElementSet> r = choose(m, y_set);
  if (!r || !m.IsBasis(*r) || (*r & y_set).Size() > 1) {
    throw std::logic_error("no basis meeting Y at most once");
  }
  if (colouring.IsRainbow(*r)) return {*r, RainbowBasisStep::kFirstBasis};

  // R inside X would be rainbow, so R meets Y in exactly one element y,
  // and the representative x of y's colour is in R.
  if ((*r & y_set).Size() != 1) {
    throw std::logic_error("non-rainbow R does not meet Y exactly once");
  }
  const int y = (*r & y_set).Min();
  const int x = colouring.RepresentativeOf(colouring[y]);
  if (!r->Contains(x)) {
    throw std::logic_error("representative of y's colour is not in R");
  }

  ElementSet z_set = y_set;
  z_set.Insert(x);
  const std::optional<ElementSet> s = choose(m, z_set);
  if (!s || !m.IsBasis(*s) || (*s & z_set).Size() > 1) {
    throw std::logic_error("no basis meeting Y + x at most once");
  }
  if (colouring.IsRainbow(*s)) return {*s, RainbowBasisStep::kSecondBasis};

  ElementSet core = *r;
  core.Erase(x);
  core.Erase(y);
  int z = -1;
  for (int candidate : (*s - z_set) - *r) {
    ElementSet grown = core;
    grown.Insert(candidate);
    if (m.IsIndependent(grown)) {
      z = candidate;
      break;
    }
  }
  if (z < 0) throw std::logic_error("no exchange element z in S - Z");

  const ElementSet circuit = FundamentalCircuit(m, *r, z);
  ElementSet result = *r;
  result.Insert(z);
  if (circuit.Contains(x)) {
    result.Erase(x);
  } else if (circuit.Contains(y)) {
    result.Erase(y);
  } else {
    throw std::logic_error("fundamental circuit of z avoids both x and y");
  }
  if (!m.IsBasis(result) || !colouring.IsRainbow(result)) {
    throw std::logic_error("exchange step produced a non-rainbow basis");
  }
  return {result, RainbowBasisStep::kExchange};
}

int Gamma(const GraphSpec& graph) {
  const int n = graph.vertex_count;
  if (n < 3) {
    throw Error(ErrorCode::kTooFewVertices,
                "need at least 3 vertices, got " + std::to_string(n));
  }
  if (n > 12) {
    throw Error(ErrorCode::kTooLarge, "gamma search limited to 12 vertices");
  }
  if (graph.edges.empty() || GraphicMatroid(graph).rank() != n - 1) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }

  // Restricted-growth labellings into exactly three parts.
  int best = static_cast<int>(graph.edges.size());
  std::vector<int> label(n, 0);
  auto visit = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      if (used < 3) return;
      int cut = 0;
      for (const auto& [a, b] : graph.edges) cut += label[a] != label[b];
      best = std::min(best, cut);
      return;
    }
    for (int l = 0; l <= std::min(used, 2); ++l) {
      if (n - v - 1 < 3 - std::max(used, l + 1)) continue;
      label[v] = l;
      self(self, v + 1, std::max(used, l + 1));
    }
  };
  visit(visit, 0, 0);
  return best;
}

GraphSpec CompleteGraph(int n) {
  GraphSpec g{n, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

GraphSpec PathGraph(int n) {
  GraphSpec g{n, {}};
  for (int a = 0; a + 1 < n; ++a) g.edges.emplace_back(a, a + 1);
  return g;
}

GraphSpec CycleGraph(int n) {
  GraphSpec g = PathGraph(n);
  g.edges.emplace_back(0, n - 1);
  return g;
}

GraphSpec CompleteBipartiteGraph(int a, int b) {
  GraphSpec g{a + b, {}};
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
  }
  return g;
}

}  // namespace rainbow
