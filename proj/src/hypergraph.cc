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

#include "rainbow/hypergraph.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

#include "rainbow/error.h"

namespace rainbow {

Colouring Colouring::FromVector(std::vector<int> colours) {
  Colouring c;
  int max_colour = 0;
  for (std::size_t i = 0; i < colours.size(); ++i) {
    if (colours[i] < 1) {
      throw Error(ErrorCode::kNotSurjective,
                  "colour of item " + std::to_string(i) + " is " +
                      std::to_string(colours[i]) + "; colours start at 1",
                  {static_cast<int>(i)});
    }
    max_colour = std::max(max_colour, colours[i]);
  }
  std::vector<bool> used(max_colour + 1, false);
  for (int colour : colours) used[colour] = true;
  for (int colour = 1; colour <= max_colour; ++colour) {
    if (!used[colour]) {
      throw Error(ErrorCode::kNotSurjective,
                  "colour " + std::to_string(colour) + " of 1.." +
                      std::to_string(max_colour) + " is unused");
    }
  }
  c.colours_ = std::move(colours);
  c.num_colours_ = max_colour;
  return c;
}

bool Colouring::IsRainbow(SmallSet items) const {
  std::vector<bool> seen(num_colours_ + 1, false);
  for (int i : items) {
    if (seen[colours_[i]]) return false;
    seen[colours_[i]] = true;
  }
  return true;
}

SmallSet Colouring::Representatives() const {
  SmallSet reps;
  std::vector<bool> seen(num_colours_ + 1, false);
  for (int i = 0; i < size(); ++i) {
    if (!seen[colours_[i]]) {
      seen[colours_[i]] = true;
      reps.Insert(i);
    }
  }
  return reps;
}

int Colouring::RepresentativeOf(int colour) const {
  for (int i = 0; i < size(); ++i) {
    if (colours_[i] == colour) return i;
  }
  return -1;
}

namespace {

bool ColouringStep(std::vector<int>& rgs, int item, int used, int num_colours,
                   const std::function<bool(const Colouring&)>& visit) {
  const int size = static_cast<int>(rgs.size());
  if (item == size) {
    if (used != num_colours) return true;
    return visit(Colouring::FromVector(rgs));
  }
  const int remaining = size - item;
  const int top = std::min(used + 1, num_colours);
  for (int colour = 1; colour <= top; ++colour) {
    const int now_used = std::max(used, colour);
    if (remaining - 1 < num_colours - now_used) continue;
    rgs[item] = colour;
    if (!ColouringStep(rgs, item + 1, now_used, num_colours, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

void ForEachCanonicalColouring(
    int size, int num_colours,
    const std::function<bool(const Colouring&)>& visit) {
  if (num_colours < 1 || num_colours > size) return;
  std::vector<int> rgs(size, 0);
  ColouringStep(rgs, 0, 0, num_colours, visit);
}

Hypergraph::Hypergraph(int vertex_count, std::vector<SmallSet> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1 || vertex_count > SmallSet::kCapacity) {
    throw Error(ErrorCode::kTooLarge,
                "vertex count " + std::to_string(vertex_count) +
                    " outside 1..64");
  }
  if (edges.empty()) {
    throw Error(ErrorCode::kInvalidInput, "hypergraph has no hyperedges");
  }
  const SmallSet universe = SmallSet::Prefix(vertex_count);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const SmallSet e = edges[i];
    if (!e.IsSubsetOf(universe)) {
      throw Error(ErrorCode::kInvalidInput,
                  "hyperedge " + std::to_string(i) +
                      " uses a vertex outside the universe",
                  {static_cast<int>(i)});
    }
    if (e.Size() < 2) {
      throw Error(ErrorCode::kInvalidInput,
                  "hyperedge " + std::to_string(i) +
                      " has fewer than two vertices",
                  {static_cast<int>(i)});
    }
    if (seen.insert(e.bits()).second) edges_.push_back(e);
  }
}

std::vector<SmallSet> Hypergraph::MinimalEdges() const {
  std::vector<SmallSet> by_size = edges_;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](SmallSet a, SmallSet b) { return a.Size() < b.Size(); });
  std::vector<SmallSet> minimal;
  for (SmallSet e : by_size) {
    bool dominated = false;
    for (SmallSet f : minimal) {
      if (f.Size() < e.Size() && f.IsSubsetOf(e)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(e);
  }
  return minimal;
}

std::optional<int> FindRainbowHyperedge(const Hypergraph& h,
                                        const Colouring& c) {
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (c.IsRainbow(h.edges()[i])) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool IsDoubleTransversal(const Hypergraph& h, SmallSet vertices) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](SmallSet e) {
    return (e & vertices).Size() >= 2;
  });
}

namespace {

class TransversalSearch {
 public:
  explicit TransversalSearch(std::vector<SmallSet> edges)
      : edges_(std::move(edges)) {}

  SmallSet Run(int vertex_count) {
    best_ = Greedy(vertex_count);
    Search(SmallSet(), SmallSet());
    return best_;
  }

 private:
  struct Open {
    int edge;
    int deficit;
    SmallSet available;
  };

  SmallSet Greedy(int vertex_count) const {
    SmallSet chosen;
    while (true) {
      std::vector<int> score(vertex_count, 0);
      bool open = false;
      for (SmallSet e : edges_) {
        const int deficit = 2 - (e & chosen).Size();
        if (deficit <= 0) continue;
        open = true;
        for (int v : e - chosen) score[v] += deficit;
      }
      if (!open) break;
      chosen.Insert(static_cast<int>(
          std::max_element(score.begin(), score.end()) - score.begin()));
    }
    // Drop vertices the rest still covers, highest index first.
    std::vector<int> members = chosen.ToVector();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      SmallSet trial = chosen;
      trial.Erase(*it);
      if (std::all_of(edges_.begin(), edges_.end(), [&](SmallSet e) {
            return (e & trial).Size() >= 2;
          })) {
        chosen = trial;
      }
    }
    return chosen;
  }

  void Search(SmallSet in, SmallSet out) {
    open_.clear();
    int pick = -1;
    int pick_slack = std::numeric_limits<int>::max();
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      const SmallSet e = edges_[i];
      const int deficit = 2 - (e & in).Size();
      if (deficit <= 0) continue;
      const SmallSet available = e - in - out;
      const int slack = available.Size() - deficit;
      if (slack < 0) return;
      if (slack < pick_slack) {
        pick_slack = slack;
        pick = static_cast<int>(open_.size());
      }
      open_.push_back({i, deficit, available});
    }
    if (open_.empty()) {
      if (in.Size() < best_.Size()) best_ = in;
      return;
    }
    // Disjoint open hyperedges each need their own new vertices.
    int bound = open_[pick].deficit;
    SmallSet used = open_[pick].available;
    for (const Open& o : open_) {
      if ((o.available & used).Empty()) {
        bound += o.deficit;
        used |= o.available;
      }
    }
    if (in.Size() + bound >= best_.Size()) return;

    const SmallSet candidates = open_[pick].available;
    SmallSet excluded = out;
    for (int v : candidates) {
      SmallSet next = in;
      next.Insert(v);
      Search(next, excluded);
      excluded.Insert(v);
    }
  }

  std::vector<SmallSet> edges_;
  std::vector<Open> open_;
  SmallSet best_;
};

}  // namespace

DoubleTransversal MinDoubleTransversal(const Hypergraph& h, int cap) {
  if (h.vertex_count() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "double transversal search capped at " + std::to_string(cap) +
                    " vertices, hypergraph has " +
                    std::to_string(h.vertex_count()));
  }
  TransversalSearch search(h.MinimalEdges());
  return {search.Run(h.vertex_count())};
}

Colouring LowerBoundColouring(const Hypergraph& h,
                              const DoubleTransversal& t) {
  std::vector<int> colours(h.vertex_count());
  int next = 2;
  for (int v = 0; v < h.vertex_count(); ++v) {
    colours[v] = t.vertices.Contains(v) ? 1 : next++;
  }
  if (t.vertices.Empty()) {
    // Not a transversal; keep the colouring surjective anyway.
    for (int& c : colours) --c;
  }
  return Colouring::FromVector(std::move(colours));
}

namespace {

// Rainbow-free colourings are exactly the partitions in which every
// hyperedge has two vertices in one block. Starting from singletons, each
// step merges two blocks that meet an unsatisfied hyperedge; the answer is
// nu minus the fewest merges that satisfy everything.
class PartitionSearch {
 public:
  PartitionSearch(const Hypergraph& h)
      : edges_(h.edges()), vertex_count_(h.vertex_count()) {}

  std::vector<std::uint8_t> Run() {
    best_merges_ = vertex_count_ - 1;
    best_.assign(vertex_count_, 0);
    std::vector<std::uint8_t> labels(vertex_count_);
    for (int v = 0; v < vertex_count_; ++v) labels[v] = v;
    Search(labels, 0);
    return best_;
  }

  int best_merges() const { return best_merges_; }

 private:
  std::uint64_t LabelMask(SmallSet e,
                          const std::vector<std::uint8_t>& labels) const {
    std::uint64_t mask = 0;
    for (int v : e) mask |= std::uint64_t{1} << labels[v];
    return mask;
  }

  void Search(const std::vector<std::uint8_t>& labels, int merges) {
    std::vector<std::uint64_t> open;
    int pick = -1;
    for (SmallSet e : edges_) {
      const std::uint64_t mask = LabelMask(e, labels);
      if (std::popcount(mask) < e.Size()) continue;
      if (pick < 0 || e.Size() < std::popcount(open[pick])) {
        pick = static_cast<int>(open.size());
      }
      open.push_back(mask);
    }
    if (open.empty()) {
      if (merges < best_merges_) {
        best_merges_ = merges;
        best_ = labels;
      }
      return;
    }
    int bound = 1;
    std::uint64_t used = open[pick];
    for (std::uint64_t mask : open) {
      if ((mask & used) == 0) {
        ++bound;
        used |= mask;
      }
    }
    if (merges + bound >= best_merges_) return;

    const SmallSet blocks(open[pick]);
    for (int a : blocks) {
      for (int b : blocks) {
        if (b <= a) continue;
        std::vector<std::uint8_t> next = Merge(labels, a, b);
        std::string key(next.begin(), next.end());
        if (!seen_.insert(std::move(key)).second) continue;
        Search(next, merges + 1);
      }
    }
  }

  // Moves block b into block a and renumbers blocks by first occurrence.
  static std::vector<std::uint8_t> Merge(
      const std::vector<std::uint8_t>& labels, int a, int b) {
    std::vector<std::uint8_t> out(labels.size());
    std::uint8_t rename[SmallSet::kCapacity];
    std::fill(std::begin(rename), std::end(rename), 0xFF);
    std::uint8_t next = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const int l = labels[v] == b ? a : labels[v];
      if (rename[l] == 0xFF) rename[l] = next++;
      out[v] = rename[l];
    }
    return out;
  }

  const std::vector<SmallSet>& edges_;
  int vertex_count_;
  int best_merges_ = 0;
  std::vector<std::uint8_t> best_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

HeterochromaticResult HeterochromaticNumber(const Hypergraph& h, int cap) {
  if (h.vertex_count() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "heterochromatic search capped at " + std::to_string(cap) +
                    " vertices, hypergraph has " +
                    std::to_string(h.vertex_count()));
  }
  PartitionSearch search(h);
  const std::vector<std::uint8_t> labels = search.Run();
  std::vector<int> colours(labels.begin(), labels.end());
  for (int& c : colours) ++c;
  return {h.vertex_count() - search.best_merges() + 1,
          Colouring::FromVector(std::move(colours))};
}

}  // namespace rainbow
