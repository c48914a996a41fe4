// Copyright 2026 The rcsp authors
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

#include "rcsp/kpaths.h"

#include <algorithm>
#include <queue>

namespace rcsp {
namespace {

struct Candidate {
  Rat cost;
  std::vector<int> nodes;
  std::vector<int> arcs;
  int branch = 0;  // children may deviate at positions >= branch
};

struct CandidateAfter {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.nodes > b.nodes;
  }
};

// Best-first deviation enumeration. Each candidate carries the cheapest
// completion of its prefix, so pops come out in nondecreasing cost order and
// the deviation positions partition the remaining paths exactly once each.
class RankedEnumerator {
 public:
  explicit RankedEnumerator(const Instance& inst) : inst_(inst) {
    validate_instance(inst);
    if (!is_acyclic(inst)) {
      throw ValidationError("ranked path enumeration expects an acyclic "
                            "instance");
    }
    out_arcs_.resize(inst.node_count);
    for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
      out_arcs_[inst.arcs[id].tail].push_back(static_cast<int>(id));
    }
    completion_.resize(inst.node_count);
    auto order = *topological_order(inst);
    completion_[inst.sink] = Rat(0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (int id : out_arcs_[*it]) {
        const Arc& a = inst.arcs[id];
        if (!completion_[a.head]) continue;
        Rat via = a.cost + *completion_[a.head];
        if (!completion_[*it] || via < *completion_[*it]) {
          completion_[*it] = via;
        }
      }
    }
    if (completion_[inst.source]) {
      Candidate root;
      root.cost = Rat(0);
      root.nodes.push_back(inst.source);
      complete(root);
      heap_.push(std::move(root));
    }
  }

  std::optional<Candidate> pop() {
    if (heap_.empty()) return std::nullopt;
    Candidate best = heap_.top();
    heap_.pop();
    for (std::size_t p = best.branch; p < best.arcs.size(); ++p) {
      for (int id : out_arcs_[best.nodes[p]]) {
        if (id == best.arcs[p]) continue;
        const Arc& a = inst_.arcs[id];
        if (!completion_[a.head]) continue;
        Candidate child;
        child.nodes.assign(best.nodes.begin(), best.nodes.begin() + p + 1);
        child.arcs.assign(best.arcs.begin(), best.arcs.begin() + p);
        child.cost = Rat(0);
        for (int kept : child.arcs) child.cost += inst_.arcs[kept].cost;
        child.arcs.push_back(id);
        child.nodes.push_back(a.head);
        child.cost += a.cost;
        child.branch = static_cast<int>(p) + 1;
        complete(child);
        heap_.push(std::move(child));
      }
    }
    return best;
  }

 private:
  // Extends greedily with the cheapest completion, ties resolved toward the
  // smallest head then the smallest arc id.
  void complete(Candidate& c) {
    int at = c.nodes.back();
    while (at != inst_.sink) {
      int pick = -1;
      for (int id : out_arcs_[at]) {
        const Arc& a = inst_.arcs[id];
        if (!completion_[a.head]) continue;
        if (pick < 0) {
          pick = id;
          continue;
        }
        const Arc& best = inst_.arcs[pick];
        Rat via = a.cost + *completion_[a.head];
        Rat best_via = best.cost + *completion_[best.head];
        if (via != best_via ? via < best_via : a.head < best.head) pick = id;
      }
      c.arcs.push_back(pick);
      c.cost += inst_.arcs[pick].cost;
      at = inst_.arcs[pick].head;
      c.nodes.push_back(at);
    }
  }

  const Instance& inst_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<std::optional<Rat>> completion_;
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter>
      heap_;
};

}  // namespace

std::vector<RankedPath> k_shortest_paths(const Instance& inst, int k) {
  if (k < 1) throw ValidationError("k must be positive");
  RankedEnumerator ranked(inst);
  std::vector<RankedPath> out;
  while (static_cast<int>(out.size()) < k) {
    auto next = ranked.pop();
    if (!next) break;
    out.push_back(RankedPath{Path{std::move(next->arcs)}, next->cost});
  }
  return out;
}

std::optional<RankedFeasible> first_feasible_by_rank(const Instance& inst,
                                                     int k_max) {
  if (k_max < 1) throw ValidationError("k_max must be positive");
  RankedEnumerator ranked(inst);
  for (int rank = 1; rank <= k_max; ++rank) {
    auto next = ranked.pop();
    if (!next) return std::nullopt;
    Path path{std::move(next->arcs)};
    if (is_feasible(inst, path)) {
      return RankedFeasible{std::move(path), next->cost, rank};
    }
  }
  return std::nullopt;
}

}  // namespace rcsp
