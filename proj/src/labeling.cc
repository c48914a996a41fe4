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

#include "rcsp/labeling.h"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>
#include <utility>

namespace rcsp {

bool dominates(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) {
    throw ValidationError("dominance on vectors of different arity");
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_filter_indices(
    const std::vector<std::vector<Rat>>& vectors, int k) {
  if (k < 1) throw ValidationError("k must be >= 1");
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    bool dup = false;
    for (std::size_t j : distinct) {
      if (vectors[j] == vectors[i]) {
        dup = true;
        break;
      }
    }
    if (!dup) distinct.push_back(i);
  }
  std::vector<std::size_t> kept;
  for (std::size_t i : distinct) {
    int dominators = 0;
    for (std::size_t j : distinct) {
      if (j != i && dominates(vectors[j], vectors[i])) ++dominators;
    }
    if (dominators < k) kept.push_back(i);
  }
  return kept;
}

std::vector<std::vector<Rat>> pareto_filter(
    const std::vector<std::vector<Rat>>& vectors, int k) {
  std::vector<std::vector<Rat>> out;
  for (std::size_t i : pareto_filter_indices(vectors, k)) {
    out.push_back(vectors[i]);
  }
  return out;
}

namespace {

// With NO_WAIT and positive lower bounds, "less consumption" is not always
// better: a pruned label might be the only one clearing a later lower bound.
// In that configuration propagation compares labels only within equal
// consumption vectors; the usual filter runs once on the sink set.
enum class DomMode { kNormal, kEqualResource };

bool dominates_for(DomMode mode, const std::vector<Rat>& a,
                   const std::vector<Rat>& b) {
  if (mode == DomMode::kNormal) return dominates(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return a[0] < b[0];
}

struct LabelRec {
  std::vector<Rat> vec;  // [0] cost, [1..R] consumption
  int node = 0;
  int parent = -1;  // arena index
  int arc = -1;
  bool alive = true;
};

struct Search {
  const Instance& inst;
  int k;
  DomMode mode;
  std::vector<LabelRec> arena;
  std::vector<std::vector<int>> members;  // per node, alive arena ids, stable
  std::vector<std::vector<int>> out_arcs;

  Search(const Instance& i, int kk)
      : inst(i), k(kk), mode(DomMode::kNormal) {
    if (k < 1) throw ValidationError("k must be >= 1");
    validate_instance(inst);
    members.resize(inst.node_count);
    out_arcs.resize(inst.node_count);
    for (std::size_t a = 0; a < inst.arcs.size(); ++a) {
      out_arcs[inst.arcs[a].tail].push_back(static_cast<int>(a));
    }
    if (inst.wait == WaitPolicy::kNoWait) {
      for (const auto& row : inst.window_lo) {
        for (const Rat& lo : row) {
          if (lo > 0) mode = DomMode::kEqualResource;
        }
      }
    }
  }

  // -1 when rejected; otherwise the new arena id.
  int insert(int node, std::vector<Rat> vec, int parent, int arc) {
    auto& set = members[node];
    for (int id : set) {
      if (arena[id].vec == vec) return -1;
    }
    int dominators = 0;
    for (int id : set) {
      if (dominates_for(mode, arena[id].vec, vec)) ++dominators;
    }
    if (dominators >= k) return -1;
    int new_id = static_cast<int>(arena.size());
    arena.push_back(LabelRec{std::move(vec), node, parent, arc, true});
    set.push_back(new_id);
    // The newcomer can push older members past the retention bound.
    std::vector<int> survivors;
    survivors.reserve(set.size());
    for (int id : set) {
      int count = 0;
      for (int other : set) {
        if (other != id &&
            dominates_for(mode, arena[other].vec, arena[id].vec)) {
          ++count;
        }
      }
      if (count < k) {
        survivors.push_back(id);
      } else {
        arena[id].alive = false;
      }
    }
    set.swap(survivors);
    return arena[new_id].alive ? new_id : -1;
  }

  std::optional<std::vector<Rat>> extend(const std::vector<Rat>& vec,
                                         const Arc& a) const {
    std::vector<Rat> out(vec.size());
    out[0] = vec[0] + a.cost;
    for (int r = 0; r < inst.resource_count; ++r) {
      Rat t = vec[r + 1] + a.consumption[r];
      if (inst.wait == WaitPolicy::kWait) {
        t = std::max(t, inst.window_lo[a.head][r]);
      } else if (t < inst.window_lo[a.head][r]) {
        return std::nullopt;
      }
      if (t > inst.window_hi[a.head][r]) return std::nullopt;
      out[r + 1] = std::move(t);
    }
    return out;
  }

  // Initial label at the source, or nullopt when the source window already
  // rules everything out.
  std::optional<std::vector<Rat>> seed() const {
    std::vector<Rat> vec(inst.resource_count + 1, Rat(0));
    for (int r = 0; r < inst.resource_count; ++r) {
      Rat t = 0;
      if (inst.wait == WaitPolicy::kWait) {
        t = std::max(t, inst.window_lo[inst.source][r]);
      } else if (t < inst.window_lo[inst.source][r]) {
        return std::nullopt;
      }
      if (t > inst.window_hi[inst.source][r]) return std::nullopt;
      vec[r + 1] = std::move(t);
    }
    return vec;
  }

  Path reconstruct(int id) const {
    std::vector<int> arcs;
    for (int cur = id; arena[cur].parent >= 0; cur = arena[cur].parent) {
      arcs.push_back(arena[cur].arc);
    }
    std::reverse(arcs.begin(), arcs.end());
    return Path{std::move(arcs)};
  }

  LabelingResult finish(std::size_t sweeps) const {
    LabelingResult res;
    std::vector<int> sink_ids = members[inst.sink];
    if (mode == DomMode::kEqualResource) {
      std::vector<std::vector<Rat>> vecs;
      vecs.reserve(sink_ids.size());
      for (int id : sink_ids) vecs.push_back(arena[id].vec);
      std::vector<int> filtered;
      for (std::size_t i : pareto_filter_indices(vecs, k)) {
        filtered.push_back(sink_ids[i]);
      }
      sink_ids.swap(filtered);
    }
    for (int id : sink_ids) {
      const LabelRec& rec = arena[id];
      SinkLabel lab;
      lab.cost = rec.vec[0];
      lab.consumption.assign(rec.vec.begin() + 1, rec.vec.end());
      lab.path = reconstruct(id);
      res.labels.push_back(std::move(lab));
    }
    res.stats.labels_created = arena.size();
    for (const auto& set : members) res.stats.labels_alive += set.size();
    res.stats.sweeps = sweeps;
    return res;
  }
};

// Cycles that consume nothing on any resource never terminate a label run.
void require_consuming_cycles(const Instance& inst) {
  if (is_acyclic(inst)) return;
  Instance zero = inst;
  zero.arcs.clear();
  for (const Arc& a : inst.arcs) {
    bool all_zero = true;
    for (const Rat& t : a.consumption) {
      if (t != 0) all_zero = false;
    }
    if (all_zero) zero.arcs.push_back(a);
  }
  if (!is_acyclic(zero)) {
    throw ValidationError(
        "cycle with zero consumption on every resource; labels would never "
        "settle");
  }
}

}  // namespace

LabelingResult label_correcting(const Instance& inst, int k) {
  Search s(inst, k);
  require_consuming_cycles(inst);
  auto start = s.seed();
  std::size_t sweeps = 0;
  if (start) {
    s.insert(inst.source, *start, -1, -1);
    std::deque<int> queue{inst.source};
    std::vector<bool> in_queue(inst.node_count, false);
    in_queue[inst.source] = true;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      in_queue[i] = false;
      ++sweeps;
      std::vector<int> snapshot = s.members[i];
      for (int id : snapshot) {
        if (!s.arena[id].alive) continue;
        for (int arc_id : s.out_arcs[i]) {
          const Arc& a = inst.arcs[arc_id];
          auto ext = s.extend(s.arena[id].vec, a);
          if (!ext) continue;
          if (s.insert(a.head, std::move(*ext), id, arc_id) >= 0 &&
              !in_queue[a.head]) {
            queue.push_back(a.head);
            in_queue[a.head] = true;
          }
        }
      }
    }
  }
  return s.finish(sweeps);
}

LabelingResult label_setting(const Instance& inst, int k) {
  for (const Arc& a : inst.arcs) {
    if (a.cost < 0) {
      throw ValidationError(
          "negative arc cost: label_setting needs nonnegative costs, use "
          "label_correcting");
    }
  }
  Search s(inst, k);
  require_consuming_cycles(inst);
  auto lex_greater = [&s](int lhs, int rhs) {
    const auto& a = s.arena[lhs].vec;
    const auto& b = s.arena[rhs].vec;
    if (a != b) {
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                          a.end());
    }
    return lhs > rhs;
  };
  std::priority_queue<int, std::vector<int>, decltype(lex_greater)> heap(
      lex_greater);
  std::size_t sweeps = 0;
  auto start = s.seed();
  if (start) {
    int id = s.insert(inst.source, *start, -1, -1);
    if (id >= 0) heap.push(id);
    while (!heap.empty()) {
      int id = heap.top();
      heap.pop();
      if (!s.arena[id].alive) continue;  // settled out by a later insertion
      ++sweeps;
      int node = s.arena[id].node;
      for (int arc_id : s.out_arcs[node]) {
        const Arc& a = inst.arcs[arc_id];
        auto ext = s.extend(s.arena[id].vec, a);
        if (!ext) continue;
        int child = s.insert(a.head, std::move(*ext), id, arc_id);
        if (child >= 0) heap.push(child);
      }
    }
  }
  return s.finish(sweeps);
}

LabelingResult acyclic_labeling(const Instance& inst, int k) {
  auto order = topological_order(inst);
  if (!order) {
    throw ValidationError("cyclic instance: use label_correcting");
  }
  Search s(inst, k);
  std::size_t sweeps = 0;
  auto start = s.seed();
  if (start) {
    s.insert(inst.source, *start, -1, -1);
    for (int node : *order) {
      ++sweeps;
      // Predecessors all precede `node`, so its member list is settled.
      std::vector<int> snapshot = s.members[node];
      for (int id : snapshot) {
        for (int arc_id : s.out_arcs[node]) {
          const Arc& a = inst.arcs[arc_id];
          auto ext = s.extend(s.arena[id].vec, a);
          if (ext) s.insert(a.head, std::move(*ext), id, arc_id);
        }
      }
    }
  }
  return s.finish(sweeps);
}

std::optional<Optimum> solve_exact(const Instance& inst, LabelAlgo algo) {
  LabelingResult res;
  switch (algo) {
    case LabelAlgo::kCorrection:
      res = label_correcting(inst, 1);
      break;
    case LabelAlgo::kFixation:
      res = label_setting(inst, 1);
      break;
    case LabelAlgo::kAcyclic:
      res = acyclic_labeling(inst, 1);
      break;
  }
  const SinkLabel* best = nullptr;
  for (const SinkLabel& lab : res.labels) {
    if (!best || lab.cost < best->cost) best = &lab;
  }
  if (!best) return std::nullopt;
  return Optimum{best->cost, best->consumption, best->path};
}

}  // namespace rcsp
