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

#include "rcsp/preprocess.h"

#include <algorithm>
#include <set>

namespace rcsp {

ReductionReport reduce_windows(const Instance& inst, int max_iterations) {
  validate_instance(inst);
  const int n = inst.node_count;
  const int rc = inst.resource_count;
  if (max_iterations <= 0) max_iterations = n * std::max(rc, 1) * 64;
  const bool no_wait = inst.wait == WaitPolicy::kNoWait;

  auto lo = inst.window_lo;
  auto hi = inst.window_hi;
  std::vector<bool> arc_alive(inst.arcs.size(), true);
  std::vector<bool> node_alive(n, true);
  std::set<int> removed_arcs;
  std::set<int> removed_nodes;
  bool infeasible = false;
  int iterations = 0;

  auto drop_arc = [&](int id) {
    arc_alive[id] = false;
    removed_arcs.insert(id);
  };
  auto drop_node = [&](int v) {
    node_alive[v] = false;
    removed_nodes.insert(v);
    for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
      if (arc_alive[id] &&
          (inst.arcs[id].tail == v || inst.arcs[id].head == v)) {
        drop_arc(static_cast<int>(id));
      }
    }
  };

  while (iterations < max_iterations && !infeasible) {
    ++iterations;
    bool changed = false;

    for (int r = 0; r < rc; ++r) {
      // Arrival bounds, driven by incoming arcs. The source never arrives, so
      // it is exempt.
      for (int j = 0; j < n; ++j) {
        if (!node_alive[j] || j == inst.source) continue;
        std::optional<Rat> min_a, max_b;
        for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
          if (!arc_alive[id] || inst.arcs[id].head != j) continue;
          const Arc& a = inst.arcs[id];
          Rat cand_a = lo[a.tail][r] + a.consumption[r];
          Rat cand_b = hi[a.tail][r] + a.consumption[r];
          if (!min_a || cand_a < *min_a) min_a = cand_a;
          if (!max_b || cand_b > *max_b) max_b = cand_b;
        }
        if (!min_a) continue;  // no live predecessor, nothing to learn
        if (*min_a > lo[j][r]) {
          lo[j][r] = *min_a;
          changed = true;
        }
        // With waiting the arrival may idle below b regardless of how late
        // every predecessor runs, so the upper update only holds for NO_WAIT.
        if (no_wait && *max_b < hi[j][r]) {
          hi[j][r] = *max_b;
          changed = true;
        }
      }
      // Departure bounds, driven by outgoing arcs; the sink never departs.
      for (int i = 0; i < n; ++i) {
        if (!node_alive[i] || i == inst.sink) continue;
        std::optional<Rat> min_a, max_b;
        for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
          if (!arc_alive[id] || inst.arcs[id].tail != i) continue;
          const Arc& a = inst.arcs[id];
          Rat cand_a = lo[a.head][r] - a.consumption[r];
          Rat cand_b = hi[a.head][r] - a.consumption[r];
          if (!min_a || cand_a < *min_a) min_a = cand_a;
          if (!max_b || cand_b > *max_b) max_b = cand_b;
        }
        if (!max_b) continue;
        if (*max_b < hi[i][r]) {
          hi[i][r] = *max_b;
          changed = true;
        }
        // Waiting at the successor absorbs an early departure; only NO_WAIT
        // can raise the lower bound from downstream.
        if (no_wait && *min_a > lo[i][r]) {
          lo[i][r] = *min_a;
          changed = true;
        }
      }
    }

    for (int v = 0; v < n && !infeasible; ++v) {
      if (!node_alive[v]) continue;
      bool empty = false;
      for (int r = 0; r < rc; ++r) {
        if (lo[v][r] > hi[v][r]) empty = true;
      }
      if (!empty) continue;
      if (v == inst.source || v == inst.sink) {
        infeasible = true;
        break;
      }
      drop_node(v);
      changed = true;
    }
    if (infeasible) break;

    if (no_wait) {
      for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
        if (!arc_alive[id]) continue;
        const Arc& a = inst.arcs[id];
        for (int r = 0; r < rc; ++r) {
          if (hi[a.tail][r] + a.consumption[r] < lo[a.head][r]) {
            drop_arc(static_cast<int>(id));
            changed = true;
            break;
          }
        }
      }
    }

    if (!changed) break;
  }

  // Sink cut off from the source is as empty as a dead window.
  if (!infeasible) {
    std::vector<bool> seen(n, false);
    seen[inst.source] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
        if (!arc_alive[id]) continue;
        const Arc& a = inst.arcs[id];
        if (seen[a.tail] && !seen[a.head]) {
          seen[a.head] = true;
          grew = true;
        }
      }
    }
    if (!seen[inst.sink]) infeasible = true;
  }

  ReductionReport report;
  report.iterations = iterations;
  report.infeasible = infeasible;
  report.removed_nodes.assign(removed_nodes.begin(), removed_nodes.end());
  report.removed_arcs.assign(removed_arcs.begin(), removed_arcs.end());
  Instance out = inst;
  out.kind = ConstraintKind::kWindows;
  out.window_lo = std::move(lo);
  out.window_hi = std::move(hi);
  for (int v : report.removed_nodes) {
    out.window_lo[v].assign(rc, Rat(0));
    out.window_hi[v].assign(rc, Rat(0));
  }
  out.arcs.clear();
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    if (arc_alive[id]) out.arcs.push_back(inst.arcs[id]);
  }
  report.reduced = std::move(out);
  return report;
}

std::vector<TreeEntry> shortest_path_tree(const Instance& inst,
                                          TreeMetric metric, int resource,
                                          TreeDirection direction) {
  validate_instance(inst);
  if (metric == TreeMetric::kResource &&
      (resource < 0 || resource >= inst.resource_count)) {
    throw ValidationError("resource index out of range");
  }
  const int n = inst.node_count;
  const bool forward = direction == TreeDirection::kFromSource;
  const int root = forward ? inst.source : inst.sink;
  std::vector<TreeEntry> tree(n);
  tree[root].dist = Rat(0);
  auto weight = [&](const Arc& a) {
    return metric == TreeMetric::kCost ? a.cost : a.consumption[resource];
  };
  bool changed = true;
  for (int round = 0; round < n && changed; ++round) {
    changed = false;
    for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
      const Arc& a = inst.arcs[id];
      int from = forward ? a.tail : a.head;
      int to = forward ? a.head : a.tail;
      if (!tree[from].dist) continue;
      Rat cand = *tree[from].dist + weight(a);
      if (!tree[to].dist || cand < *tree[to].dist) {
        if (round == n - 1) {
          throw ValidationError("negative cost cycle");
        }
        tree[to].dist = cand;
        tree[to].via_arc = static_cast<int>(id);
        changed = true;
      }
    }
  }
  return tree;
}

namespace {

// Arc ids of the tree path root..node (kFromSource) or node..root (kIntoSink).
std::vector<int> tree_segment(const Instance& inst,
                              const std::vector<TreeEntry>& tree, int node,
                              TreeDirection direction) {
  std::vector<int> arcs;
  int cur = node;
  while (tree[cur].via_arc >= 0) {
    int id = tree[cur].via_arc;
    arcs.push_back(id);
    cur = direction == TreeDirection::kFromSource ? inst.arcs[id].tail
                                                  : inst.arcs[id].head;
  }
  if (direction == TreeDirection::kFromSource) {
    std::reverse(arcs.begin(), arcs.end());
  }
  return arcs;
}

struct PreState {
  const Instance& original;
  Instance work;  // arcs swap in and out as elimination proceeds
  std::vector<int> work_to_orig;
  std::set<int> removed_arcs;
  std::set<int> removed_nodes;

  explicit PreState(const Instance& inst) : original(inst), work(inst) {
    work_to_orig.resize(inst.arcs.size());
    for (std::size_t i = 0; i < inst.arcs.size(); ++i) {
      work_to_orig[i] = static_cast<int>(i);
    }
  }

  Path to_original(const std::vector<int>& work_arcs) const {
    Path p;
    for (int id : work_arcs) p.arcs.push_back(work_to_orig[id]);
    return p;
  }

  void apply_removals(const std::vector<bool>& arc_dead,
                      const std::vector<bool>& node_dead) {
    std::vector<Arc> arcs;
    std::vector<int> map;
    for (std::size_t i = 0; i < work.arcs.size(); ++i) {
      const Arc& a = work.arcs[i];
      if (arc_dead[i] || node_dead[a.tail] || node_dead[a.head]) {
        removed_arcs.insert(work_to_orig[i]);
      } else {
        arcs.push_back(a);
        map.push_back(work_to_orig[i]);
      }
    }
    work.arcs = std::move(arcs);
    work_to_orig = std::move(map);
    for (int v = 0; v < work.node_count; ++v) {
      if (node_dead[v]) removed_nodes.insert(v);
    }
  }
};

}  // namespace

PreResult pretraitement(const Instance& inst, bool strict_mode) {
  validate_instance(inst);
  if (inst.kind != ConstraintKind::kFinal) {
    throw ValidationError("pretraitement expects a FINAL-mode instance");
  }
  if (!is_acyclic(inst)) {
    throw ValidationError("pretraitement expects an acyclic instance");
  }
  const int n = inst.node_count;
  const int rc = inst.resource_count;

  Rat c_max = 0;
  for (const Arc& a : inst.arcs) c_max = std::max(c_max, a.cost);
  const Rat u0 = c_max * (n - 1) + 1;

  PreState state(inst);
  Rat lower = 0;
  Rat upper = u0;
  std::optional<Path> witness;  // original arc ids, cost == upper when set
  int iterations = 0;

  auto finish = [&](PreOutcome outcome) {
    PreResult res;
    res.outcome = std::move(outcome);
    res.pruned = state.work;
    res.removed_nodes.assign(state.removed_nodes.begin(),
                             state.removed_nodes.end());
    res.removed_arcs.assign(state.removed_arcs.begin(),
                            state.removed_arcs.end());
    res.iterations = iterations;
    return res;
  };
  auto infeasible_or_witness = [&]() {
    if (witness) {
      return finish(PreOptimal{path_cost(inst, *witness), *witness});
    }
    return finish(PreInfeasible{});
  };

  bool changed = true;
  while (changed) {
    changed = false;
    ++iterations;
    const Instance& g = state.work;

    auto cost_fwd =
        shortest_path_tree(g, TreeMetric::kCost, -1, TreeDirection::kFromSource);
    auto cost_bwd =
        shortest_path_tree(g, TreeMetric::kCost, -1, TreeDirection::kIntoSink);
    if (!cost_fwd[g.sink].dist) return infeasible_or_witness();

    std::vector<std::vector<TreeEntry>> res_fwd(rc), res_bwd(rc);
    for (int r = 0; r < rc; ++r) {
      res_fwd[r] = shortest_path_tree(g, TreeMetric::kResource, r,
                                      TreeDirection::kFromSource);
      res_bwd[r] = shortest_path_tree(g, TreeMetric::kResource, r,
                                      TreeDirection::kIntoSink);
      if (*res_fwd[r][g.sink].dist > g.window_hi[g.sink][r]) {
        return infeasible_or_witness();
      }
    }

    lower = *cost_fwd[g.sink].dist;
    Path min_cost_path =
        state.to_original(tree_segment(g, cost_fwd, g.sink,
                                       TreeDirection::kFromSource));
    if (is_feasible(inst, min_cost_path)) {
      // A feasible path at the unconstrained cost minimum settles everything.
      if (witness && path_cost(inst, *witness) < lower) {
        return finish(PreOptimal{path_cost(inst, *witness), *witness});
      }
      return finish(PreOptimal{lower, min_cost_path});
    }

    auto offer = [&](const Path& p) {
      if (!is_feasible(inst, p)) return;
      Rat c = path_cost(inst, p);
      if (c < upper) {
        upper = c;
        witness = p;
        changed = true;
      }
    };
    for (int r = 0; r < rc; ++r) {
      offer(state.to_original(
          tree_segment(g, res_fwd[r], g.sink, TreeDirection::kFromSource)));
    }
    // Recombination: best prefix to the arc tail in one metric, the arc, best
    // suffix from its head in another.
    const std::vector<std::vector<TreeEntry>*> fwd_trees = [&] {
      std::vector<std::vector<TreeEntry>*> v{&cost_fwd};
      for (int r = 0; r < rc; ++r) v.push_back(&res_fwd[r]);
      return v;
    }();
    const std::vector<std::vector<TreeEntry>*> bwd_trees = [&] {
      std::vector<std::vector<TreeEntry>*> v{&cost_bwd};
      for (int r = 0; r < rc; ++r) v.push_back(&res_bwd[r]);
      return v;
    }();
    for (std::size_t id = 0; id < g.arcs.size(); ++id) {
      const Arc& a = g.arcs[id];
      for (auto* ft : fwd_trees) {
        if (!(*ft)[a.tail].dist) continue;
        for (auto* bt : bwd_trees) {
          if (!(*bt)[a.head].dist) continue;
          std::vector<int> arcs =
              tree_segment(g, *ft, a.tail, TreeDirection::kFromSource);
          arcs.push_back(static_cast<int>(id));
          std::vector<int> tail_seg =
              tree_segment(g, *bt, a.head, TreeDirection::kIntoSink);
          arcs.insert(arcs.end(), tail_seg.begin(), tail_seg.end());
          offer(state.to_original(arcs));
        }
      }
    }

    // Elimination. Resource tests are strict (> budget kills); the cost test
    // kills at >= upper unless strict_mode keeps cost-equal elements. The
    // witness is untouchable either way.
    std::vector<bool> witness_node(n, false), witness_arc_orig;
    witness_arc_orig.assign(inst.arcs.size(), false);
    if (witness) {
      for (int nd : path_nodes(inst, *witness)) witness_node[nd] = true;
      for (int id : witness->arcs) witness_arc_orig[id] = true;
    }
    auto cost_kills = [&](const Rat& through) {
      return strict_mode ? through > upper : through >= upper;
    };
    std::vector<bool> node_dead(n, false);
    std::vector<bool> arc_dead(g.arcs.size(), false);
    for (int v = 0; v < n; ++v) {
      if (v == g.source || v == g.sink || witness_node[v]) continue;
      bool gone = false;
      for (int r = 0; r < rc && !gone; ++r) {
        if (!res_fwd[r][v].dist || !res_bwd[r][v].dist) continue;
        if (*res_fwd[r][v].dist + *res_bwd[r][v].dist > g.window_hi[g.sink][r]) {
          gone = true;
        }
      }
      if (!gone && cost_fwd[v].dist && cost_bwd[v].dist &&
          cost_kills(*cost_fwd[v].dist + *cost_bwd[v].dist)) {
        gone = true;
      }
      if (gone) node_dead[v] = true;
    }
    for (std::size_t id = 0; id < g.arcs.size(); ++id) {
      if (witness_arc_orig[state.work_to_orig[id]]) continue;
      const Arc& a = g.arcs[id];
      bool gone = false;
      for (int r = 0; r < rc && !gone; ++r) {
        if (!res_fwd[r][a.tail].dist || !res_bwd[r][a.head].dist) continue;
        if (*res_fwd[r][a.tail].dist + a.consumption[r] +
                *res_bwd[r][a.head].dist >
            g.window_hi[g.sink][r]) {
          gone = true;
        }
      }
      if (!gone && cost_fwd[a.tail].dist && cost_bwd[a.head].dist &&
          cost_kills(*cost_fwd[a.tail].dist + a.cost + *cost_bwd[a.head].dist)) {
        gone = true;
      }
      if (gone) arc_dead[id] = true;
    }
    bool any_dead = false;
    for (bool b : node_dead) any_dead = any_dead || b;
    for (bool b : arc_dead) any_dead = any_dead || b;
    if (any_dead) {
      state.apply_removals(arc_dead, node_dead);
      changed = true;
    }
  }
  return finish(PreBounds{lower, upper, witness});
}

}  // namespace rcsp
