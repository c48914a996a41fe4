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

#ifndef RCSP_PREPROCESS_H_
#define RCSP_PREPROCESS_H_

#include <optional>
#include <variant>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

struct ReductionReport {
  Instance reduced;               // kWindows, tightened; removed parts gone
  std::vector<int> removed_nodes;  // 0-based ids, ascending
  std::vector<int> removed_arcs;   // arc indices of the input, ascending
  int iterations = 0;
  bool infeasible = false;
};

// Iterated window tightening: arrival bounds forward, departure bounds
// backward, empty-window node deletion, and (NO_WAIT only) the dead-arc rule
// b_i + t < a_j. Runs to a fixpoint, so a second application is a no-op.
// Never changes the set of feasible source-to-sink paths. max_iterations == 0
// selects the n*R*64 safeguard.
ReductionReport reduce_windows(const Instance& inst, int max_iterations = 0);

enum class TreeMetric { kCost, kResource };
enum class TreeDirection { kFromSource, kIntoSink };

struct TreeEntry {
  std::optional<Rat> dist;  // empty when unreachable
  int via_arc = -1;  // arc into the node (kFromSource) / out of it (kIntoSink)
};

// One-metric shortest path tree, windows ignored. Bellman-Ford, so negative
// costs are fine; a reachable negative cost cycle throws.
std::vector<TreeEntry> shortest_path_tree(const Instance& inst,
                                          TreeMetric metric, int resource,
                                          TreeDirection direction);

struct PreInfeasible {};

struct PreOptimal {
  Rat cost;
  Path path;
};

struct PreBounds {
  Rat lower;
  Rat upper;
  // Feasible path of cost `upper`; absent only when no feasible path was
  // discovered (upper then still carries the a-priori bound).
  std::optional<Path> witness;
};

using PreOutcome = std::variant<PreInfeasible, PreOptimal, PreBounds>;

struct PreResult {
  PreOutcome outcome;
  Instance pruned;
  std::vector<int> removed_nodes;
  std::vector<int> removed_arcs;
  int iterations = 0;
};

// Bound tightening for FINAL acyclic instances: per-iteration shortest path
// trees in every metric and both directions, lower bound from the cost tree,
// upper bound from feasible resource-optimal paths and prefix+arc+suffix
// recombinations, then node/arc elimination against the resource budgets
// (strict) and the cost bound (>= upper, or > upper when strict_mode).
// Elements of the stored witness are never eliminated, which is what keeps
// one optimal path alive in non-strict mode.
PreResult pretraitement(const Instance& inst, bool strict_mode = false);

}  // namespace rcsp

#endif  // RCSP_PREPROCESS_H_
