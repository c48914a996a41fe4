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

#ifndef RCSP_LABELING_H_
#define RCSP_LABELING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

// Componentwise <= with at least one strict coordinate.
bool dominates(const std::vector<Rat>& a, const std::vector<Rat>& b);

// k-dominance retention: drop duplicates (first stays), then keep vectors
// dominated by fewer than k of the remaining ones. Returns indices into the
// input, in input order.
std::vector<std::size_t> pareto_filter_indices(
    const std::vector<std::vector<Rat>>& vectors, int k);
std::vector<std::vector<Rat>> pareto_filter(
    const std::vector<std::vector<Rat>>& vectors, int k);

struct SinkLabel {
  Rat cost;
  std::vector<Rat> consumption;
  Path path;
};

struct LabelRunStats {
  std::size_t labels_created = 0;  // arena size, evicted ones included
  std::size_t labels_alive = 0;    // retained across all nodes at the end
  std::size_t sweeps = 0;          // queue pops / heap pops / nodes visited
};

struct LabelingResult {
  std::vector<SinkLabel> labels;  // k-dominance frontier at the sink
  LabelRunStats stats;
};

// FIFO node-queue label correcting. Handles cycles as long as every cycle
// consumes something (the all-zero-consumption subgraph must be acyclic).
LabelingResult label_correcting(const Instance& inst, int k = 1);

// Lexicographic-minimum extraction; labels leave the heap settled. Requires
// nonnegative arc costs.
LabelingResult label_setting(const Instance& inst, int k = 1);

// Single topological sweep; rejects cyclic instances.
LabelingResult acyclic_labeling(const Instance& inst, int k = 1);

enum class LabelAlgo { kCorrection, kFixation, kAcyclic };

struct Optimum {
  Rat cost;
  std::vector<Rat> consumption;
  Path path;
};

// Min-cost feasible path, or nullopt when no feasible path exists.
std::optional<Optimum> solve_exact(const Instance& inst,
                                   LabelAlgo algo = LabelAlgo::kCorrection);

}  // namespace rcsp

#endif  // RCSP_LABELING_H_
