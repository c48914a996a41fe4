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

#ifndef RCSP_PARETO_H_
#define RCSP_PARETO_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

// The multicriteria view of an instance: criterion 0 is the arc cost,
// criterion 1+r is resource r, all treated as additive path sums (windows
// play no role here). Every arc value must be strictly positive and the
// graph acyclic; the module entry points validate both.

enum class Direction { kMin, kMax };

struct CriterionBounds {
  std::vector<Direction> dirs;  // size resource_count + 1
  std::vector<Rat> cmin;        // least path sum per criterion
  std::vector<Rat> cmaj;        // greatest path sum per criterion
};

CriterionBounds criterion_bounds(const Instance& inst,
                                 const std::vector<Direction>& dirs);

// Geometric level grid: maximized criteria climb from cmin by (1+eps_max),
// minimized ones descend from cmaj by (1-eps_min), until the far bound is
// passed. levels[r].size() == H_r + 1.
struct Grid {
  std::vector<std::vector<Rat>> levels;
  Rat eps_max;
  Rat eps_min;
};

Grid quadrillage(const CriterionBounds& cb, const Rat& eps_max,
                 const Rat& eps_min);

struct MLabel {
  std::vector<Rat> values;
  Path path;
};

// Exact direction-aware label sweep. Minimized criteria are pruned against
// B mid-path; the sink keeps labels meeting B on every criterion (<= for
// MIN, >= for MAX).
std::vector<MLabel> acyclic_m(const Instance& inst,
                              const std::vector<Direction>& dirs,
                              const std::vector<Rat>& B);

// Rounded arc values and test bounds for the approximate threshold test.
struct ScaledM {
  std::vector<std::vector<BigInt>> arc_values;  // [arc][criterion]
  std::vector<BigInt> bounds;                   // per criterion
};

ScaledM scale_m(const Instance& inst, const std::vector<Direction>& dirs,
                const std::vector<Rat>& B, const Rat& eps_max,
                const Rat& eps_min);

// Does some path meet B on every criterion? The scaled sweep answers fast;
// every candidate is re-checked against B on original values, and a miss
// falls back to the exact sweep, so YES comes with a genuinely meeting path
// and NO is certain.
std::optional<MLabel> test_m(const Instance& inst,
                             const std::vector<Direction>& dirs,
                             const std::vector<Rat>& B, const Rat& eps_max,
                             const Rat& eps_min);

struct Frontier {
  std::vector<MLabel> members;  // distinct value vectors, discovery order
  long long corners_probed = 0;
  Grid grid;
};

// Probes test_m at every grid corner built from eps_max = sqrt(1+eps)-1 and
// eps_min = 1-sqrt(1-eps); the YES paths cover every path value within a
// (1+eps) / (1-eps) factor per criterion.
Frontier pareto_frontier_approx(const Instance& inst,
                                const std::vector<Direction>& dirs,
                                const Rat& eps);

// Reference construction by exhaustive enumeration: one representative per
// nonempty grid hypercube, grid built directly at (eps, eps).
Frontier pareto_frontier_oracle(const Instance& inst,
                                const std::vector<Direction>& dirs,
                                const Rat& eps, std::size_t cap);

struct BridgeRow {
  std::vector<Rat> path_values;
  std::vector<Rat> rep_values;  // empty when uncovered
  Rat factor;                   // max over budgeted criteria of rep/budget
  bool covered = false;
};

struct BridgeReport {
  std::vector<BridgeRow> rows;  // one per budget-feasible path
  Rat max_factor;
  bool all_covered = true;
};

// Budget-feasibility bridge for all-minimize criteria: each path within the
// given budgets gets the covering frontier member of least budget factor;
// that factor never exceeds 1/(1-eps) when the frontier came from
// pareto_frontier_approx(eps). Criteria without a budget entry (usually the
// cost) are exempt from the factor.
BridgeReport epsilon_feasibility_report(
    const Instance& inst, const std::vector<Direction>& dirs,
    const Frontier& frontier, const std::vector<std::optional<Rat>>& budgets,
    const Rat& eps);

}  // namespace rcsp

#endif  // RCSP_PARETO_H_
