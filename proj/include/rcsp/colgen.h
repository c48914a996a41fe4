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

#ifndef RCSP_COLGEN_H_
#define RCSP_COLGEN_H_

#include <optional>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

struct ColgenColumn {
  Path path;
  Rat cost;
  Rat value;  // primal weight in the final master solution
};

struct ColgenIterRow {
  int iter = 0;       // 1-based master solve index
  Rat objective;      // restricted master optimum at this iteration
  int new_columns = 0;
  std::optional<Rat> min_reduced_cost;  // cheapest column priced this round
};

struct ColgenResult {
  Rat objective;
  int iterations = 0;        // master solves, including the converging one
  bool converged = false;    // pricing found no improving column in time
  bool covering_feasible = false;  // no artificial stayed in the basis
  bool certificate_ok = false;     // exact re-pricing confirms optimality
  std::vector<Rat> duals;          // one multiplier per task
  std::vector<ColgenColumn> columns;
  std::vector<ColgenIterRow> log;  // one row per master solve
};

// Solves the linear relaxation of "cover every task node by resource
// feasible paths at minimum total cost" by column generation: a dense
// rational simplex on the restricted master, resource-constrained pricing
// for columns of negative reduced cost. Arc costs must be nonnegative so
// the covering relaxation is bounded. Up to k_columns columns join the pool
// per round.
ColgenResult column_generation(const Instance& inst,
                               const std::vector<int>& tasks,
                               int k_columns = 1, int max_iterations = 200);

// Reference value: the same relaxation solved in one shot over every
// feasible path (enumeration capped at cap). nullopt when some task cannot
// be covered by any feasible path.
std::optional<Rat> covering_lp_exact(const Instance& inst,
                                     const std::vector<int>& tasks,
                                     std::size_t cap = 200000);

}  // namespace rcsp

#endif  // RCSP_COLGEN_H_
