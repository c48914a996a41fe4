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

#ifndef RCSP_GENERATOR_H_
#define RCSP_GENERATOR_H_

#include <cstdint>

#include "rcsp/instance.h"

namespace rcsp {

// Seeded DAG generator. Nodes are 1..n with arcs only from lower to higher
// ids, source 1 and sink n; a random increasing chain is added when the sink
// is not reachable, so at least one path always exists. Identical spec values
// give byte-identical instances on every platform (raw mt19937_64 draws, no
// distribution objects).
struct GenSpec {
  std::uint64_t seed = 1;
  int n = 8;
  double arc_density = 0.5;      // probability of each forward arc
  int resource_count = 1;
  long long cost_lo = 1;
  long long cost_hi = 10;
  long long consumption_lo = 0;
  long long consumption_hi = 10;
  ConstraintKind kind = ConstraintKind::kFinal;
  bool tight = false;            // tight windows/budgets vs. loose ones
  WaitPolicy wait = WaitPolicy::kNoWait;
};

Instance random_instance(const GenSpec& spec);

// Complete DAG on n nodes engineered so every one of the 2^(n-2) paths ends
// in a pairwise incomparable (cost, consumption) sink label: costs mix a
// huge per-skipped-node term with a subset-identifying power of two, and the
// single resource runs counter to the cost. The budget admits everything.
Instance exponential_instance(int n);

}  // namespace rcsp

#endif  // RCSP_GENERATOR_H_
