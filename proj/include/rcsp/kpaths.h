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

#ifndef RCSP_KPATHS_H_
#define RCSP_KPATHS_H_

#include <optional>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

struct RankedPath {
  Path path;
  Rat cost;
};

// The k cheapest source-sink paths of an acyclic instance in nondecreasing
// cost order, ties broken by the lexicographic node sequence. Resource
// constraints are ignored at this stage. Returns fewer than k entries when
// the instance has fewer paths.
std::vector<RankedPath> k_shortest_paths(const Instance& inst, int k);

struct RankedFeasible {
  Path path;
  Rat cost;
  int rank = 0;  // 1-based position in the ranked enumeration
};

// Walks the ranked enumeration and returns the first resource-feasible path,
// or nullopt if none shows up within the first k_max paths.
std::optional<RankedFeasible> first_feasible_by_rank(const Instance& inst,
                                                     int k_max);

}  // namespace rcsp

#endif  // RCSP_KPATHS_H_
