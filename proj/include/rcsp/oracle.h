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

#ifndef RCSP_ORACLE_H_
#define RCSP_ORACLE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

struct PathRecord {
  Path path;
  Rat cost;
  std::vector<Rat> consumption;  // arrival values at the sink
  bool feasible = false;
};

class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(std::size_t cap)
      : std::runtime_error("path enumeration exceeded cap of " +
                           std::to_string(cap)) {}
};

// Exhaustive DFS over simple source-to-sink paths, in lexicographic arc-id
// order. More than `cap` paths raises EnumerationCapError; the try_ variant
// reports the overflow as nullopt instead.
std::vector<PathRecord> enumerate_all_paths(const Instance& inst,
                                            std::size_t cap);
std::optional<std::vector<PathRecord>> try_enumerate_all_paths(
    const Instance& inst, std::size_t cap);

}  // namespace rcsp

#endif  // RCSP_ORACLE_H_
