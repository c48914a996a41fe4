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

#ifndef RCSP_INSTANCE_H_
#define RCSP_INSTANCE_H_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcsp/rational.h"

namespace rcsp {

// FINAL: only sink budgets are given; every node implicitly carries [0, b_t].
// WINDOWS: per-node intervals [a_i, b_i].
enum class ConstraintKind { kFinal, kWindows };

// WAIT: consumption may idle up to the lower bound before traversing an arc,
// T' = max(a_j, T + t_ij). NO_WAIT: plain sums, arriving below a_j is
// infeasible.
enum class WaitPolicy { kWait, kNoWait };

struct Arc {
  int tail = 0;
  int head = 0;
  Rat cost;
  std::vector<Rat> consumption;  // size = resource_count, each >= 0
};

struct Instance {
  int node_count = 0;
  int resource_count = 0;
  int source = 0;  // 0-based internally; the file format is 1-based
  int sink = 0;
  ConstraintKind kind = ConstraintKind::kWindows;
  WaitPolicy wait = WaitPolicy::kNoWait;
  std::vector<Arc> arcs;
  // Always materialized, node_count x resource_count. For kFinal these hold
  // [0, b_t^r] at every node, so algorithms never branch on the kind.
  std::vector<std::vector<Rat>> window_lo;
  std::vector<std::vector<Rat>> window_hi;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Structural checks: id ranges, dimension agreement, nonnegative
// consumptions, nonempty windows. Throws ValidationError.
void validate_instance(const Instance& inst);

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Rewrites a FINAL instance as an explicit-WINDOWS one ([0, b_t] everywhere).
// Calling it on a WINDOWS instance returns the input unchanged and sets
// *warned when provided.
Instance final_to_windows(const Instance& inst, bool* warned = nullptr);

// A path is a sequence of arc indices, chained tail-to-head starting at the
// instance source. Empty means the trivial path at the source.
struct Path {
  std::vector<int> arcs;
  bool operator==(const Path& other) const { return arcs == other.arcs; }
};

// Visited nodes, length arcs+1 (throws if the chaining is broken).
std::vector<int> path_nodes(const Instance& inst, const Path& p);
Rat path_cost(const Instance& inst, const Path& p);

// Arrival value of resource r at the last node of p under the instance's
// wait policy (WAIT clamps to lower bounds along the way).
Rat path_consumption(const Instance& inst, const Path& p, int r);
std::vector<Rat> path_consumption_vec(const Instance& inst, const Path& p);

// Window test at every visited node under the wait policy. The path does not
// have to reach the sink; prefixes are accepted as-is.
bool is_feasible(const Instance& inst, const Path& p);

// Nodes in dependency order, or nullopt when the arc set has a cycle.
std::optional<std::vector<int>> topological_order(const Instance& inst);
bool is_acyclic(const Instance& inst);

}  // namespace rcsp

#endif  // RCSP_INSTANCE_H_
