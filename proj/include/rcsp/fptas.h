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

#ifndef RCSP_FPTAS_H_
#define RCSP_FPTAS_H_

#include <optional>
#include <variant>
#include <vector>

#include "rcsp/instance.h"

namespace rcsp {

// The approximation pipeline works on acyclic single-resource FINAL
// instances whose costs are strictly positive integers; every entry point
// validates that.

struct DpInfeasible {};
struct DpSolved {
  BigInt cost;
  Path path;
};
using DpOutcome = std::variant<DpInfeasible, DpSolved>;

// Cost-indexed dynamic program: g_j(c) = least consumption over paths into j
// of cost at most c, with parent pointers. Stops at the first c where the
// sink meets its budget; reaching C_max*(n-1)+1 without that proves
// infeasibility.
DpOutcome exact_cost_dp(const Instance& inst);

struct ScaledInstance {
  Instance scaled;               // costs replaced by floor(c(n-1)/(delta B))
  std::vector<int> kept_arcs;    // scaled arc index -> input arc index
  std::vector<int> dropped_arcs;  // input arcs with cost > B
};

// Cost rounding for the test horizon; delta must lie in (0, n].
ScaledInstance scale(const Instance& inst, const Rat& B, const Rat& delta);

struct TestYes {};  // every feasible path costs more than B
struct TestNo {     // an explicit feasible path below (1+delta)B
  Path path;
  Rat cost;
};
using TestResult = std::variant<TestYes, TestNo>;

// Approximate threshold test at B: DP on the scaled instance up to
// floor((n-1)/delta) rounded cost units.
TestResult approx_test(const Instance& inst, const Rat& B, const Rat& delta);

struct Bounds {
  Rat lower;
  Rat upper;
  Path witness;  // feasible, cost == upper
};

// Arc-prefix bisection over the cost-sorted arc list; the smallest prefix
// whose minimum-consumption path fits the budget gives both bounds
// (upper <= n * lower). nullopt when even the full graph cannot fit.
std::optional<Bounds> bounds_lorenz_raz(const Instance& inst);

struct DichoResult {
  Rat lower;
  Rat upper;
  int iterations = 0;
  // Cheapest feasible path seen (the input witness or a TEST counterexample).
  Path best_path;
  Rat best_cost;
};

// Bound contraction through approx_test until upper <= rho * lower.
DichoResult dicho(const Instance& inst, const Bounds& bounds, const Rat& rho);

// Iteration budget the contraction provably respects for a starting ratio.
int dicho_iteration_bound(double ratio0);

struct FptasSolution {
  Path path;
  Rat cost;
  Rat lower;               // final bounds around the optimum
  Rat upper;
  int dicho_iterations = 0;
  bool optimal_early = false;  // bounds met before any scaling happened
};

// Full scheme: bounds, contraction to ratio rho, then one exact DP on costs
// rounded at eps * lower. Guarantees cost <= (1 + eps) * optimum. nullopt
// when infeasible.
std::optional<FptasSolution> fptas_solve(const Instance& inst, const Rat& eps,
                                         const Rat& rho = Rat(2));

}  // namespace rcsp

#endif  // RCSP_FPTAS_H_
