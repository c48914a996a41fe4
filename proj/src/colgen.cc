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

#include "rcsp/colgen.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rcsp/labeling.h"
#include "rcsp/oracle.h"

namespace rcsp {
namespace {

// min c.x subject to A.x >= 1, x >= 0, solved as a dense revised simplex
// with Bland's rule over exact rationals. Columns 0..m-1 are artificials
// (identity, cost big), m..2m-1 surplus (-identity, cost 0), the rest are
// caller columns.
class CoveringLp {
 public:
  CoveringLp(int rows, Rat artificial_cost) : rows_(rows) {
    for (int i = 0; i < rows; ++i) {
      std::vector<Rat> unit(rows, Rat(0));
      unit[i] = 1;
      add_raw(unit, artificial_cost);
    }
    for (int i = 0; i < rows; ++i) {
      std::vector<Rat> unit(rows, Rat(0));
      unit[i] = -1;
      add_raw(unit, Rat(0));
    }
  }

  int add_column(const std::vector<Rat>& coeffs, const Rat& cost) {
    return add_raw(coeffs, cost);
  }

  void solve() {
    basis_.clear();
    binv_.assign(rows_, std::vector<Rat>(rows_, Rat(0)));
    xb_.assign(rows_, Rat(1));
    for (int i = 0; i < rows_; ++i) {
      basis_.push_back(i);
      binv_[i][i] = 1;
    }
    while (true) {
      std::vector<Rat> y = duals();
      int entering = -1;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        Rat reduced = costs_[j];
        for (int i = 0; i < rows_; ++i) reduced -= y[i] * cols_[j][i];
        if (reduced < 0) {
          entering = static_cast<int>(j);
          break;
        }
      }
      if (entering < 0) return;
      std::vector<Rat> d(rows_, Rat(0));
      for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < rows_; ++k) {
          d[i] += binv_[i][k] * cols_[entering][k];
        }
      }
      int leave = -1;
      for (int i = 0; i < rows_; ++i) {
        if (d[i] <= 0) continue;
        if (leave < 0 || xb_[i] * d[leave] < xb_[leave] * d[i] ||
            (xb_[i] * d[leave] == xb_[leave] * d[i] &&
             basis_[i] < basis_[leave])) {
          leave = i;
        }
      }
      if (leave < 0) {
        throw std::logic_error("covering relaxation is unbounded");
      }
      Rat pivot = d[leave];
      for (int k = 0; k < rows_; ++k) binv_[leave][k] /= pivot;
      xb_[leave] /= pivot;
      for (int i = 0; i < rows_; ++i) {
        if (i == leave || d[i] == 0) continue;
        for (int k = 0; k < rows_; ++k) {
          binv_[i][k] -= d[i] * binv_[leave][k];
        }
        xb_[i] -= d[i] * xb_[leave];
      }
      basis_[leave] = entering;
    }
  }

  std::vector<Rat> duals() const {
    std::vector<Rat> y(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < rows_; ++k) {
        y[k] += costs_[basis_[i]] * binv_[i][k];
      }
    }
    return y;
  }

  Rat objective() const {
    Rat z(0);
    for (int i = 0; i < rows_; ++i) z += costs_[basis_[i]] * xb_[i];
    return z;
  }

  bool artificial_free() const {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < rows_ && xb_[i] > 0) return false;
    }
    return true;
  }

  Rat primal_value(int column) const {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] == column) return xb_[i];
    }
    return Rat(0);
  }

 private:
  int add_raw(const std::vector<Rat>& coeffs, const Rat& cost) {
    cols_.push_back(coeffs);
    costs_.push_back(cost);
    return static_cast<int>(cols_.size()) - 1;
  }

  int rows_;
  std::vector<std::vector<Rat>> cols_;
  std::vector<Rat> costs_;
  std::vector<int> basis_;
  std::vector<std::vector<Rat>> binv_;
  std::vector<Rat> xb_;
};

void validate_tasks(const Instance& inst, const std::vector<int>& tasks) {
  validate_instance(inst);
  for (const Arc& a : inst.arcs) {
    if (a.cost < 0) {
      throw ValidationError("column generation expects nonnegative costs");
    }
  }
  std::set<int> seen;
  for (int t : tasks) {
    if (t < 0 || t >= inst.node_count) {
      throw ValidationError("task node out of range");
    }
    if (t == inst.source || t == inst.sink) {
      throw ValidationError("task nodes must be interior");
    }
    if (!seen.insert(t).second) {
      throw ValidationError("duplicate task node");
    }
  }
}

Rat artificial_cost(const Instance& inst) {
  Rat cmax(0);
  for (const Arc& a : inst.arcs) cmax = std::max(cmax, a.cost);
  return cmax * (inst.node_count - 1) + 1;
}

std::vector<Rat> coverage_row(const Instance& inst,
                              const std::vector<int>& tasks, const Path& p) {
  std::set<int> visited;
  for (int node : path_nodes(inst, p)) visited.insert(node);
  std::vector<Rat> row;
  row.reserve(tasks.size());
  for (int t : tasks) row.push_back(visited.count(t) ? Rat(1) : Rat(0));
  return row;
}

}  // namespace

ColgenResult column_generation(const Instance& inst,
                               const std::vector<int>& tasks, int k_columns,
                               int max_iterations) {
  validate_tasks(inst, tasks);
  if (k_columns < 1) throw ValidationError("k_columns must be positive");
  if (max_iterations < 1) {
    throw ValidationError("max_iterations must be positive");
  }

  ColgenResult result;
  if (tasks.empty()) {
    result.objective = 0;
    result.iterations = 1;
    result.converged = true;
    result.covering_feasible = true;
    result.certificate_ok = true;
    result.log.push_back(ColgenIterRow{1, Rat(0), 0, std::nullopt});
    return result;
  }

  const int m = static_cast<int>(tasks.size());
  CoveringLp master(m, artificial_cost(inst));
  std::vector<Path> pool;
  std::vector<int> pool_columns;
  std::set<std::vector<int>> pooled;

  auto price = [&](const std::vector<Rat>& y, int want) {
    Instance reduced = inst;
    for (Arc& a : reduced.arcs) {
      for (int t = 0; t < m; ++t) {
        if (a.head == tasks[t]) a.cost -= y[t];
      }
    }
    struct Offer {
      Rat reduced_cost;
      Path path;
    };
    std::vector<Offer> offers;
    for (const SinkLabel& lab : label_correcting(reduced, want).labels) {
      offers.push_back(Offer{lab.cost, lab.path});
    }
    std::sort(offers.begin(), offers.end(), [](const Offer& a,
                                               const Offer& b) {
      if (a.reduced_cost != b.reduced_cost) {
        return a.reduced_cost < b.reduced_cost;
      }
      return a.path.arcs < b.path.arcs;
    });
    return offers;
  };

  std::vector<Rat> y(m, Rat(0));
  while (result.iterations < max_iterations) {
    ++result.iterations;
    master.solve();
    y = master.duals();
    auto offers = price(y, k_columns);
    int added = 0;
    for (const auto& offer : offers) {
      if (added == k_columns || offer.reduced_cost >= 0) break;
      if (!pooled.insert(offer.path.arcs).second) continue;
      pool.push_back(offer.path);
      pool_columns.push_back(master.add_column(
          coverage_row(inst, tasks, offer.path),
          path_cost(inst, offer.path)));
      ++added;
    }
    ColgenIterRow row;
    row.iter = result.iterations;
    row.objective = master.objective();
    row.new_columns = added;
    if (!offers.empty()) row.min_reduced_cost = offers.front().reduced_cost;
    result.log.push_back(std::move(row));
    if (added == 0) {
      result.converged = true;
      break;
    }
  }

  result.objective = master.objective();
  result.covering_feasible = master.artificial_free();
  result.duals = y;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    result.columns.push_back(ColgenColumn{pool[i], path_cost(inst, pool[i]),
                                          master.primal_value(
                                              pool_columns[i])});
  }
  if (result.converged) {
    auto offers = price(y, 1);
    result.certificate_ok = offers.empty() || offers[0].reduced_cost >= 0;
  }
  return result;
}

std::optional<Rat> covering_lp_exact(const Instance& inst,
                                     const std::vector<int>& tasks,
                                     std::size_t cap) {
  validate_tasks(inst, tasks);
  if (tasks.empty()) return Rat(0);
  CoveringLp lp(static_cast<int>(tasks.size()), artificial_cost(inst));
  for (const PathRecord& rec : enumerate_all_paths(inst, cap)) {
    if (!rec.feasible) continue;
    lp.add_column(coverage_row(inst, tasks, rec.path), rec.cost);
  }
  lp.solve();
  if (!lp.artificial_free()) return std::nullopt;
  return lp.objective();
}

}  // namespace rcsp
