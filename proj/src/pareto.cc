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

#include "rcsp/pareto.h"

#include <algorithm>
#include <map>

#include "rcsp/oracle.h"

namespace rcsp {
namespace {

void validate_multicriteria(const Instance& inst,
                            const std::vector<Direction>& dirs) {
  validate_instance(inst);
  if (!is_acyclic(inst)) {
    throw ValidationError("multicriteria sweeps expect an acyclic instance");
  }
  if (dirs.size() != static_cast<std::size_t>(inst.resource_count + 1)) {
    throw ValidationError("one direction per criterion (cost + resources)");
  }
  for (const Arc& a : inst.arcs) {
    if (a.cost <= 0) {
      throw ValidationError("multicriteria values must be strictly positive");
    }
    for (const Rat& t : a.consumption) {
      if (t <= 0) {
        throw ValidationError(
            "multicriteria values must be strictly positive");
      }
    }
  }
}

Rat arc_value(const Arc& a, std::size_t k) {
  return k == 0 ? a.cost : a.consumption[k - 1];
}

// Additive criteria sums; windows and wait policy are out of scope here.
std::vector<Rat> path_values(const Instance& inst, const Path& p) {
  std::vector<Rat> v(inst.resource_count + 1, Rat(0));
  for (int id : p.arcs) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] += arc_value(inst.arcs[id], k);
    }
  }
  return v;
}

bool direction_dominates(const std::vector<Direction>& dirs,
                         const std::vector<Rat>& a,
                         const std::vector<Rat>& b) {
  bool strict = false;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (dirs[k] == Direction::kMin) {
      if (a[k] > b[k]) return false;
      if (a[k] < b[k]) strict = true;
    } else {
      if (a[k] < b[k]) return false;
      if (a[k] > b[k]) strict = true;
    }
  }
  return strict;
}

bool meets(const std::vector<Direction>& dirs, const std::vector<Rat>& v,
           const std::vector<Rat>& B) {
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (dirs[k] == Direction::kMin ? v[k] > B[k] : v[k] < B[k]) return false;
  }
  return true;
}

// One topological label sweep over per-arc value vectors (original or
// rounded). If `bounds` is set, minimized criteria prune mid-path and the
// sink keeps only meeting labels.
struct SweepLabel {
  std::vector<Rat> values;
  int parent = -1;
  int arc = -1;
};

std::vector<MLabel> direction_sweep(const Instance& inst,
                                    const std::vector<Direction>& dirs,
                                    const std::vector<std::vector<Rat>>& vals,
                                    const std::vector<Rat>* bounds) {
  const std::size_t kk = dirs.size();
  std::vector<SweepLabel> arena;
  std::vector<std::vector<int>> members(inst.node_count);
  std::vector<std::vector<int>> out_arcs(inst.node_count);
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    out_arcs[inst.arcs[id].tail].push_back(static_cast<int>(id));
  }

  auto insert = [&](int node, std::vector<Rat> vec, int parent, int arc) {
    auto& set = members[node];
    for (int id : set) {
      if (arena[id].values == vec) return;
    }
    for (int id : set) {
      if (direction_dominates(dirs, arena[id].values, vec)) return;
    }
    int new_id = static_cast<int>(arena.size());
    arena.push_back(SweepLabel{std::move(vec), parent, arc});
    std::vector<int> kept;
    for (int id : set) {
      if (!direction_dominates(dirs, arena[new_id].values, arena[id].values)) {
        kept.push_back(id);
      }
    }
    kept.push_back(new_id);
    set.swap(kept);
  };

  insert(inst.source, std::vector<Rat>(kk, Rat(0)), -1, -1);
  const std::vector<int> order = *topological_order(inst);
  for (int node : order) {
    std::vector<int> snapshot = members[node];
    for (int id : snapshot) {
      for (int arc_id : out_arcs[node]) {
        std::vector<Rat> ext(kk);
        bool ok = true;
        for (std::size_t k = 0; k < kk; ++k) {
          ext[k] = arena[id].values[k] + vals[arc_id][k];
          if (bounds && dirs[k] == Direction::kMin && ext[k] > (*bounds)[k]) {
            ok = false;
            break;
          }
        }
        if (ok) insert(inst.arcs[arc_id].head, std::move(ext), id, arc_id);
      }
    }
  }

  std::vector<MLabel> out;
  for (int id : members[inst.sink]) {
    if (bounds && !meets(dirs, arena[id].values, *bounds)) continue;
    MLabel lab;
    lab.values = arena[id].values;
    for (int cur = id; arena[cur].parent >= 0; cur = arena[cur].parent) {
      lab.path.arcs.push_back(arena[cur].arc);
    }
    std::reverse(lab.path.arcs.begin(), lab.path.arcs.end());
    out.push_back(std::move(lab));
  }
  return out;
}

std::vector<std::vector<Rat>> original_values(const Instance& inst) {
  std::vector<std::vector<Rat>> vals(inst.arcs.size());
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    vals[id].resize(inst.resource_count + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(inst.resource_count);
         ++k) {
      vals[id][k] = arc_value(inst.arcs[id], k);
    }
  }
  return vals;
}

// The sink's unconstrained nondominated set; meeting a bound vector is
// preserved under direction dominance, so scanning this set decides
// existence exactly.
std::vector<MLabel> exact_frontier(const Instance& inst,
                                   const std::vector<Direction>& dirs) {
  return direction_sweep(inst, dirs, original_values(inst), nullptr);
}

std::optional<MLabel> test_m_impl(const Instance& inst,
                                  const std::vector<Direction>& dirs,
                                  const std::vector<Rat>& B,
                                  const Rat& eps_max, const Rat& eps_min,
                                  const std::vector<MLabel>* cached_exact) {
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (dirs[k] == Direction::kMin && B[k] <= 0) return std::nullopt;
  }
  ScaledM sc = scale_m(inst, dirs, B, eps_max, eps_min);
  std::vector<std::vector<Rat>> vals(inst.arcs.size());
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    vals[id].assign(sc.arc_values[id].begin(), sc.arc_values[id].end());
  }
  std::vector<Rat> rounded_bounds(sc.bounds.begin(), sc.bounds.end());
  for (const MLabel& cand :
       direction_sweep(inst, dirs, vals, &rounded_bounds)) {
    std::vector<Rat> true_vals = path_values(inst, cand.path);
    if (meets(dirs, true_vals, B)) {
      return MLabel{std::move(true_vals), cand.path};
    }
  }
  // Rounding can hide a genuinely meeting path behind a near miss; settle it
  // exactly before answering NO.
  std::vector<MLabel> local;
  if (!cached_exact) {
    local = exact_frontier(inst, dirs);
    cached_exact = &local;
  }
  for (const MLabel& m : *cached_exact) {
    if (meets(dirs, m.values, B)) return m;
  }
  return std::nullopt;
}

Rat rational_eps_max(const Rat& eps) {
  Rat v = sqrt_below(1 + eps) - 1;  // (1+v)^2 <= 1+eps
  if (v <= 0) throw ValidationError("eps too small to grid");
  return v;
}

Rat rational_eps_min(const Rat& eps) {
  Rat v = 1 - sqrt_above(1 - eps);  // (1-v)^2 >= 1-eps
  if (v <= 0) throw ValidationError("eps too small to grid");
  return v;
}

}  // namespace

CriterionBounds criterion_bounds(const Instance& inst,
                                 const std::vector<Direction>& dirs) {
  validate_multicriteria(inst, dirs);
  CriterionBounds cb;
  cb.dirs = dirs;
  const std::size_t kk = dirs.size();
  std::vector<std::vector<int>> in_arcs(inst.node_count);
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    in_arcs[inst.arcs[id].head].push_back(static_cast<int>(id));
  }
  auto order = *topological_order(inst);
  for (std::size_t k = 0; k < kk; ++k) {
    std::vector<std::optional<Rat>> lo(inst.node_count), hi(inst.node_count);
    lo[inst.source] = Rat(0);
    hi[inst.source] = Rat(0);
    for (int v : order) {
      for (int id : in_arcs[v]) {
        const Arc& a = inst.arcs[id];
        if (!lo[a.tail]) continue;
        Rat cl = *lo[a.tail] + arc_value(a, k);
        Rat ch = *hi[a.tail] + arc_value(a, k);
        if (!lo[v] || cl < *lo[v]) lo[v] = cl;
        if (!hi[v] || ch > *hi[v]) hi[v] = ch;
      }
    }
    if (!lo[inst.sink]) {
      throw ValidationError("sink unreachable; criteria ranges undefined");
    }
    cb.cmin.push_back(*lo[inst.sink]);
    cb.cmaj.push_back(*hi[inst.sink]);
  }
  return cb;
}

Grid quadrillage(const CriterionBounds& cb, const Rat& eps_max,
                 const Rat& eps_min) {
  if (eps_max <= 0 || eps_min <= 0 || eps_min >= 1) {
    throw ValidationError("grid ratios need eps_max > 0 and eps_min in (0,1)");
  }
  Grid grid;
  grid.eps_max = eps_max;
  grid.eps_min = eps_min;
  for (std::size_t k = 0; k < cb.dirs.size(); ++k) {
    std::vector<Rat> levels;
    if (cb.dirs[k] == Direction::kMax) {
      Rat v = cb.cmin[k];
      levels.push_back(v);
      while (v < cb.cmaj[k]) {
        v *= 1 + eps_max;
        levels.push_back(v);
        if (levels.size() > 1000000) {
          throw ValidationError("grid is unreasonably fine");
        }
      }
    } else {
      Rat v = cb.cmaj[k];
      levels.push_back(v);
      while (v > cb.cmin[k]) {
        v *= 1 - eps_min;
        levels.push_back(v);
        if (levels.size() > 1000000) {
          throw ValidationError("grid is unreasonably fine");
        }
      }
    }
    grid.levels.push_back(std::move(levels));
  }
  return grid;
}

std::vector<MLabel> acyclic_m(const Instance& inst,
                              const std::vector<Direction>& dirs,
                              const std::vector<Rat>& B) {
  validate_multicriteria(inst, dirs);
  if (B.size() != dirs.size()) {
    throw ValidationError("one bound per criterion");
  }
  return direction_sweep(inst, dirs, original_values(inst), &B);
}

ScaledM scale_m(const Instance& inst, const std::vector<Direction>& dirs,
                const std::vector<Rat>& B, const Rat& eps_max,
                const Rat& eps_min) {
  validate_multicriteria(inst, dirs);
  if (B.size() != dirs.size()) {
    throw ValidationError("one bound per criterion");
  }
  if (eps_max <= 0 || eps_min <= 0 || eps_min >= 1) {
    throw ValidationError("scaling needs eps_max > 0 and eps_min in (0,1)");
  }
  for (const Rat& b : B) {
    if (b <= 0) throw ValidationError("scaling bounds must be positive");
  }
  const Rat n(inst.node_count);
  ScaledM sc;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    sc.bounds.push_back(dirs[k] == Direction::kMax
                            ? ceil_rat(n / eps_max)
                            : floor_rat(n / eps_min));
  }
  sc.arc_values.resize(inst.arcs.size());
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    sc.arc_values[id].resize(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      Rat exact = arc_value(inst.arcs[id], k) * n / B[k];
      if (dirs[k] == Direction::kMax) {
        sc.arc_values[id][k] = std::min(floor_rat(exact / eps_max),
                                        sc.bounds[k]);
      } else {
        sc.arc_values[id][k] = std::min(ceil_rat(exact / eps_min),
                                        sc.bounds[k]);
      }
    }
  }
  return sc;
}

std::optional<MLabel> test_m(const Instance& inst,
                             const std::vector<Direction>& dirs,
                             const std::vector<Rat>& B, const Rat& eps_max,
                             const Rat& eps_min) {
  validate_multicriteria(inst, dirs);
  if (B.size() != dirs.size()) {
    throw ValidationError("one bound per criterion");
  }
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (dirs[k] == Direction::kMax && B[k] <= 0) {
      throw ValidationError("maximized thresholds must be positive");
    }
  }
  return test_m_impl(inst, dirs, B, eps_max, eps_min, nullptr);
}

Frontier pareto_frontier_approx(const Instance& inst,
                                const std::vector<Direction>& dirs,
                                const Rat& eps) {
  validate_multicriteria(inst, dirs);
  if (eps <= 0 || eps >= 1) throw ValidationError("eps must lie in (0,1)");
  const Rat eps_max = rational_eps_max(eps);
  const Rat eps_min = rational_eps_min(eps);
  CriterionBounds cb = criterion_bounds(inst, dirs);
  Frontier frontier;
  frontier.grid = quadrillage(cb, eps_max, eps_min);
  const std::vector<MLabel> exact = exact_frontier(inst, dirs);

  std::vector<std::size_t> idx(dirs.size(), 0);
  bool done = false;
  while (!done) {
    std::vector<Rat> corner(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      corner[k] = frontier.grid.levels[k][idx[k]];
    }
    ++frontier.corners_probed;
    auto hit = test_m_impl(inst, dirs, corner, eps_max, eps_min, &exact);
    if (hit) {
      bool known = false;
      for (const MLabel& m : frontier.members) {
        if (m.values == hit->values) known = true;
      }
      if (!known) frontier.members.push_back(std::move(*hit));
    }
    // Odometer over the level tuples.
    std::size_t k = 0;
    while (k < dirs.size()) {
      if (++idx[k] < frontier.grid.levels[k].size()) break;
      idx[k] = 0;
      ++k;
    }
    done = k == dirs.size();
  }
  return frontier;
}

Frontier pareto_frontier_oracle(const Instance& inst,
                                const std::vector<Direction>& dirs,
                                const Rat& eps, std::size_t cap) {
  validate_multicriteria(inst, dirs);
  if (eps <= 0 || eps >= 1) throw ValidationError("eps must lie in (0,1)");
  CriterionBounds cb = criterion_bounds(inst, dirs);
  Frontier frontier;
  frontier.grid = quadrillage(cb, eps, eps);

  std::map<std::vector<int>, bool> seen;
  for (const PathRecord& rec : enumerate_all_paths(inst, cap)) {
    std::vector<Rat> v = path_values(inst, rec.path);
    std::vector<int> cube(dirs.size(), 0);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto& levels = frontier.grid.levels[k];
      for (std::size_t i = 0; i < levels.size(); ++i) {
        bool inside = dirs[k] == Direction::kMax ? levels[i] <= v[k]
                                                 : levels[i] >= v[k];
        if (inside) cube[k] = static_cast<int>(i);
      }
    }
    if (!seen.emplace(cube, true).second) continue;
    frontier.members.push_back(MLabel{std::move(v), rec.path});
  }
  frontier.corners_probed = static_cast<long long>(seen.size());
  return frontier;
}

BridgeReport epsilon_feasibility_report(
    const Instance& inst, const std::vector<Direction>& dirs,
    const Frontier& frontier, const std::vector<std::optional<Rat>>& budgets,
    const Rat& eps) {
  validate_multicriteria(inst, dirs);
  for (Direction d : dirs) {
    if (d != Direction::kMin) {
      throw ValidationError(
          "the feasibility bridge covers all-minimize criteria");
    }
  }
  if (budgets.size() != dirs.size()) {
    throw ValidationError("one (optional) budget per criterion");
  }
  if (eps <= 0 || eps >= 1) throw ValidationError("eps must lie in (0,1)");

  BridgeReport report;
  report.max_factor = 0;
  for (const PathRecord& rec : enumerate_all_paths(inst, 200000)) {
    std::vector<Rat> v = path_values(inst, rec.path);
    bool within = true;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      if (budgets[k] && v[k] > *budgets[k]) within = false;
    }
    if (!within) continue;
    BridgeRow row;
    row.path_values = v;
    row.factor = 0;
    for (const MLabel& m : frontier.members) {
      bool covers = true;
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        if (v[k] < (1 - eps) * m.values[k]) covers = false;
      }
      if (!covers) continue;
      Rat factor = 0;
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        if (budgets[k] && *budgets[k] > 0) {
          factor = std::max(factor, Rat(m.values[k] / *budgets[k]));
        }
      }
      if (!row.covered || factor < row.factor) {
        row.covered = true;
        row.factor = factor;
        row.rep_values = m.values;
      }
    }
    if (!row.covered) report.all_covered = false;
    report.max_factor = std::max(report.max_factor, row.factor);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace rcsp
