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

#include "rcsp/fptas.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rcsp/preprocess.h"

namespace rcsp {
namespace {

constexpr long long kLayerCap = 10'000'000;

void validate_pipeline_instance(const Instance& inst, bool need_acyclic) {
  validate_instance(inst);
  if (inst.kind != ConstraintKind::kFinal) {
    throw ValidationError("cost scaling expects a FINAL-mode instance");
  }
  if (inst.resource_count != 1) {
    throw ValidationError("cost scaling expects exactly one resource");
  }
  for (const Arc& a : inst.arcs) {
    if (boost::multiprecision::denominator(a.cost) != 1 || a.cost < 1) {
      throw ValidationError("costs must be strictly positive integers");
    }
  }
  if (need_acyclic && !is_acyclic(inst)) {
    throw ValidationError("cost scaling expects an acyclic instance");
  }
}

long long to_layer_count(const BigInt& v) {
  if (v > kLayerCap) {
    throw ValidationError("cost horizon too large for the layered DP");
  }
  return v.convert_to<long long>();
}

struct CoreCell {
  std::optional<Rat> cons;
  int via_arc = -1;  // -1: copied from the previous layer
};

struct CoreHit {
  long long cost = 0;
  std::vector<int> arcs;
};

// g_j(c) = min consumption into j at (integer, possibly zero) rounded cost
// <= c. Zero-cost arcs resolve inside a layer because nodes go in
// topological order. Returns the first layer where the sink fits its budget.
std::optional<CoreHit> cost_dp_core(const Instance& g, long long horizon) {
  auto order = topological_order(g);
  if (!order) throw ValidationError("layered DP needs an acyclic instance");
  const int n = g.node_count;
  const Rat budget = g.window_hi[g.sink][0];
  std::vector<std::vector<int>> in_arcs(n);
  std::vector<long long> step(g.arcs.size());
  for (std::size_t id = 0; id < g.arcs.size(); ++id) {
    BigInt c = boost::multiprecision::numerator(g.arcs[id].cost);
    step[id] = c > horizon ? horizon + 1 : c.convert_to<long long>();
    in_arcs[g.arcs[id].head].push_back(static_cast<int>(id));
  }

  std::vector<std::vector<CoreCell>> layers;
  for (long long c = 0; c <= horizon; ++c) {
    layers.emplace_back(n);
    auto& layer = layers.back();
    for (int v : *order) {
      std::optional<Rat> best;
      int via = -1;
      if (c == 0) {
        if (v == g.source) best = Rat(0);
      } else if (layers[c - 1][v].cons) {
        best = layers[c - 1][v].cons;
      }
      for (int id : in_arcs[v]) {
        if (step[id] > c) continue;
        const CoreCell& from = layers[c - step[id]][g.arcs[id].tail];
        if (!from.cons) continue;
        Rat cand = *from.cons + g.arcs[id].consumption[0];
        if (!best || cand < *best) {
          best = cand;
          via = id;
        }
      }
      layer[v].cons = std::move(best);
      layer[v].via_arc = via;
    }
    if (layer[g.sink].cons && *layer[g.sink].cons <= budget) {
      CoreHit hit;
      hit.cost = c;
      int v = g.sink;
      long long at = c;
      while (!(v == g.source && at == 0)) {
        const CoreCell& cell = layers[at][v];
        if (cell.via_arc < 0) {
          --at;  // the value was inherited from the cheaper layer
        } else {
          hit.arcs.push_back(cell.via_arc);
          at -= step[cell.via_arc];
          v = g.arcs[cell.via_arc].tail;
        }
      }
      std::reverse(hit.arcs.begin(), hit.arcs.end());
      return hit;
    }
  }
  return std::nullopt;
}

BigInt max_cost(const Instance& inst) {
  BigInt c = 0;
  for (const Arc& a : inst.arcs) {
    c = std::max(c, boost::multiprecision::numerator(a.cost));
  }
  return c;
}

}  // namespace

DpOutcome exact_cost_dp(const Instance& inst) {
  validate_pipeline_instance(inst, /*need_acyclic=*/true);
  const BigInt u0 = max_cost(inst) * (inst.node_count - 1) + 1;
  auto hit = cost_dp_core(inst, to_layer_count(u0 - 1));
  if (!hit) return DpInfeasible{};
  Path p{std::move(hit->arcs)};
  return DpSolved{BigInt(hit->cost), std::move(p)};
}

ScaledInstance scale(const Instance& inst, const Rat& B, const Rat& delta) {
  validate_pipeline_instance(inst, /*need_acyclic=*/false);
  if (B <= 0) throw ValidationError("scale threshold must be positive");
  if (delta <= 0 || delta > inst.node_count) {
    throw ValidationError("delta must lie in (0, n]");
  }
  ScaledInstance out;
  out.scaled = inst;
  out.scaled.arcs.clear();
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    const Arc& a = inst.arcs[id];
    if (a.cost > B) {
      out.dropped_arcs.push_back(static_cast<int>(id));
      continue;
    }
    Arc s = a;
    s.cost = Rat(floor_rat(a.cost * (inst.node_count - 1) / (delta * B)));
    out.scaled.arcs.push_back(std::move(s));
    out.kept_arcs.push_back(static_cast<int>(id));
  }
  return out;
}

TestResult approx_test(const Instance& inst, const Rat& B, const Rat& delta) {
  validate_pipeline_instance(inst, /*need_acyclic=*/true);
  ScaledInstance sc = scale(inst, B, delta);
  BigInt horizon = floor_rat(Rat(inst.node_count - 1) / delta);
  auto hit = cost_dp_core(sc.scaled, to_layer_count(horizon));
  if (!hit) return TestYes{};
  TestNo no;
  for (int id : hit->arcs) no.path.arcs.push_back(sc.kept_arcs[id]);
  no.cost = path_cost(inst, no.path);
  return no;
}

std::optional<Bounds> bounds_lorenz_raz(const Instance& inst) {
  validate_pipeline_instance(inst, /*need_acyclic=*/false);
  const Rat budget = inst.window_hi[inst.sink][0];
  if (inst.source == inst.sink) {
    return Bounds{Rat(0), Rat(0), Path{}};
  }

  std::vector<int> by_cost(inst.arcs.size());
  std::iota(by_cost.begin(), by_cost.end(), 0);
  std::stable_sort(by_cost.begin(), by_cost.end(), [&](int a, int b) {
    return inst.arcs[a].cost < inst.arcs[b].cost;
  });

  // Minimum-consumption path using only the cheapest `count` arcs; nullopt
  // when the sink is out of reach or over budget there.
  auto probe = [&](std::size_t count) -> std::optional<Path> {
    Instance g = inst;
    g.arcs.clear();
    std::vector<int> back;
    for (std::size_t i = 0; i < count; ++i) {
      g.arcs.push_back(inst.arcs[by_cost[i]]);
      back.push_back(by_cost[i]);
    }
    auto tree = shortest_path_tree(g, TreeMetric::kResource, 0,
                                   TreeDirection::kFromSource);
    if (!tree[g.sink].dist || *tree[g.sink].dist > budget) return std::nullopt;
    Path p;
    int cur = g.sink;
    while (tree[cur].via_arc >= 0) {
      p.arcs.push_back(back[tree[cur].via_arc]);
      cur = g.arcs[tree[cur].via_arc].tail;
    }
    std::reverse(p.arcs.begin(), p.arcs.end());
    return p;
  };

  if (!probe(inst.arcs.size())) return std::nullopt;
  std::size_t lo = 0, hi = inst.arcs.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Path witness = *probe(hi);
  return Bounds{inst.arcs[by_cost[hi - 1]].cost, path_cost(inst, witness),
                std::move(witness)};
}

int dicho_iteration_bound(double ratio0) {
  double l2 = std::log2(ratio0);
  if (!(l2 > 1.0)) return 1;
  return static_cast<int>(std::ceil(std::log(l2) / std::log(8.0 / 7.0))) + 1;
}

DichoResult dicho(const Instance& inst, const Bounds& bounds, const Rat& rho) {
  validate_pipeline_instance(inst, /*need_acyclic=*/true);
  if (rho <= 1) throw ValidationError("contraction ratio must exceed 1");
  if (bounds.lower <= 0 || bounds.upper < bounds.lower) {
    throw ValidationError("bad starting bounds");
  }
  DichoResult res;
  res.lower = bounds.lower;
  res.upper = bounds.upper;
  res.best_path = bounds.witness;
  res.best_cost = path_cost(inst, bounds.witness);
  const Rat n(inst.node_count);

  while (res.upper > rho * res.lower) {
    if (++res.iterations > 500) {
      throw ValidationError("bound contraction failed to make progress");
    }
    const Rat ratio = res.upper / res.lower;
    // Towers a_i = 2^(2^i); pick the first one above the ratio.
    std::vector<Rat> towers{Rat(2)};
    while (towers.back() <= ratio) towers.push_back(towers.back() * towers.back());
    const std::size_t i = towers.size() - 1;

    Rat delta, B;
    if (i >= 3) {
      delta = towers[i - 2] - 1;
      if (delta > n) delta = n;
      B = res.lower * towers[i - 3];
    } else {
      delta = sqrt_below(ratio) - 1;
      if (delta <= 0) delta = (ratio - 1) / 2;
      if (delta > n) delta = n;
      B = sqrt_below(res.lower * res.upper / (1 + delta));
    }
    // The irrational ideals get replaced by nearby rationals; nudge back
    // inside (lower, upper/(1+delta)) so both answers strictly shrink.
    if (B <= res.lower || B * (1 + delta) >= res.upper) {
      B = (res.lower + res.upper / (1 + delta)) / 2;
    }

    TestResult t = approx_test(inst, B, delta);
    if (std::holds_alternative<TestYes>(t)) {
      res.lower = B;
    } else {
      const TestNo& no = std::get<TestNo>(t);
      res.upper = B * (1 + delta);
      if (no.cost < res.best_cost) {
        res.best_cost = no.cost;
        res.best_path = no.path;
      }
    }
  }
  return res;
}

std::optional<FptasSolution> fptas_solve(const Instance& inst, const Rat& eps,
                                         const Rat& rho) {
  validate_pipeline_instance(inst, /*need_acyclic=*/true);
  if (eps <= 0) throw ValidationError("eps must be positive");
  if (rho <= 1) throw ValidationError("rho must exceed 1");

  auto bounds = bounds_lorenz_raz(inst);
  if (!bounds) return std::nullopt;
  if (bounds->lower == bounds->upper) {
    return FptasSolution{bounds->witness, bounds->upper, bounds->lower,
                         bounds->upper, 0, true};
  }

  DichoResult d = dicho(inst, *bounds, rho);
  if (d.lower == d.upper) {
    return FptasSolution{d.best_path, d.best_cost, d.lower, d.upper,
                         d.iterations, true};
  }

  // One exact run on costs rounded at eps * lower. Arcs above the refined
  // upper bound cannot sit on an optimal path, so only those are dropped;
  // rounding error stays below eps * lower <= eps * OPT.
  const Rat unit = eps * d.lower;
  Instance g = inst;
  g.arcs.clear();
  std::vector<int> back;
  for (std::size_t id = 0; id < inst.arcs.size(); ++id) {
    if (inst.arcs[id].cost > d.upper) continue;
    Arc a = inst.arcs[id];
    a.cost = Rat(floor_rat(a.cost * (inst.node_count - 1) / unit));
    g.arcs.push_back(std::move(a));
    back.push_back(static_cast<int>(id));
  }
  BigInt best_scaled = 0;
  {
    std::vector<bool> kept(inst.arcs.size(), false);
    std::vector<BigInt> scaled_of(inst.arcs.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      kept[back[i]] = true;
      scaled_of[back[i]] = boost::multiprecision::numerator(g.arcs[i].cost);
    }
    for (int id : d.best_path.arcs) {
      if (!kept[id]) throw ValidationError("witness arc above upper bound");
      best_scaled += scaled_of[id];
    }
  }
  auto hit = cost_dp_core(g, to_layer_count(best_scaled));
  if (!hit) throw ValidationError("witness vanished from the rounded DP");
  Path p;
  for (int id : hit->arcs) p.arcs.push_back(back[id]);
  return FptasSolution{p, path_cost(inst, p), d.lower, d.upper, d.iterations,
                       false};
}

}  // namespace rcsp
