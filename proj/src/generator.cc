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

#include "rcsp/generator.h"

#include <algorithm>
#include <random>
#include <vector>

namespace rcsp {
namespace {

struct Draw {
  std::mt19937_64 eng;

  explicit Draw(std::uint64_t seed) : eng(seed) {}

  // Modulo reduction keeps the stream platform-stable; the bias is irrelevant
  // here (spans are tiny against 2^64).
  long long range(long long lo, long long hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng() % span);
  }

  bool chance(double p) {
    double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return u < p;
  }
};

// Min/max arrival sums from the source, ignoring windows. Unreachable nodes
// get no entry.
struct Reach {
  std::vector<std::optional<Rat>> lo, hi;
};

Reach arrival_ranges(const Instance& inst, int r) {
  Reach reach;
  reach.lo.resize(inst.node_count);
  reach.hi.resize(inst.node_count);
  reach.lo[inst.source] = Rat(0);
  reach.hi[inst.source] = Rat(0);
  // Arcs run from lower to higher ids, so id order is topological.
  std::vector<std::vector<int>> in_arcs(inst.node_count);
  for (std::size_t k = 0; k < inst.arcs.size(); ++k) {
    in_arcs[inst.arcs[k].head].push_back(static_cast<int>(k));
  }
  for (int v = 0; v < inst.node_count; ++v) {
    for (int id : in_arcs[v]) {
      const Arc& a = inst.arcs[id];
      if (!reach.lo[a.tail]) continue;
      Rat cand_lo = *reach.lo[a.tail] + a.consumption[r];
      Rat cand_hi = *reach.hi[a.tail] + a.consumption[r];
      if (!reach.lo[v] || cand_lo < *reach.lo[v]) reach.lo[v] = cand_lo;
      if (!reach.hi[v] || cand_hi > *reach.hi[v]) reach.hi[v] = cand_hi;
    }
  }
  return reach;
}

}  // namespace

Instance random_instance(const GenSpec& spec) {
  if (spec.n < 2) throw ValidationError("generator needs n >= 2");
  if (spec.resource_count < 0) throw ValidationError("negative resource count");
  if (spec.cost_lo > spec.cost_hi ||
      spec.consumption_lo > spec.consumption_hi || spec.consumption_lo < 0) {
    throw ValidationError("bad generator value ranges");
  }
  Draw draw(spec.seed);
  Instance inst;
  inst.node_count = spec.n;
  inst.resource_count = spec.resource_count;
  inst.source = 0;
  inst.sink = spec.n - 1;
  inst.kind = spec.kind;
  inst.wait = spec.wait;

  auto make_arc = [&](int i, int j) {
    Arc a;
    a.tail = i;
    a.head = j;
    a.cost = Rat(draw.range(spec.cost_lo, spec.cost_hi));
    a.consumption.resize(spec.resource_count);
    for (int r = 0; r < spec.resource_count; ++r) {
      a.consumption[r] =
          Rat(draw.range(spec.consumption_lo, spec.consumption_hi));
    }
    return a;
  };

  std::vector<std::vector<bool>> present(spec.n,
                                         std::vector<bool>(spec.n, false));
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      if (draw.chance(spec.arc_density)) {
        inst.arcs.push_back(make_arc(i, j));
        present[i][j] = true;
      }
    }
  }

  // Reachability repair: walk a random increasing chain to the sink.
  std::vector<bool> reached(spec.n, false);
  reached[0] = true;
  for (int i = 0; i < spec.n; ++i) {
    if (!reached[i]) continue;
    for (int j = i + 1; j < spec.n; ++j) {
      if (present[i][j]) reached[j] = true;
    }
  }
  if (!reached[spec.n - 1]) {
    int cur = 0;
    while (cur != spec.n - 1) {
      int nxt = static_cast<int>(draw.range(cur + 1, spec.n - 1));
      if (!present[cur][nxt]) {
        inst.arcs.push_back(make_arc(cur, nxt));
        present[cur][nxt] = true;
      }
      cur = nxt;
    }
  }

  const int rc = spec.resource_count;
  inst.window_lo.assign(spec.n, std::vector<Rat>(rc, Rat(0)));
  inst.window_hi.assign(spec.n, std::vector<Rat>(rc, Rat(0)));
  for (int r = 0; r < rc; ++r) {
    Reach reach = arrival_ranges(inst, r);
    Rat sink_lo = *reach.lo[inst.sink];
    Rat sink_hi = *reach.hi[inst.sink];
    if (inst.kind == ConstraintKind::kFinal) {
      long long pct = spec.tight ? draw.range(0, 50) : draw.range(50, 125);
      Rat budget = sink_lo + (sink_hi - sink_lo) * Rat(pct, 100);
      for (int i = 0; i < spec.n; ++i) inst.window_hi[i][r] = budget;
    } else {
      for (int i = 0; i < spec.n; ++i) {
        Rat base_lo = reach.lo[i] ? *reach.lo[i] : Rat(0);
        Rat base_hi = reach.hi[i] ? *reach.hi[i] : sink_hi;
        long long pct = spec.tight ? draw.range(40, 100) : draw.range(70, 130);
        Rat hi = base_hi * Rat(pct, 100);
        if (hi < base_lo) hi = base_lo;  // keep the min-consumption arrival in
        Rat lo = 0;
        if (i != inst.source && draw.chance(0.3)) {
          lo = base_lo * Rat(draw.range(0, 60), 100);
        }
        if (lo > hi) lo = hi;
        inst.window_lo[i][r] = lo;
        inst.window_hi[i][r] = hi;
      }
    }
  }
  validate_instance(inst);
  return inst;
}

Instance exponential_instance(int n) {
  if (n < 2) throw ValidationError("family needs n >= 2");
  Instance inst;
  inst.node_count = n;
  inst.resource_count = 1;
  inst.source = 0;
  inst.sink = n - 1;
  inst.kind = ConstraintKind::kFinal;
  inst.wait = WaitPolicy::kNoWait;

  const Rat m(BigInt(1) << (n + 2));
  Rat cmax(0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Arc a;
      a.tail = i - 1;
      a.head = j - 1;
      a.cost = m * (j - i - 1) + Rat(BigInt(1) << (j - 1));
      cmax = std::max(cmax, a.cost);
      a.consumption.resize(1);
      inst.arcs.push_back(std::move(a));
    }
  }
  const Rat k = cmax + 1;
  for (Arc& a : inst.arcs) a.consumption[0] = k - a.cost;
  const Rat budget = k * (n - 1);
  inst.window_lo.assign(n, std::vector<Rat>(1, Rat(0)));
  inst.window_hi.assign(n, std::vector<Rat>(1, budget));
  validate_instance(inst);
  return inst;
}

}  // namespace rcsp
