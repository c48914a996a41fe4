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

#include "rcsp/oracle.h"

namespace rcsp {
namespace {

struct Enumerator {
  const Instance& inst;
  std::size_t cap;
  std::vector<std::vector<int>> out_arcs;
  std::vector<bool> on_path;
  std::vector<int> stack;
  std::vector<PathRecord> found;

  explicit Enumerator(const Instance& i, std::size_t c) : inst(i), cap(c) {
    out_arcs.resize(inst.node_count);
    for (std::size_t k = 0; k < inst.arcs.size(); ++k) {
      out_arcs[inst.arcs[k].tail].push_back(static_cast<int>(k));
    }
    on_path.assign(inst.node_count, false);
  }

  void emit() {
    if (found.size() == cap) throw EnumerationCapError(cap);
    PathRecord rec;
    rec.path.arcs = stack;
    rec.cost = path_cost(inst, rec.path);
    rec.consumption = path_consumption_vec(inst, rec.path);
    rec.feasible = is_feasible(inst, rec.path);
    found.push_back(std::move(rec));
  }

  void dfs(int node) {
    if (node == inst.sink) emit();
    on_path[node] = true;
    for (int id : out_arcs[node]) {
      int h = inst.arcs[id].head;
      if (on_path[h]) continue;
      stack.push_back(id);
      dfs(h);
      stack.pop_back();
    }
    on_path[node] = false;
  }
};

}  // namespace

std::vector<PathRecord> enumerate_all_paths(const Instance& inst,
                                            std::size_t cap) {
  validate_instance(inst);
  Enumerator e(inst, cap);
  e.dfs(inst.source);
  return std::move(e.found);
}

std::optional<std::vector<PathRecord>> try_enumerate_all_paths(
    const Instance& inst, std::size_t cap) {
  try {
    return enumerate_all_paths(inst, cap);
  } catch (const EnumerationCapError&) {
    return std::nullopt;
  }
}

}  // namespace rcsp
