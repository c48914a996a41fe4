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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcsp/colgen.h"
#include "rcsp/fptas.h"
#include "rcsp/generator.h"
#include "rcsp/instance.h"
#include "rcsp/kpaths.h"
#include "rcsp/labeling.h"
#include "rcsp/pareto.h"
#include "rcsp/preprocess.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 3;
constexpr int kExitNotFound = 4;

using nlohmann::json;
using namespace rcsp;

// Collects the plain key=value lines and the JSON mirror side by side; one
// of the two is printed at the end.
struct Report {
  bool as_json = false;
  json j = json::object();
  std::vector<std::string> lines;

  void raw(const std::string& line) { lines.push_back(line); }
  void set(const std::string& key, const std::string& v) {
    j[key] = v;
    raw(key + "=" + v);
  }
  void set_int(const std::string& key, long long v) {
    j[key] = v;
    raw(key + "=" + std::to_string(v));
  }
  void set_bool(const std::string& key, bool v) {
    j[key] = v;
    raw(key + "=" + (v ? std::string("true") : std::string("false")));
  }
  void set_rat(const std::string& key, const Rat& v) { set(key, format_number(v)); }
  void print() const {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const std::string& line : lines) std::cout << line << "\n";
    }
  }
};

std::string join_nodes(const Instance& inst, const Path& p) {
  std::string out;
  for (int v : path_nodes(inst, p)) {
    if (!out.empty()) out += ",";
    out += std::to_string(v + 1);
  }
  return out;
}

json nodes_json(const Instance& inst, const Path& p) {
  json arr = json::array();
  for (int v : path_nodes(inst, p)) arr.push_back(v + 1);
  return arr;
}

std::string join_rats(const std::vector<Rat>& vals) {
  std::string out;
  for (const Rat& v : vals) {
    if (!out.empty()) out += ",";
    out += format_number(v);
  }
  return out;
}

json rats_json(const std::vector<Rat>& vals) {
  json arr = json::array();
  for (const Rat& v : vals) arr.push_back(format_number(v));
  return arr;
}

std::string join_ids(const std::vector<int>& ids, int shift) {
  std::string out;
  for (int v : ids) {
    if (!out.empty()) out += ",";
    out += std::to_string(v + shift);
  }
  return out;
}

json ids_json(const std::vector<int>& ids, int shift) {
  json arr = json::array();
  for (int v : ids) arr.push_back(v + shift);
  return arr;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Instance load_instance(const std::string& where) {
  if (where == "-") return parse_instance(std::cin);
  std::ifstream in(where);
  if (!in) throw ValidationError("cannot open instance file: " + where);
  return parse_instance(in);
}

Rat require_number(const std::string& text, const char* what) {
  auto v = parse_number(text);
  if (!v) {
    throw ValidationError(std::string("bad number for ") + what + ": " + text);
  }
  return *v;
}

struct SoftTimer {
  double limit = 0;  // seconds; 0 means unset
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void mark(Report& r) const {
    if (limit <= 0) return;
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > limit) r.set_bool("timed_out", true);
  }
};

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  const char* env = std::getenv("RCSP_SEED");
  if (!env || !*env) return flag_seed;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw ValidationError("RCSP_SEED is not an unsigned integer");
  }
}

// ---------------------------------------------------------------------------

int run_solve(const std::string& file, const std::string& algo_name, int k,
              bool frontier, bool as_json, double timeout) {
  Instance inst = load_instance(file);
  LabelAlgo algo;
  if (algo_name == "correction" || algo_name == "correcting") {
    algo = LabelAlgo::kCorrection;
  } else if (algo_name == "fixation" || algo_name == "setting") {
    algo = LabelAlgo::kFixation;
  } else if (algo_name == "acyclic") {
    algo = LabelAlgo::kAcyclic;
  } else {
    throw ValidationError("unknown algorithm: " + algo_name);
  }
  Report r;
  r.as_json = as_json;
  SoftTimer timer{timeout};

  LabelingResult run;
  switch (algo) {
    case LabelAlgo::kCorrection:
      run = label_correcting(inst, k);
      break;
    case LabelAlgo::kFixation:
      run = label_setting(inst, k);
      break;
    case LabelAlgo::kAcyclic:
      run = acyclic_labeling(inst, k);
      break;
  }
  const SinkLabel* best = nullptr;
  for (const SinkLabel& lab : run.labels) {
    if (!best || lab.cost < best->cost) best = &lab;
  }

  int rc;
  if (best) {
    r.set("status", "optimal");
    r.set_rat("cost", best->cost);
    r.set("path", join_nodes(inst, best->path));
    r.j["path"] = nodes_json(inst, best->path);
    if (inst.resource_count > 0) {
      r.set("consumption", join_rats(best->consumption));
      r.j["consumption"] = rats_json(best->consumption);
    }
    rc = kExitOk;
  } else {
    r.set("status", "infeasible");
    rc = kExitInfeasible;
  }
  if (frontier) {
    json arr = json::array();
    for (const SinkLabel& lab : run.labels) {
      std::vector<Rat> vec;
      vec.push_back(lab.cost);
      vec.insert(vec.end(), lab.consumption.begin(), lab.consumption.end());
      r.raw("label=" + join_rats(vec) + " " + join_nodes(inst, lab.path));
      json one;
      one["cost"] = format_number(lab.cost);
      one["consumption"] = rats_json(lab.consumption);
      one["path"] = nodes_json(inst, lab.path);
      arr.push_back(one);
    }
    r.j["labels"] = arr;
  }
  timer.mark(r);
  r.print();
  return rc;
}

int run_preprocess(const std::string& file, const std::string& method,
                   bool strict, bool as_json) {
  Instance inst = load_instance(file);
  Report r;
  r.as_json = as_json;
  int rc = kExitOk;

  auto emit_instance = [&](const Instance& out) {
    std::string text = serialize_instance(out);
    r.j["instance"] = text;
    if (!as_json) {
      r.raw("instance:");
      text.pop_back();  // the serializer always ends with one newline
      r.raw(text);
    }
  };

  if (method == "reduce") {
    ReductionReport red = reduce_windows(inst);
    r.set("status", red.infeasible ? "infeasible" : "ok");
    r.set_int("iterations", red.iterations);
    r.set("removed_node_ids", join_ids(red.removed_nodes, 1));
    r.j["removed_node_ids"] = ids_json(red.removed_nodes, 1);
    r.set("removed_arc_ids", join_ids(red.removed_arcs, 1));
    r.j["removed_arc_ids"] = ids_json(red.removed_arcs, 1);
    if (red.infeasible) {
      rc = kExitInfeasible;
    } else {
      emit_instance(red.reduced);
    }
    r.j["removed_nodes"] = red.removed_nodes.size();
    r.j["removed_arcs"] = red.removed_arcs.size();
    r.raw("removed_nodes=" + std::to_string(red.removed_nodes.size()) +
          " removed_arcs=" + std::to_string(red.removed_arcs.size()));
  } else if (method == "bounds") {
    PreResult pre = pretraitement(inst, strict);
    std::optional<Rat> low;
    std::optional<Rat> up;
    if (std::holds_alternative<PreInfeasible>(pre.outcome)) {
      r.set("status", "infeasible");
      rc = kExitInfeasible;
    } else if (const auto* opt = std::get_if<PreOptimal>(&pre.outcome)) {
      r.set("status", "optimal");
      r.set_rat("cost", opt->cost);
      r.set("path", join_nodes(inst, opt->path));
      r.j["path"] = nodes_json(inst, opt->path);
      low = opt->cost;
      up = opt->cost;
    } else {
      const auto& b = std::get<PreBounds>(pre.outcome);
      r.set("status", "bounds");
      if (b.witness) {
        r.set("witness", join_nodes(inst, *b.witness));
        r.j["witness"] = nodes_json(inst, *b.witness);
      }
      low = b.lower;
      up = b.upper;
    }
    r.set_int("iterations", pre.iterations);
    r.set("removed_node_ids", join_ids(pre.removed_nodes, 1));
    r.j["removed_node_ids"] = ids_json(pre.removed_nodes, 1);
    r.set("removed_arc_ids", join_ids(pre.removed_arcs, 1));
    r.j["removed_arc_ids"] = ids_json(pre.removed_arcs, 1);
    if (rc == kExitOk) emit_instance(pre.pruned);
    std::string summary;
    if (low) {
      r.j["L"] = format_number(*low);
      r.j["U"] = format_number(*up);
      summary += "L=" + format_number(*low) + " U=" + format_number(*up) + " ";
    }
    r.j["removed_nodes"] = pre.removed_nodes.size();
    r.j["removed_arcs"] = pre.removed_arcs.size();
    summary += "removed_nodes=" + std::to_string(pre.removed_nodes.size()) +
               " removed_arcs=" + std::to_string(pre.removed_arcs.size());
    r.raw(summary);
  } else {
    throw ValidationError("method must be 'reduce' or 'bounds'");
  }
  r.print();
  return rc;
}

int run_fptas(const std::string& file, const std::string& eps_text,
              const std::string& rho_text, bool as_json, double timeout) {
  Instance inst = load_instance(file);
  Rat eps = require_number(eps_text, "eps");
  Rat rho = rho_text.empty() ? Rat(2) : require_number(rho_text, "rho");
  Report r;
  r.as_json = as_json;
  SoftTimer timer{timeout};
  auto sol = fptas_solve(inst, eps, rho);
  int rc;
  if (sol) {
    r.set("status", "solved");
    r.set_rat("cost", sol->cost);
    r.set("path", join_nodes(inst, sol->path));
    r.j["path"] = nodes_json(inst, sol->path);
    r.set_rat("lb", sol->lower);
    r.set_rat("ub", sol->upper);
    r.set_int("iterations", sol->dicho_iterations);
    r.set_rat("ratio_bound", Rat(1) + eps);
    r.set_bool("optimal_early", sol->optimal_early);
    rc = kExitOk;
  } else {
    r.set("status", "infeasible");
    rc = kExitInfeasible;
  }
  timer.mark(r);
  r.print();
  return rc;
}

std::vector<Direction> parse_dirs(const std::string& text, int criteria) {
  std::vector<Direction> dirs;
  if (text.empty()) {
    dirs.assign(criteria, Direction::kMin);
    return dirs;
  }
  for (const std::string& item : split_list(text)) {
    if (item == "min") {
      dirs.push_back(Direction::kMin);
    } else if (item == "max") {
      dirs.push_back(Direction::kMax);
    } else {
      throw ValidationError("directions must be 'min' or 'max'");
    }
  }
  return dirs;
}

int run_pareto(const std::string& file, const std::string& eps_text,
               const std::string& dirs_text, const std::string& budgets_text,
               bool oracle, bool as_json, double timeout) {
  Instance inst = load_instance(file);
  Rat eps = require_number(eps_text, "eps");
  std::vector<Direction> dirs = parse_dirs(dirs_text, inst.resource_count + 1);
  Report r;
  r.as_json = as_json;
  SoftTimer timer{timeout};

  Frontier frontier = oracle
                          ? pareto_frontier_oracle(inst, dirs, eps, 200000)
                          : pareto_frontier_approx(inst, dirs, eps);
  r.set("status", "ok");
  json arr = json::array();
  for (const MLabel& m : frontier.members) {
    r.raw("values=" + join_rats(m.values) + " path=" + join_nodes(inst, m.path));
    json one;
    one["values"] = rats_json(m.values);
    one["path"] = nodes_json(inst, m.path);
    arr.push_back(one);
  }
  r.j["members"] = arr;
  r.set_int("corners_probed", frontier.corners_probed);
  r.set_int("frontier_size", static_cast<long long>(frontier.members.size()));

  if (!budgets_text.empty()) {
    std::vector<std::optional<Rat>> budgets;
    for (const std::string& item : split_list(budgets_text)) {
      if (item == "-") {
        budgets.push_back(std::nullopt);
      } else {
        budgets.push_back(require_number(item, "budget"));
      }
    }
    BridgeReport bridge =
        epsilon_feasibility_report(inst, dirs, frontier, budgets, eps);
    r.set_int("bridge_rows", static_cast<long long>(bridge.rows.size()));
    r.set_bool("bridge_all_covered", bridge.all_covered);
    r.set_rat("bridge_max_factor", bridge.max_factor);
  }
  timer.mark(r);
  r.print();
  return kExitOk;
}

int run_kpaths(const std::string& file, int k, int k_max, bool first_feasible,
               bool as_json, double timeout) {
  Instance inst = load_instance(file);
  Report r;
  r.as_json = as_json;
  SoftTimer timer{timeout};
  int rc = kExitOk;

  if (first_feasible) {
    int horizon = k_max > 0 ? k_max : k;
    auto hit = first_feasible_by_rank(inst, horizon);
    if (hit) {
      r.set("status", "found");
      r.set_int("rank", hit->rank);
      r.set_rat("cost", hit->cost);
      r.set("path", join_nodes(inst, hit->path));
      r.j["path"] = nodes_json(inst, hit->path);
    } else {
      r.set("status", "not_found");
      r.set_int("checked", horizon);
      rc = kExitNotFound;
    }
  } else {
    std::vector<RankedPath> ranked = k_shortest_paths(inst, k);
    r.set("status", "ok");
    r.set_int("count", static_cast<long long>(ranked.size()));
    json arr = json::array();
    int rank = 0;
    for (const RankedPath& rp : ranked) {
      ++rank;
      bool ok = is_feasible(inst, rp.path);
      r.raw("rank=" + std::to_string(rank) + " cost=" + format_number(rp.cost) +
            " feasible=" + (ok ? "true" : "false") + " path=" +
            join_nodes(inst, rp.path));
      json one;
      one["rank"] = rank;
      one["cost"] = format_number(rp.cost);
      one["feasible"] = ok;
      one["path"] = nodes_json(inst, rp.path);
      arr.push_back(one);
    }
    r.j["ranked"] = arr;
  }
  timer.mark(r);
  r.print();
  return rc;
}

int run_colgen(const std::string& file, const std::string& tasks_text, int k,
               int max_iter, bool as_json, double timeout) {
  Instance inst = load_instance(file);
  std::vector<int> tasks;
  if (!tasks_text.empty()) {
    for (const std::string& item : split_list(tasks_text)) {
      long long v;
      try {
        v = std::stoll(item);
      } catch (const std::exception&) {
        throw ValidationError("bad task id: " + item);
      }
      if (v < 1 || v > inst.node_count) {
        throw ValidationError("task id out of range: " + item);
      }
      tasks.push_back(static_cast<int>(v - 1));
    }
  }
  Report r;
  r.as_json = as_json;
  SoftTimer timer{timeout};
  ColgenResult res = column_generation(inst, tasks, k, max_iter);

  json logarr = json::array();
  for (const ColgenIterRow& row : res.log) {
    r.raw("iter=" + std::to_string(row.iter) +
          " obj=" + format_number(row.objective) +
          " new_cols=" + std::to_string(row.new_columns) + " min_redcost=" +
          (row.min_reduced_cost ? format_number(*row.min_reduced_cost)
                                : std::string("none")));
    json one;
    one["iter"] = row.iter;
    one["obj"] = format_number(row.objective);
    one["new_cols"] = row.new_columns;
    if (row.min_reduced_cost) {
      one["min_redcost"] = format_number(*row.min_reduced_cost);
    }
    logarr.push_back(one);
  }
  r.j["log"] = logarr;

  r.set("status", res.converged ? "converged" : "iteration_limit");
  r.set_rat("objective", res.objective);
  r.set_int("iterations", res.iterations);
  r.set("covering", res.covering_feasible ? "feasible" : "infeasible");
  r.set("certificate", res.certificate_ok ? "ok" : "none");
  r.set("duals", join_rats(res.duals));
  r.j["duals"] = rats_json(res.duals);
  r.set_int("columns", static_cast<long long>(res.columns.size()));
  json arr = json::array();
  for (const ColgenColumn& col : res.columns) {
    r.raw("column=" + format_number(col.value) + " " +
          format_number(col.cost) + " " + join_nodes(inst, col.path));
    json one;
    one["value"] = format_number(col.value);
    one["cost"] = format_number(col.cost);
    one["path"] = nodes_json(inst, col.path);
    arr.push_back(one);
  }
  r.j["columns_list"] = arr;
  timer.mark(r);
  r.print();
  if (!res.converged) return kExitNotFound;
  if (!res.covering_feasible) return kExitInfeasible;
  return kExitOk;
}

int run_gen(const GenSpec& spec, const std::string& out_file) {
  Instance inst = random_instance(spec);
  std::string text = serialize_instance(inst);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw ValidationError("cannot write file: " + out_file);
    out << text;
  }
  return kExitOk;
}

long long median_ms(std::vector<long long> samples) {
  if (samples.empty()) return 0;
  std::sort(samples.begin(), samples.end());
  return samples[(samples.size() - 1) / 2];
}

int run_bench(const std::string& suite, std::uint64_t seed, int cases,
              bool timing, double timeout) {
  auto stamp = [&](auto&& fn) -> std::string {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return timing ? " ms=" + std::to_string(ms) : std::string();
  };

  if (suite == "growth") {
    for (int n = 8; n <= 8 + 2 * (cases - 1); n += 2) {
      Instance inst = exponential_instance(n);
      LabelingResult run;
      std::string extra = stamp([&] { run = acyclic_labeling(inst); });
      std::cout << "case=growth_n" << n << " labels=" << run.labels.size()
                << " created=" << run.stats.labels_created << extra << "\n";
    }
    return kExitOk;
  }
  if (suite == "random") {
    // Three exact algorithms plus the approximation at eps = 1/10, with a
    // per-case agreement column and a closing summary block.
    const char* names[3] = {"correction", "fixation", "acyclic"};
    std::vector<long long> wall[3];
    int agree = 0;
    std::optional<Rat> max_ratio;
    for (int i = 0; i < cases; ++i) {
      GenSpec spec;
      spec.seed = seed + static_cast<std::uint64_t>(i);
      spec.n = 24;
      spec.arc_density = 0.3;
      spec.resource_count = 1;
      Instance inst = random_instance(spec);
      std::optional<Rat> costs[3];
      std::string cols;
      bool timed_out = false;
      for (int a = 0; a < 3; ++a) {
        auto t0 = std::chrono::steady_clock::now();
        LabelingResult run = a == 0   ? label_correcting(inst)
                             : a == 1 ? label_setting(inst)
                                      : acyclic_labeling(inst);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        wall[a].push_back(ms);
        if (timeout > 0 && static_cast<double>(ms) > timeout * 1000.0) {
          timed_out = true;
        }
        if (timing) {
          cols += " " + std::string(names[a]) + "_ms=" + std::to_string(ms);
        }
        for (const SinkLabel& lab : run.labels) {
          if (!costs[a] || lab.cost < *costs[a]) costs[a] = lab.cost;
        }
      }
      bool same = costs[0] == costs[1] && costs[1] == costs[2];
      if (same) ++agree;
      std::string ratio_text = "-";
      if (costs[0] && *costs[0] > 0) {
        auto approx = fptas_solve(inst, Rat(1, 10));
        if (approx) {
          Rat ratio = approx->cost / *costs[0];
          ratio_text = format_number(ratio);
          if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
        }
      }
      std::cout << "case=random_" << i << " seed=" << spec.seed << " cost="
                << (costs[0] ? format_number(*costs[0]) : std::string("none"))
                << " agree=" << (same ? "yes" : "no")
                << " fptas_ratio=" << ratio_text << cols
                << (timed_out ? " timeout=yes" : "") << "\n";
    }
    if (cases > 0) {
      if (timing) {
        for (int a = 0; a < 3; ++a) {
          std::cout << "algo=" << names[a] << " median_ms=" << median_ms(wall[a])
                    << "\n";
        }
      }
      std::cout << "agreement=" << agree << "/" << cases << "\n";
      std::cout << "fptas_max_ratio="
                << (max_ratio ? format_number(*max_ratio) : std::string("-"))
                << "\n";
    }
    return kExitOk;
  }
  throw ValidationError("suite must be 'growth' or 'random'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resource constrained shortest path toolkit"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // solve
  auto* solve = app.add_subcommand("solve", "min-cost feasible path");
  std::string solve_file = "-";
  std::string solve_algo = "correction";
  int solve_k = 1;
  bool solve_frontier = false;
  bool solve_json = false;
  double solve_timeout = 0;
  solve->add_option("instance", solve_file, "instance file, - for stdin");
  solve->add_option("--algo", solve_algo,
                    "correction | fixation | acyclic (default correction)");
  solve->add_option("-k,--k", solve_k, "k-dominance retention (default 1)");
  solve->add_flag("--frontier", solve_frontier, "also print the sink labels");
  solve->add_flag("--json", solve_json, "JSON output");
  solve->add_option("--timeout", solve_timeout,
                    "soft limit in seconds, marks timed_out=true");
  solve->callback([&] {
    rc = run_solve(solve_file, solve_algo, solve_k, solve_frontier, solve_json,
                   solve_timeout);
  });

  // preprocess
  auto* prep = app.add_subcommand("preprocess",
                                  "window reduction or cost/bound pruning");
  std::string prep_file = "-";
  std::string prep_method = "reduce";
  bool prep_strict = false;
  bool prep_json = false;
  prep->add_option("instance", prep_file, "instance file, - for stdin");
  prep->add_option("--method", prep_method, "reduce | bounds");
  prep->add_flag("--strict", prep_strict,
                 "bounds: also delete cost-tied elements");
  prep->add_flag("--json", prep_json, "JSON output");
  prep->callback(
      [&] { rc = run_preprocess(prep_file, prep_method, prep_strict, prep_json); });

  // fptas
  auto* fp = app.add_subcommand("fptas",
                                "(1+eps)-approximation, single resource");
  std::string fp_file = "-";
  std::string fp_eps;
  std::string fp_rho;
  bool fp_json = false;
  double fp_timeout = 0;
  fp->add_option("instance", fp_file, "instance file, - for stdin");
  fp->add_option("--eps", fp_eps, "approximation ratio parameter")->required();
  fp->add_option("--rho", fp_rho, "bound contraction target (default 2)");
  fp->add_flag("--json", fp_json, "JSON output");
  fp->add_option("--timeout", fp_timeout, "soft limit in seconds");
  fp->callback(
      [&] { rc = run_fptas(fp_file, fp_eps, fp_rho, fp_json, fp_timeout); });

  // pareto
  auto* par = app.add_subcommand("pareto", "approximate multicriteria front");
  std::string par_file = "-";
  std::string par_eps;
  std::string par_dirs;
  std::string par_budgets;
  bool par_oracle = false;
  bool par_json = false;
  double par_timeout = 0;
  par->add_option("instance", par_file, "instance file, - for stdin");
  par->add_option("--eps", par_eps, "per-criterion tolerance")->required();
  par->add_option("--directions,--dirs", par_dirs,
                  "comma list of min|max per criterion (default all min)");
  par->add_option("--budgets", par_budgets,
                  "comma list of budgets, - to skip a criterion; adds the "
                  "feasibility bridge report");
  par->add_flag("--oracle", par_oracle,
                "exhaustive reference construction instead of probing");
  par->add_flag("--json", par_json, "JSON output");
  par->add_option("--timeout", par_timeout, "soft limit in seconds");
  par->callback([&] {
    rc = run_pareto(par_file, par_eps, par_dirs, par_budgets, par_oracle,
                    par_json, par_timeout);
  });

  // kpaths
  auto* kp = app.add_subcommand("kpaths", "ranked path enumeration");
  std::string kp_file = "-";
  int kp_k = 1;
  int kp_kmax = 0;
  bool kp_feasible = false;
  bool kp_json = false;
  double kp_timeout = 0;
  kp->add_option("instance", kp_file, "instance file, - for stdin");
  kp->add_option("-k,--k", kp_k, "number of paths to list")->required();
  kp->add_flag("--first-feasible", kp_feasible,
               "report the first resource-feasible path by rank");
  kp->add_option("--kmax", kp_kmax,
                 "search horizon for --first-feasible (default k)");
  kp->add_flag("--json", kp_json, "JSON output");
  kp->add_option("--timeout", kp_timeout, "soft limit in seconds");
  kp->callback([&] {
    rc = run_kpaths(kp_file, kp_k, kp_kmax, kp_feasible, kp_json, kp_timeout);
  });

  // colgen-demo
  auto* cg = app.add_subcommand("colgen-demo",
                                "covering relaxation by column generation");
  std::string cg_file = "-";
  std::string cg_tasks;
  int cg_k = 3;
  int cg_max_iter = 50;
  bool cg_json = false;
  double cg_timeout = 0;
  cg->add_option("instance", cg_file, "instance file, - for stdin");
  cg->add_option("--tasks", cg_tasks, "comma list of task nodes (1-based)");
  cg->add_option("--k", cg_k, "columns per pricing round (default 3)");
  cg->add_option("--max-iters,--max-iter", cg_max_iter,
                 "master iteration cap (default 50)");
  cg->add_flag("--json", cg_json, "JSON output");
  cg->add_option("--timeout", cg_timeout, "soft limit in seconds");
  cg->callback([&] {
    rc = run_colgen(cg_file, cg_tasks, cg_k, cg_max_iter, cg_json, cg_timeout);
  });

  // gen
  auto* gen = app.add_subcommand("gen", "seeded random instance");
  GenSpec spec;
  std::string gen_kind = "final";
  std::string gen_wait = "nowait";
  std::string gen_out;
  gen->add_option("--seed", spec.seed, "RNG seed (RCSP_SEED overrides)");
  gen->add_option("--n", spec.n, "node count");
  gen->add_option("--density", spec.arc_density, "forward arc probability");
  gen->add_option("--resources", spec.resource_count, "resource count");
  gen->add_option("--cost-lo", spec.cost_lo, "min arc cost");
  gen->add_option("--cost-hi", spec.cost_hi, "max arc cost");
  gen->add_option("--cons-lo", spec.consumption_lo, "min arc consumption");
  gen->add_option("--cons-hi", spec.consumption_hi, "max arc consumption");
  gen->add_option("--kind", gen_kind, "final | windows");
  gen->add_option("--wait", gen_wait, "wait | nowait");
  gen->add_flag("--tight", spec.tight, "tight budgets / windows");
  gen->add_option("--out", gen_out, "write to a file instead of stdout");
  gen->callback([&] {
    if (gen_kind == "final") {
      spec.kind = ConstraintKind::kFinal;
    } else if (gen_kind == "windows") {
      spec.kind = ConstraintKind::kWindows;
    } else {
      throw ValidationError("kind must be 'final' or 'windows'");
    }
    if (gen_wait == "wait") {
      spec.wait = WaitPolicy::kWait;
    } else if (gen_wait == "nowait") {
      spec.wait = WaitPolicy::kNoWait;
    } else {
      throw ValidationError("wait must be 'wait' or 'nowait'");
    }
    spec.seed = effective_seed(spec.seed);
    rc = run_gen(spec, gen_out);
  });

  // bench
  auto* bench = app.add_subcommand("bench", "micro benchmark suites");
  std::string bench_suite = "random";
  std::uint64_t bench_seed = 1;
  int bench_cases = 5;
  bool bench_time = false;
  double bench_timeout = 0;
  bench->add_option("--suite", bench_suite, "growth | random");
  bench->add_option("--seed", bench_seed, "RNG seed (RCSP_SEED overrides)");
  bench->add_option("--cases", bench_cases, "number of cases");
  bench->add_flag("--time", bench_time, "append wall clock columns");
  bench->add_option("--timeout", bench_timeout,
                    "per-solve soft limit in seconds, marks slow cases");
  bench->callback([&] {
    rc = run_bench(bench_suite, effective_seed(bench_seed), bench_cases,
                   bench_time, bench_timeout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
