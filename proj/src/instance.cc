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

#include "rcsp/instance.h"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace rcsp {

ParseError::ParseError(int line, const std::string& message)
    : ValidationError("line " + std::to_string(line) + ": " + message),
      line_(line) {}

void validate_instance(const Instance& inst) {
  if (inst.node_count < 1) throw ValidationError("node count must be >= 1");
  if (inst.resource_count < 0) throw ValidationError("negative resource count");
  auto check_node = [&](int v, const char* what) {
    if (v < 0 || v >= inst.node_count) {
      throw ValidationError(std::string(what) + " id out of range");
    }
  };
  check_node(inst.source, "source");
  check_node(inst.sink, "sink");
  const std::size_t r = static_cast<std::size_t>(inst.resource_count);
  if (inst.window_lo.size() != static_cast<std::size_t>(inst.node_count) ||
      inst.window_hi.size() != static_cast<std::size_t>(inst.node_count)) {
    throw ValidationError("window table size mismatch");
  }
  for (int i = 0; i < inst.node_count; ++i) {
    if (inst.window_lo[i].size() != r || inst.window_hi[i].size() != r) {
      throw ValidationError("window row size mismatch");
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (inst.window_lo[i][j] > inst.window_hi[i][j]) {
        throw ValidationError("empty window (a > b) at node " +
                              std::to_string(i + 1));
      }
    }
  }
  for (const Arc& a : inst.arcs) {
    check_node(a.tail, "arc tail");
    check_node(a.head, "arc head");
    if (a.consumption.size() != r) {
      throw ValidationError("arc consumption arity mismatch");
    }
    for (const Rat& t : a.consumption) {
      if (t < 0) throw ValidationError("negative consumption");
    }
  }
}

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-blank line with comments stripped, tokenized.
  std::optional<std::vector<std::string>> next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> require(const char* what) {
    auto t = next();
    if (!t) throw ParseError(line_no + 1, std::string("missing ") + what);
    return *t;
  }
};

long long parse_int_token(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad integer for ") + what + ": " + tok);
  }
}

Rat parse_num_token(const std::string& tok, int line, const char* what) {
  auto v = parse_number(tok);
  if (!v) {
    throw ParseError(line, std::string("bad number for ") + what + ": " + tok);
  }
  return *v;
}

int parse_node_token(const std::string& tok, int line, int n,
                     const char* what) {
  long long v = parse_int_token(tok, line, what);
  if (v < 1 || v > n) {
    throw ParseError(line, std::string(what) + " out of range: " + tok);
  }
  return static_cast<int>(v - 1);
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader{in};

  auto header = reader.require("header");
  if (header.size() != 2 || header[0] != "rcsp" || header[1] != "1") {
    throw ParseError(reader.line_no, "expected header 'rcsp 1'");
  }

  auto counts = reader.require("size line");
  if (counts.size() != 5) {
    throw ParseError(reader.line_no, "size line needs 'n m R mode wait'");
  }
  Instance inst;
  long long n = parse_int_token(counts[0], reader.line_no, "node count");
  long long m = parse_int_token(counts[1], reader.line_no, "arc count");
  long long r = parse_int_token(counts[2], reader.line_no, "resource count");
  if (n < 1 || m < 0 || r < 0) {
    throw ParseError(reader.line_no, "counts out of range");
  }
  inst.node_count = static_cast<int>(n);
  inst.resource_count = static_cast<int>(r);
  if (counts[3] == "final") {
    inst.kind = ConstraintKind::kFinal;
  } else if (counts[3] == "windows") {
    inst.kind = ConstraintKind::kWindows;
  } else {
    throw ParseError(reader.line_no, "mode must be 'final' or 'windows'");
  }
  if (counts[4] == "wait") {
    inst.wait = WaitPolicy::kWait;
  } else if (counts[4] == "nowait") {
    inst.wait = WaitPolicy::kNoWait;
  } else {
    throw ParseError(reader.line_no, "policy must be 'wait' or 'nowait'");
  }

  auto ends = reader.require("source/sink line");
  if (ends.size() != 2) {
    throw ParseError(reader.line_no, "expected 's t'");
  }
  inst.source = parse_node_token(ends[0], reader.line_no, inst.node_count,
                                 "source");
  inst.sink = parse_node_token(ends[1], reader.line_no, inst.node_count,
                               "sink");

  const int rc = inst.resource_count;
  inst.window_lo.assign(inst.node_count, std::vector<Rat>(rc, Rat(0)));
  inst.window_hi.assign(inst.node_count, std::vector<Rat>(rc, Rat(0)));
  if (rc > 0 && inst.kind == ConstraintKind::kWindows) {
    for (int i = 0; i < inst.node_count; ++i) {
      auto row = reader.require("window line");
      if (row.size() != static_cast<std::size_t>(2 * rc)) {
        throw ParseError(reader.line_no, "window line needs 2R numbers");
      }
      for (int j = 0; j < rc; ++j) {
        Rat a = parse_num_token(row[2 * j], reader.line_no, "window lower");
        Rat b = parse_num_token(row[2 * j + 1], reader.line_no, "window upper");
        if (a > b) {
          throw ParseError(reader.line_no, "empty window (a > b)");
        }
        inst.window_lo[i][j] = a;
        inst.window_hi[i][j] = b;
      }
    }
  } else if (rc > 0) {
    auto row = reader.require("budget line");
    if (row.size() != static_cast<std::size_t>(rc)) {
      throw ParseError(reader.line_no, "budget line needs R numbers");
    }
    for (int j = 0; j < rc; ++j) {
      Rat b = parse_num_token(row[j], reader.line_no, "budget");
      if (b < 0) throw ParseError(reader.line_no, "negative budget");
      for (int i = 0; i < inst.node_count; ++i) inst.window_hi[i][j] = b;
    }
  }

  for (long long k = 0; k < m; ++k) {
    auto row = reader.require("arc line");
    if (row.size() != static_cast<std::size_t>(3 + rc)) {
      throw ParseError(reader.line_no, "arc line needs 'u v c' plus R values");
    }
    Arc arc;
    arc.tail = parse_node_token(row[0], reader.line_no, inst.node_count,
                                "arc tail");
    arc.head = parse_node_token(row[1], reader.line_no, inst.node_count,
                                "arc head");
    arc.cost = parse_num_token(row[2], reader.line_no, "arc cost");
    arc.consumption.resize(rc);
    for (int j = 0; j < rc; ++j) {
      Rat t = parse_num_token(row[3 + j], reader.line_no, "arc consumption");
      if (t < 0) throw ParseError(reader.line_no, "negative consumption");
      arc.consumption[j] = t;
    }
    inst.arcs.push_back(std::move(arc));
  }
  if (reader.next()) {
    throw ParseError(reader.line_no, "trailing content after arc list");
  }
  validate_instance(inst);
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "rcsp 1\n";
  out << inst.node_count << " " << inst.arcs.size() << " "
      << inst.resource_count << " "
      << (inst.kind == ConstraintKind::kFinal ? "final" : "windows") << " "
      << (inst.wait == WaitPolicy::kWait ? "wait" : "nowait") << "\n";
  out << inst.source + 1 << " " << inst.sink + 1 << "\n";
  if (inst.resource_count > 0 && inst.kind == ConstraintKind::kWindows) {
    for (int i = 0; i < inst.node_count; ++i) {
      for (int j = 0; j < inst.resource_count; ++j) {
        if (j) out << " ";
        out << format_number(inst.window_lo[i][j]) << " "
            << format_number(inst.window_hi[i][j]);
      }
      out << "\n";
    }
  } else if (inst.resource_count > 0) {
    for (int j = 0; j < inst.resource_count; ++j) {
      if (j) out << " ";
      out << format_number(inst.window_hi[inst.sink][j]);
    }
    out << "\n";
  }
  for (const Arc& a : inst.arcs) {
    out << a.tail + 1 << " " << a.head + 1 << " " << format_number(a.cost);
    for (const Rat& t : a.consumption) out << " " << format_number(t);
    out << "\n";
  }
  return out.str();
}

Instance final_to_windows(const Instance& inst, bool* warned) {
  if (warned) *warned = false;
  if (inst.kind == ConstraintKind::kWindows) {
    if (warned) *warned = true;
    return inst;
  }
  Instance out = inst;
  out.kind = ConstraintKind::kWindows;
  return out;
}

std::vector<int> path_nodes(const Instance& inst, const Path& p) {
  std::vector<int> nodes;
  nodes.push_back(inst.source);
  for (int id : p.arcs) {
    if (id < 0 || id >= static_cast<int>(inst.arcs.size())) {
      throw ValidationError("path arc id out of range");
    }
    const Arc& a = inst.arcs[id];
    if (a.tail != nodes.back()) {
      throw ValidationError("path arcs are not chained");
    }
    nodes.push_back(a.head);
  }
  return nodes;
}

Rat path_cost(const Instance& inst, const Path& p) {
  Rat total = 0;
  for (int id : p.arcs) total += inst.arcs[id].cost;
  return total;
}

namespace {

// Arrival values at each visited node; WAIT lifts to the lower bound.
std::vector<Rat> arrival_profile(const Instance& inst, const Path& p, int r) {
  std::vector<int> nodes = path_nodes(inst, p);
  std::vector<Rat> profile;
  profile.reserve(nodes.size());
  Rat t = 0;
  if (inst.wait == WaitPolicy::kWait) {
    t = std::max(Rat(0), inst.window_lo[inst.source][r]);
  }
  profile.push_back(t);
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    t += inst.arcs[p.arcs[i]].consumption[r];
    if (inst.wait == WaitPolicy::kWait) {
      t = std::max(t, inst.window_lo[nodes[i + 1]][r]);
    }
    profile.push_back(t);
  }
  return profile;
}

}  // namespace

Rat path_consumption(const Instance& inst, const Path& p, int r) {
  if (r < 0 || r >= inst.resource_count) {
    throw ValidationError("resource index out of range");
  }
  return arrival_profile(inst, p, r).back();
}

std::vector<Rat> path_consumption_vec(const Instance& inst, const Path& p) {
  std::vector<Rat> out;
  out.reserve(inst.resource_count);
  for (int r = 0; r < inst.resource_count; ++r) {
    out.push_back(path_consumption(inst, p, r));
  }
  return out;
}

bool is_feasible(const Instance& inst, const Path& p) {
  std::vector<int> nodes = path_nodes(inst, p);
  for (int r = 0; r < inst.resource_count; ++r) {
    std::vector<Rat> profile = arrival_profile(inst, p, r);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (profile[i] > inst.window_hi[nodes[i]][r]) return false;
      if (inst.wait == WaitPolicy::kNoWait &&
          profile[i] < inst.window_lo[nodes[i]][r]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<int>> topological_order(const Instance& inst) {
  std::vector<int> indegree(inst.node_count, 0);
  for (const Arc& a : inst.arcs) ++indegree[a.head];
  std::vector<std::vector<int>> out(inst.node_count);
  for (std::size_t k = 0; k < inst.arcs.size(); ++k) {
    out[inst.arcs[k].tail].push_back(inst.arcs[k].head);
  }
  std::vector<int> order;
  std::vector<bool> queued(inst.node_count, false);
  while (static_cast<int>(order.size()) < inst.node_count) {
    int pick = -1;
    for (int i = 0; i < inst.node_count; ++i) {
      if (!queued[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return std::nullopt;  // every remaining node sits on a cycle
    queued[pick] = true;
    order.push_back(pick);
    for (int h : out[pick]) --indegree[h];
  }
  return order;
}

bool is_acyclic(const Instance& inst) {
  return topological_order(inst).has_value();
}

}  // namespace rcsp
