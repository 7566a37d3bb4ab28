// Copyright 2026 The qadd Authors.
//
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

/*!
  \file measure.hpp
  \brief Gate count, wiring and critical-path measurement on a netlist

  Every gate has unit delay and wires are free. Two depth figures are
  reported for each scoped signal:

  - `unit`: the longest gate path from any source.
  - `stage`: the sum-of-products stage depth. An Or gate together with the
    And gates that feed it forms one two-level stage costing two gate
    delays, entered when the last of the stage's operands arrives. All
    other gates cost one delay. This is the level-counting model that the
    lookahead delay figures (6 and 4 + 2 ceil(log2 n)) are stated in; for a
    ripple chain both figures coincide.

  Counting conventions are explicit because the published figures mix them:
  whether And(x, 1) masks are counted, whether the per-qudit P/G stage is
  inside the scope, who pays for gates shared with the sum logic, and
  whether wide gates are first lowered to fan-in 2.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "netlist.hpp"

namespace qadd {

enum class mask_counting { included, excluded };
enum class pg_stage { included, excluded };
enum class shared_attribution { carry, sum };
enum class fanin_model { native, binary };
enum class signal_scope { carry_network, sum_carries, full_adder };

struct conventions {
  mask_counting mask = mask_counting::included;
  pg_stage pg = pg_stage::included;
  shared_attribution shared = shared_attribution::carry;
  fanin_model fanin = fanin_model::native;

  friend bool operator==(const conventions&, const conventions&) = default;
};

constexpr std::string_view to_string(mask_counting m) { return m == mask_counting::included ? "included" : "excluded"; }
constexpr std::string_view to_string(pg_stage p) { return p == pg_stage::included ? "included" : "excluded"; }
constexpr std::string_view to_string(shared_attribution s) { return s == shared_attribution::carry ? "carry" : "sum"; }
constexpr std::string_view to_string(fanin_model f) { return f == fanin_model::native ? "native" : "binary"; }
constexpr std::string_view to_string(signal_scope s) {
  switch (s) {
    case signal_scope::carry_network: return "carry-network";
    case signal_scope::sum_carries: return "sum-carries";
    case signal_scope::full_adder: return "full-adder";
  }
  return "?";
}

/// Carry signals are named c2..c{n+1} (carry into qudit i, as consumed;
/// c{n+1} is the carry-out).
inline std::vector<std::string> scope_signals(const netlist& nl, signal_scope scope) {
  std::vector<std::string> names;
  const auto n = nl.width();
  switch (scope) {
    case signal_scope::carry_network:
      for (std::size_t i = 2; i <= n + 1; ++i) names.push_back("c" + std::to_string(i));
      break;
    case signal_scope::sum_carries:
      for (std::size_t i = 2; i <= n; ++i) names.push_back("c" + std::to_string(i));
      break;
    case signal_scope::full_adder:
      for (std::size_t i = 1; i <= n; ++i) names.push_back("S" + std::to_string(i));
      names.push_back("cout");
      break;
  }
  return names;
}

/// Names P<k> and G<k>: outputs of the per-qudit propagate/generate stage.
inline bool is_pg_signal_name(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'P' && name[0] != 'G')) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct signal_depth {
  int unit = 0;
  int stage = 0;

  friend bool operator==(const signal_depth&, const signal_depth&) = default;
};

/// Where the counted figures came from. Mask and shared entries are always
/// filled, whether or not the convention excluded them from the totals.
struct cost_items {
  std::size_t mask_gates = 0;
  std::size_t mask_inputs = 0;
  std::size_t shared_gates = 0;  // also feed logic outside the scope
  std::size_t shared_inputs = 0;
  std::size_t pg_gates = 0;  // inside the cone of a P<k>/G<k> signal
  std::size_t pg_inputs = 0;

  friend bool operator==(const cost_items&, const cost_items&) = default;
};

struct cost_report {
  std::size_t gate_count = 0;
  std::size_t input_count = 0;
  int depth = 0;        // unit-delay critical path over the scope
  int stage_depth = 0;  // sum-of-products stage depth over the scope
  std::size_t max_fan_in = 0;
  std::map<std::string, signal_depth> per_signal;
  cost_items items;
  conventions conv;
  std::string scope;
};

namespace detail {

struct arrival {
  std::vector<int> unit;
  std::vector<int> stage;
};

inline arrival arrival_times(const netlist& nl, const std::vector<bool>& boundary, mask_counting mask) {
  const auto count = nl.size();
  arrival t{std::vector<int>(count, 0), std::vector<int>(count, 0)};
  const bool skip_masks = mask == mask_counting::excluded;

  auto is_product = [&](node_id id) { return !boundary[id] && nl.at(id).kind == gate_kind::and_gate; };

  for (node_id id = 0; id < count; ++id) {
    const auto& n = nl.at(id);
    if (is_source(n.kind) || boundary[id]) {
      continue;
    }
    if (skip_masks && nl.is_mask(id)) {
      const auto x = nl.masked_operand(id);
      t.unit[id] = t.unit[x];
      t.stage[id] = t.stage[x];
      continue;
    }
    int unit = 0;
    for (auto f : n.fanins) unit = std::max(unit, t.unit[f]);
    t.unit[id] = unit + 1;

    if (n.kind == gate_kind::or_gate) {
      int lead = 0;
      for (auto f : n.fanins) {
        if (is_product(f)) {
          for (auto g : nl.at(f).fanins) lead = std::max(lead, t.stage[g]);
        } else {
          lead = std::max(lead, t.stage[f]);
        }
      }
      t.stage[id] = lead + 2;
    } else {
      int lead = 0;
      for (auto f : n.fanins) lead = std::max(lead, t.stage[f]);
      t.stage[id] = lead + 1;
    }
  }
  return t;
}

/// Marks nodes reachable backwards from `roots`, not expanding past sources
/// or boundary nodes (which are marked themselves).
inline std::vector<bool> cone(const netlist& nl, std::span<const node_id> roots, const std::vector<bool>& boundary) {
  std::vector<bool> in(nl.size(), false);
  std::vector<node_id> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    if (in[id]) {
      continue;
    }
    in[id] = true;
    if (boundary[id]) {
      continue;
    }
    for (auto f : nl.at(id).fanins) {
      if (!in[f]) stack.push_back(f);
    }
  }
  return in;
}

}  // namespace detail

/// Measures the cone of influence of the named signals.
inline cost_report measure(const netlist& source, std::span<const std::string> scope, const conventions& conv = {}) {
  if (conv.fanin == fanin_model::binary) {
    auto inner = conv;
    inner.fanin = fanin_model::native;
    auto report = measure(lower_to_binary(source), scope, inner);
    report.conv = conv;
    return report;
  }
  const auto& nl = source;

  std::vector<node_id> roots;
  roots.reserve(scope.size());
  for (const auto& name : scope) {
    roots.push_back(nl.find(name));
  }

  std::vector<bool> pg_nodes(nl.size(), false);
  std::vector<node_id> pg_roots;
  for (const auto& [name, id] : nl.signals()) {
    if (is_pg_signal_name(name)) {
      pg_nodes[id] = true;
      pg_roots.push_back(id);
    }
  }
  const std::vector<bool> no_boundary(nl.size(), false);
  const auto& boundary = conv.pg == pg_stage::excluded ? pg_nodes : no_boundary;

  const auto in_scope = detail::cone(nl, roots, boundary);
  const auto in_pg = detail::cone(nl, pg_roots, no_boundary);

  std::vector<bool> feeds_outside(nl.size(), false);
  for (node_id id = 0; id < nl.size(); ++id) {
    if (in_scope[id]) {
      continue;
    }
    for (auto f : nl.at(id).fanins) {
      feeds_outside[f] = true;
    }
  }

  cost_report report;
  report.conv = conv;
  for (node_id id = 0; id < nl.size(); ++id) {
    const auto& n = nl.at(id);
    if (!in_scope[id] || is_source(n.kind) || boundary[id]) {
      continue;
    }
    const auto fan_in = n.fanins.size();
    const bool mask = nl.is_mask(id);
    const bool shared = feeds_outside[id];
    if (mask) {
      report.items.mask_gates += 1;
      report.items.mask_inputs += fan_in;
    }
    if (shared) {
      report.items.shared_gates += 1;
      report.items.shared_inputs += fan_in;
    }
    if (in_pg[id]) {
      report.items.pg_gates += 1;
      report.items.pg_inputs += fan_in;
    }
    if (mask && conv.mask == mask_counting::excluded) {
      continue;
    }
    if (shared && conv.shared == shared_attribution::sum) {
      continue;
    }
    report.gate_count += 1;
    report.input_count += fan_in;
    report.max_fan_in = std::max(report.max_fan_in, fan_in);
  }

  const auto times = detail::arrival_times(nl, boundary, conv.mask);
  for (std::size_t k = 0; k < scope.size(); ++k) {
    const signal_depth d{times.unit[roots[k]], times.stage[roots[k]]};
    report.per_signal[scope[k]] = d;
    report.depth = std::max(report.depth, d.unit);
    report.stage_depth = std::max(report.stage_depth, d.stage);
  }
  return report;
}

inline cost_report measure(const netlist& nl, signal_scope scope, const conventions& conv = {}) {
  const auto names = scope_signals(nl, scope);
  auto report = measure(nl, names, conv);
  report.scope = std::string(to_string(scope));
  return report;
}

}  // namespace qadd
