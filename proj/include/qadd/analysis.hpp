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
  \file analysis.hpp
  \brief Closed-form delay/cost of the carry networks and measured comparison

  The closed forms cover the carry generation circuit only (the sum logic is
  identical across architectures). They are evaluated in exact integer
  arithmetic. Sparse and hybrid adders have no closed form.
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "adders.hpp"
#include "errors.hpp"
#include "measure.hpp"

namespace qadd {

constexpr std::int64_t floor_log2(std::int64_t n) {
  std::int64_t s = 0;
  while ((std::int64_t{2} << s) <= n) ++s;
  return s;
}

constexpr std::int64_t ceil_log2(std::int64_t n) {
  std::int64_t s = 0;
  while ((std::int64_t{1} << s) < n) ++s;
  return s;
}

constexpr std::int64_t pow2(std::int64_t e) { return std::int64_t{1} << e; }

/* single-stage cost of the carry leaving qudit i */
constexpr std::int64_t single_stage_qudit_gates(std::int64_t i) { return 2 * i + 7; }
constexpr std::int64_t single_stage_qudit_inputs(std::int64_t i) { return i * i + 5 * i + 11; }

struct closed_form {
  adder_kind kind = adder_kind::ripple;
  std::int64_t n = 0;
  std::int64_t s = 0;  // floor(log2 n)
  std::int64_t delay = 0;
  std::int64_t gates = 0;
  std::int64_t inputs = 0;
  // tree only: the two halves of `gates` / `inputs`
  std::int64_t product_gates = 0;
  std::int64_t product_inputs = 0;
  std::int64_t carry_gates = 0;
  std::int64_t carry_inputs = 0;

  friend bool operator==(const closed_form&, const closed_form&) = default;
};

/// Carry-network delay, gate and input counts. std::nullopt for the sparse
/// and hybrid adders, which have no closed form.
inline std::optional<closed_form> closed_form_of(adder_kind kind, std::int64_t n) {
  if (n < 1) {
    throw invalid_spec("closed forms need n >= 1");
  }
  closed_form cf;
  cf.kind = kind;
  cf.n = n;
  cf.s = floor_log2(n);
  const auto s = cf.s;
  switch (kind) {
    case adder_kind::ripple:
      cf.delay = 5 * n;
      cf.gates = 9 * n;
      cf.inputs = 19 * n;
      return cf;
    case adder_kind::single_stage: {
      cf.delay = 6;
      cf.gates = n * n + 8 * n;
      const auto numerator = n * n * n + 9 * n * n + 41 * n;
      if (numerator % 3 != 0) {
        throw error("single-stage input count is not integral at n=" + std::to_string(n));
      }
      cf.inputs = numerator / 3;
      return cf;
    }
    case adder_kind::tree:
      cf.delay = 4 + 2 * ceil_log2(n);
      cf.product_gates = s * (n + 1) - pow2(s + 1) + 2;
      cf.product_inputs = 2 * s * (n + 1) - pow2(s + 2) + 4;
      cf.carry_gates = 2 * (s * n + s + n) - pow2(s + 2) + 4;
      cf.carry_inputs = 4 * (s * n + s + n) - pow2(s + 3) + 8;
      cf.gates = cf.product_gates + cf.carry_gates;
      cf.inputs = cf.product_inputs + cf.carry_inputs;
      return cf;
    case adder_kind::sparse:
    case adder_kind::hybrid: return std::nullopt;
  }
  throw invalid_spec("unknown adder kind");
}

/// Conventions for the delay measurement and for the count measurement.
struct comparison_conventions {
  conventions delay;
  signal_scope delay_scope = signal_scope::carry_network;
  conventions count;
  signal_scope count_scope = signal_scope::carry_network;
};

/*! \brief The conventions under which each closed form is stated
 *
 * - ripple: delay with masks (5 per qudit); counts without (9 gates).
 * - single_stage: unmasked carries; the per-qudit P/G stage is part of the
 *   per-carry cost.
 * - tree: delay over the carries the sums consume (Q(i,1), i <= n); counts
 *   over every Q(i,1) including the carry-out, tree gates only.
 * - sparse/hybrid: same as the tree delay setting, full cone for counts.
 */
inline comparison_conventions documented_conventions(adder_kind kind) {
  comparison_conventions c;
  switch (kind) {
    case adder_kind::ripple:
      c.delay.mask = mask_counting::included;
      c.count.mask = mask_counting::excluded;
      break;
    case adder_kind::single_stage:
      c.delay.mask = mask_counting::excluded;
      c.count.mask = mask_counting::excluded;
      break;
    case adder_kind::tree:
      c.delay.mask = mask_counting::excluded;
      c.delay_scope = signal_scope::sum_carries;
      c.count.mask = mask_counting::excluded;
      c.count.pg = pg_stage::excluded;
      break;
    case adder_kind::sparse:
    case adder_kind::hybrid:
      c.delay.mask = mask_counting::excluded;
      c.count.mask = mask_counting::excluded;
      break;
  }
  return c;
}

struct deviation {
  std::int64_t absolute = 0;  // measured - closed form
  double relative = 0.0;      // absolute / closed form
};

inline deviation deviation_of(std::int64_t measured, std::int64_t expected) {
  deviation d;
  d.absolute = measured - expected;
  d.relative = expected == 0 ? (measured == 0 ? 0.0 : 1.0) : static_cast<double>(d.absolute) / static_cast<double>(expected);
  return d;
}

struct comparison_row {
  adder_spec spec;
  std::optional<closed_form> cf;
  int meas_delay = 0;       // stage depth
  int meas_unit_delay = 0;  // unit-delay critical path
  std::int64_t meas_gates = 0;
  std::int64_t meas_inputs = 0;
  std::int64_t max_fan_in = 0;
  cost_items items;
  comparison_conventions conv;
  std::optional<deviation> delay_dev;
  std::optional<deviation> gates_dev;
  std::optional<deviation> inputs_dev;
  std::vector<std::string> notes;  // one line per deviation source
};

inline std::string describe(const conventions& c) {
  std::string out = "mask=" + std::string(to_string(c.mask)) + ";pg=" + std::string(to_string(c.pg)) +
                    ";shared=" + std::string(to_string(c.shared)) + ";fanin=" + std::string(to_string(c.fanin));
  return out;
}

inline std::string describe(const comparison_conventions& c) {
  return "delay[" + describe(c.delay) + ";scope=" + std::string(to_string(c.delay_scope)) + "] count[" +
         describe(c.count) + ";scope=" + std::string(to_string(c.count_scope)) + "]";
}

inline comparison_row compare(const netlist& nl, const adder_spec& spec, const comparison_conventions& conv) {
  comparison_row row;
  row.spec = spec;
  row.conv = conv;
  row.cf = closed_form_of(spec.kind, static_cast<std::int64_t>(spec.width));

  const auto timing = measure(nl, conv.delay_scope, conv.delay);
  const auto counts = measure(nl, conv.count_scope, conv.count);
  row.meas_delay = timing.stage_depth;
  row.meas_unit_delay = timing.depth;
  row.meas_gates = static_cast<std::int64_t>(counts.gate_count);
  row.meas_inputs = static_cast<std::int64_t>(counts.input_count);
  row.max_fan_in = static_cast<std::int64_t>(counts.max_fan_in);
  row.items = counts.items;

  auto verdict = [](bool excluded) { return excluded ? "excluded from totals" : "counted"; };
  const auto& it = counts.items;
  row.notes.push_back("mask gates And(x,1) in scope: " + std::to_string(it.mask_gates) + " gates, " +
                      std::to_string(it.mask_inputs) + " inputs, " +
                      verdict(conv.count.mask == mask_counting::excluded));
  row.notes.push_back("gates shared with logic outside the scope: " + std::to_string(it.shared_gates) + " gates, " +
                      std::to_string(it.shared_inputs) + " inputs, attributed to " +
                      std::string(to_string(conv.count.shared)));
  row.notes.push_back("P/G stage: " + std::to_string(it.pg_gates) + " gates, " + std::to_string(it.pg_inputs) +
                      " inputs, " + (conv.count.pg == pg_stage::excluded ? "outside scope" : "counted"));
  row.notes.push_back("fan-in model: " + std::string(to_string(conv.count.fanin)));
  if (timing.depth != timing.stage_depth) {
    row.notes.push_back("unit-delay critical path " + std::to_string(timing.depth) + " differs from stage depth " +
                        std::to_string(timing.stage_depth));
  }

  if (row.cf) {
    row.delay_dev = deviation_of(row.meas_delay, row.cf->delay);
    row.gates_dev = deviation_of(row.meas_gates, row.cf->gates);
    row.inputs_dev = deviation_of(row.meas_inputs, row.cf->inputs);
  } else {
    row.notes.push_back("no closed form for " + std::string(to_string(spec.kind)));
  }
  return row;
}

inline comparison_row compare(const adder_spec& spec, const comparison_conventions& conv) {
  return compare(build(spec), spec, conv);
}

inline comparison_row compare(const adder_spec& spec) { return compare(spec, documented_conventions(spec.kind)); }

/* sweep */

struct sweep_options {
  std::optional<mask_counting> mask;  // overrides both delay and count masks
  std::size_t sparsity = 4;
  std::size_t block = 4;  // clipped to the width
  unsigned threads = 0;   // 0: hardware concurrency
};

inline const char* sweep_header() {
  return "kind,n,cf_delay,meas_delay,cf_gates,meas_gates,cf_inputs,meas_inputs,max_fan_in,conventions,meas_unit_delay";
}

inline adder_spec sweep_spec(adder_kind kind, std::size_t n, const sweep_options& options) {
  return adder_spec{kind, n, options.sparsity, std::min(options.block, n)};
}

inline comparison_conventions sweep_conventions(adder_kind kind, const sweep_options& options) {
  auto conv = documented_conventions(kind);
  if (options.mask) {
    conv.delay.mask = *options.mask;
    conv.count.mask = *options.mask;
  }
  return conv;
}

inline std::string csv_line(const comparison_row& row) {
  std::ostringstream os;
  auto opt = [&](auto value) {
    if (row.cf) os << value;
  };
  os << to_string(row.spec.kind) << ',' << row.spec.width << ',';
  opt(row.cf ? row.cf->delay : 0);
  os << ',' << row.meas_delay << ',';
  opt(row.cf ? row.cf->gates : 0);
  os << ',' << row.meas_gates << ',';
  opt(row.cf ? row.cf->inputs : 0);
  os << ',' << row.meas_inputs << ',' << row.max_fan_in << ',' << describe(row.conv) << ',' << row.meas_unit_delay;
  return os.str();
}

/// One row per (kind, width), kinds outermost. Cells are computed
/// concurrently; the output order is fixed.
inline std::vector<comparison_row> sweep(const std::vector<adder_kind>& kinds, const std::vector<std::size_t>& widths,
                                         const sweep_options& options = {}) {
  if (kinds.empty() || widths.empty()) {
    throw invalid_spec("sweep needs at least one kind and one width");
  }
  std::vector<adder_spec> specs;
  for (auto kind : kinds) {
    for (auto n : widths) {
      auto spec = sweep_spec(kind, n, options);
      spec.validate();
      specs.push_back(spec);
    }
  }
  std::vector<std::optional<comparison_row>> rows(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (auto i = next++; i < specs.size(); i = next++) {
      try {
        rows[i] = compare(specs[i], sweep_conventions(specs[i].kind, options));
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const auto hw = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto count = std::min<std::size_t>(hw, specs.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  std::vector<comparison_row> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(*row));
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<comparison_row>& rows) {
  os << sweep_header() << '\n';
  for (const auto& row : rows) {
    os << csv_line(row) << '\n';
  }
}

}  // namespace qadd
