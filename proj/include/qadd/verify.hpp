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
  \file verify.hpp
  \brief Integer oracle and equivalence checks for adder netlists

  The oracle converts words to unbounded integers and adds them; it uses no
  qudit operator. Random mode draws digits from the raw output bits of
  std::mt19937_64 (two bits per digit), so a report is reproducible from its
  seed on every conforming standard library.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "cells.hpp"
#include "errors.hpp"
#include "netlist.hpp"
#include "qudit.hpp"
#include "qword.hpp"

namespace qadd {

struct oracle_result {
  qword sum;
  qudit cout;

  friend bool operator==(const oracle_result&, const oracle_result&) = default;
};

using big_int = boost::multiprecision::cpp_int;

/// Sum of digit_i * 4^(i-1).
inline big_int value_of(const qword& w) {
  big_int v = 0;
  for (auto it = w.digits().rbegin(); it != w.digits().rend(); ++it) {
    v = v * 4 + it->value();
  }
  return v;
}

/// Inverse of value_of at a fixed width; the value must fit.
inline qword digitize(big_int v, std::size_t width) {
  if (v < 0) {
    throw contract_violation("cannot digitize a negative value");
  }
  std::vector<qudit> digits;
  digits.reserve(width);
  for (std::size_t i = 0; i < width; ++i) {
    digits.emplace_back(static_cast<int>(v % 4));
    v /= 4;
  }
  if (v != 0) {
    throw contract_violation("value does not fit in " + std::to_string(width) + " qudits");
  }
  return qword{std::move(digits)};
}

inline oracle_result oracle_add(const qword& a, const qword& b, qudit cin) {
  if (a.width() != b.width()) {
    throw width_mismatch("operand widths differ: " + std::to_string(a.width()) + " vs " + std::to_string(b.width()));
  }
  if (cin.value() > 1) {
    throw contract_violation("carry-in must be 0 or 1, got " + std::to_string(cin.value()));
  }
  const auto n = a.width();
  const big_int modulus = big_int{1} << (2 * n);
  const big_int total = value_of(a) + value_of(b) + cin.value();
  const bool carry = total >= modulus;
  return {digitize(carry ? total - modulus : total, n), qudit{carry ? 1 : 0}};
}

enum class verify_mode { exhaustive, random, truth_tables };

constexpr std::string_view to_string(verify_mode m) {
  switch (m) {
    case verify_mode::exhaustive: return "exhaustive";
    case verify_mode::random: return "random";
    case verify_mode::truth_tables: return "truth-tables";
  }
  return "?";
}

/// Operands are most-significant-first strings, as printed by the CLI.
struct mismatch {
  std::string a;
  std::string b;
  int cin = 0;
  std::string expected;
  std::string actual;
  std::string signal;

  auto key() const { return std::tie(a, b, cin, signal); }
  friend bool operator==(const mismatch&, const mismatch&) = default;
};

struct verify_report {
  verify_mode mode = verify_mode::exhaustive;
  std::string architecture;
  std::size_t width = 0;
  std::uint64_t cases_run = 0;
  std::optional<std::uint64_t> seed;
  std::vector<mismatch> mismatches;
  std::vector<std::string> divergences;

  bool passed() const { return mismatches.empty(); }
};

inline nlohmann::ordered_json to_json(const verify_report& r) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["version"] = 1;
  doc["mode"] = std::string(to_string(r.mode));
  if (r.mode != verify_mode::truth_tables) {
    doc["kind"] = r.architecture;
    doc["width"] = r.width;
  }
  doc["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  doc["cases_run"] = r.cases_run;
  doc["verdict"] = r.passed() ? "pass" : "fail";
  json list = json::array();
  for (const auto& m : r.mismatches) {
    json entry;
    entry["inputs"] = {{"a", m.a}, {"b", m.b}, {"cin", m.cin}};
    entry["expected"] = m.expected;
    entry["actual"] = m.actual;
    entry["signal"] = m.signal;
    list.push_back(std::move(entry));
  }
  doc["mismatches"] = std::move(list);
  doc["divergences"] = r.divergences;
  return doc;
}

inline std::string export_json(const verify_report& r) { return to_json(r).dump(2) + "\n"; }

inline constexpr std::size_t default_exhaustive_bound = 4;

namespace detail {

inline std::string outputs_text(const qword& s, qudit c) { return "S=" + s.to_msd_string() + " C=" + std::to_string(c.value()); }

/// Runs one assignment and appends a mismatch entry when outputs differ.
class case_runner {
 public:
  explicit case_runner(const netlist& nl) : nl_(nl), n_(nl.width()), inputs_(2 * n_ + 1) { nl.validate(); }

  void run(const qword& a, const qword& b, qudit cin, std::vector<mismatch>& out) {
    for (std::size_t i = 0; i < n_; ++i) {
      inputs_[i] = static_cast<std::uint8_t>(a.digits()[i].value());
      inputs_[n_ + i] = static_cast<std::uint8_t>(b.digits()[i].value());
    }
    inputs_[2 * n_] = static_cast<std::uint8_t>(cin.value());
    nl_.simulate(inputs_, values_);
    const auto expected = oracle_add(a, b, cin);

    std::string signals;
    qword actual(n_);
    for (std::size_t i = 1; i <= n_; ++i) {
      actual.set(i, qudit{values_[nl_.sum(i)]});
      if (actual.at(i) != expected.sum.at(i)) {
        signals += (signals.empty() ? "S" : ",S") + std::to_string(i);
      }
    }
    const qudit cout{values_[nl_.cout()]};
    if (cout != expected.cout) {
      signals += signals.empty() ? "cout" : ",cout";
    }
    if (!signals.empty()) {
      out.push_back({a.to_msd_string(), b.to_msd_string(), cin.value(), outputs_text(expected.sum, expected.cout),
                     outputs_text(actual, cout), std::move(signals)});
    }
  }

 private:
  const netlist& nl_;
  std::size_t n_;
  std::vector<std::uint8_t> inputs_;
  std::vector<std::uint8_t> values_;
};

inline void canonicalize(std::vector<mismatch>& list) {
  std::sort(list.begin(), list.end(), [](const mismatch& x, const mismatch& y) { return x.key() < y.key(); });
}

}  // namespace detail

/// All 4^n * 4^n * 2 assignments. Throws bound_exceeded above `bound`.
inline verify_report check_exhaustive(const netlist& nl, std::size_t bound = default_exhaustive_bound) {
  const auto n = nl.width();
  if (n > bound) {
    throw bound_exceeded("exhaustive check is limited to width " + std::to_string(bound) + " (got " +
                         std::to_string(n) + "); use random mode");
  }
  verify_report report;
  report.mode = verify_mode::exhaustive;
  report.architecture = nl.architecture();
  report.width = n;

  detail::case_runner runner(nl);
  const std::uint64_t words = std::uint64_t{1} << (2 * n);
  qword a(n), b(n);
  auto assign = [n](qword& w, std::uint64_t v) {
    for (std::size_t i = 1; i <= n; ++i, v >>= 2) {
      w.set(i, qudit{static_cast<int>(v & 3)});
    }
  };
  for (std::uint64_t x = 0; x < words; ++x) {
    assign(a, x);
    for (std::uint64_t y = 0; y < words; ++y) {
      assign(b, y);
      for (int c = 0; c <= 1; ++c) {
        runner.run(a, b, qudit{c}, report.mismatches);
        ++report.cases_run;
      }
    }
  }
  detail::canonicalize(report.mismatches);
  return report;
}

struct test_vector {
  qword a;
  qword b;
  qudit cin;
};

/// Fixed vectors run before the random ones: all-0, all-3, alternating 1/2
/// and, per position, single-qudit extremes. Each with cin 0 and 1.
inline std::vector<test_vector> corner_vectors(std::size_t n) {
  std::vector<std::pair<qword, qword>> operands;
  const qword zeros(n, qudit{0});
  const qword threes(n, qudit{3});
  qword ones_twos(n), twos_ones(n);
  for (std::size_t i = 1; i <= n; ++i) {
    ones_twos.set(i, qudit{i % 2 == 1 ? 1 : 2});
    twos_ones.set(i, qudit{i % 2 == 1 ? 2 : 1});
  }
  operands.emplace_back(zeros, zeros);
  operands.emplace_back(threes, threes);
  operands.emplace_back(threes, zeros);
  operands.emplace_back(ones_twos, twos_ones);
  operands.emplace_back(ones_twos, ones_twos);
  for (std::size_t i = 1; i <= n; ++i) {
    qword single = zeros;
    single.set(i, qudit{3});
    qword hole = threes;
    hole.set(i, qudit{0});
    operands.emplace_back(single, threes);
    operands.emplace_back(single, single);
    operands.emplace_back(hole, zeros);
  }
  std::vector<test_vector> out;
  out.reserve(2 * operands.size());
  for (const auto& [a, b] : operands) {
    out.push_back({a, b, qudit{0}});
    out.push_back({a, b, qudit{1}});
  }
  return out;
}

/// Draws uniform digits two raw bits at a time.
class digit_source {
 public:
  explicit digit_source(std::uint64_t seed) : engine_(seed) {}

  qudit digit() { return qudit{static_cast<int>(take(2))}; }
  qudit carry() { return qudit{static_cast<int>(take(1))}; }

  qword word(std::size_t n) {
    qword w(n);
    for (std::size_t i = 1; i <= n; ++i) {
      w.set(i, digit());
    }
    return w;
  }

 private:
  std::uint64_t take(int bits) {
    if (available_ < bits) {
      pool_ = engine_();
      available_ = 64;
    }
    const auto v = pool_ & ((std::uint64_t{1} << bits) - 1);
    pool_ >>= bits;
    available_ -= bits;
    return v;
  }

  std::mt19937_64 engine_;
  std::uint64_t pool_ = 0;
  int available_ = 0;
};

inline verify_report check_random(const netlist& nl, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) {
    throw contract_violation("random mode needs at least one trial");
  }
  const auto n = nl.width();
  verify_report report;
  report.mode = verify_mode::random;
  report.architecture = nl.architecture();
  report.width = n;
  report.seed = seed;

  detail::case_runner runner(nl);
  for (const auto& v : corner_vectors(n)) {
    runner.run(v.a, v.b, v.cin, report.mismatches);
    ++report.cases_run;
  }
  digit_source source(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto a = source.word(n);
    auto b = source.word(n);
    const auto cin = source.carry();
    runner.run(a, b, cin, report.mismatches);
    ++report.cases_run;
  }
  detail::canonicalize(report.mismatches);
  report.mismatches.erase(std::unique(report.mismatches.begin(), report.mismatches.end()), report.mismatches.end());
  return report;
}

/* published tables */

struct operator_row {
  int a, b;
  int and_, or_, xor_, nand, nor, xnor;
};

/// Multi-input operator table as printed.
inline constexpr std::array<operator_row, 10> published_operator_table{{
    {0, 0, 0, 0, 0, 3, 3, 3},
    {0, 1, 0, 1, 1, 3, 2, 2},
    {0, 2, 0, 2, 2, 3, 1, 1},
    {0, 3, 0, 3, 3, 3, 0, 0},
    {1, 1, 1, 1, 0, 2, 2, 3},
    {1, 2, 0, 3, 3, 3, 0, 0},
    {1, 3, 1, 3, 2, 2, 0, 1},
    {2, 2, 2, 2, 0, 1, 1, 3},
    {2, 3, 2, 3, 1, 1, 0, 2},
    {3, 3, 3, 3, 0, 0, 0, 3},
}};

struct adder_row {
  int a, b, cin, s, c;
};

/// Full adder table as printed, including the (0, 3, 1) entry whose sum
/// digit reads 1.
inline constexpr std::array<adder_row, 20> published_adder_table{{
    {0, 0, 0, 0, 0}, {0, 1, 0, 1, 0}, {0, 2, 0, 2, 0}, {0, 3, 0, 3, 0}, {1, 1, 0, 2, 0},
    {1, 2, 0, 3, 0}, {1, 3, 0, 0, 1}, {2, 2, 0, 0, 1}, {2, 3, 0, 1, 1}, {3, 3, 0, 2, 1},
    {0, 0, 1, 1, 0}, {0, 1, 1, 2, 0}, {0, 2, 1, 3, 0}, {0, 3, 1, 1, 1}, {1, 1, 1, 3, 0},
    {1, 2, 1, 0, 1}, {1, 3, 1, 1, 1}, {2, 2, 1, 1, 1}, {2, 3, 1, 2, 1}, {3, 3, 1, 3, 1},
}};

/// The one printed entry that disagrees with integer addition.
inline constexpr adder_row known_adder_divergence{0, 3, 1, 1, 1};

/// Re-derives both tables. Operator entries are checked in both operand
/// orders (60 printed cells plus the 10 mirrored rows). The known misprint
/// is checked against the oracle instead and listed under divergences; any
/// other disagreement is a mismatch.
inline verify_report check_truth_tables() {
  verify_report report;
  report.mode = verify_mode::truth_tables;
  report.width = 1;
  auto fail = [&](std::string signal, int a, int b, int cin, int expected, int actual) {
    report.mismatches.push_back({std::to_string(a), std::to_string(b), cin, std::to_string(expected),
                                 std::to_string(actual), std::move(signal)});
  };
  for (const auto& row : published_operator_table) {
    const qudit a{row.a}, b{row.b};
    const std::array<std::pair<const char*, std::pair<int, int>>, 6> cells{{
        {"and", {row.and_, qand(a, b).value()}},
        {"or", {row.or_, qor(a, b).value()}},
        {"xor", {row.xor_, qxor(a, b).value()}},
        {"nand", {row.nand, qnand(a, b).value()}},
        {"nor", {row.nor, qnor(a, b).value()}},
        {"xnor", {row.xnor, qxnor(a, b).value()}},
    }};
    for (const auto& [name, values] : cells) {
      ++report.cases_run;
      if (values.first != values.second) fail(name, row.a, row.b, 0, values.first, values.second);
    }
    ++report.cases_run;
    const bool mirrored = qand(b, a).value() == row.and_ && qor(b, a).value() == row.or_ &&
                          qxor(b, a).value() == row.xor_ && qnand(b, a).value() == row.nand &&
                          qnor(b, a).value() == row.nor && qxnor(b, a).value() == row.xnor;
    if (!mirrored) fail("mirror", row.b, row.a, 0, 1, 0);
  }
  for (const auto& row : published_adder_table) {
    const qudit a{row.a}, b{row.b}, cin{row.cin};
    const auto cell = full_add(a, b, cin);
    const auto truth = oracle_add(qword{row.a}, qword{row.b}, cin);
    ++report.cases_run;
    const bool misprint = row.a == known_adder_divergence.a && row.b == known_adder_divergence.b &&
                          row.cin == known_adder_divergence.cin;
    const int want_s = misprint ? truth.sum.at(1).value() : row.s;
    const int want_c = misprint ? truth.cout.value() : row.c;
    if (cell.sum.value() != want_s) fail("S", row.a, row.b, row.cin, want_s, cell.sum.value());
    if (cell.carry.value() != want_c) fail("C", row.a, row.b, row.cin, want_c, cell.carry.value());
    if (truth.sum.at(1).value() != want_s || truth.cout.value() != want_c) {
      fail("oracle", row.a, row.b, row.cin, want_s, truth.sum.at(1).value());
    }
    if (misprint) {
      report.divergences.push_back("full adder row A=0 B=3 cin=1: printed S=" + std::to_string(row.s) +
                                   " C=" + std::to_string(row.c) + ", integer addition gives S=" +
                                   std::to_string(want_s) + " C=" + std::to_string(want_c));
    }
  }
  detail::canonicalize(report.mismatches);
  return report;
}

/* mutation testing */

struct mutation {
  node_id gate = invalid_node;
  gate_kind from = gate_kind::and_gate;
  gate_kind to = gate_kind::or_gate;

  friend bool operator==(const mutation&, const mutation&) = default;
};

/// Every single-gate kind change that keeps the arity legal, on gates that
/// drive an output, in id order.
inline std::vector<mutation> mutation_candidates(const netlist& nl) {
  std::vector<bool> live(nl.size(), false);
  std::vector<node_id> stack;
  for (std::size_t i = 1; i <= nl.width(); ++i) stack.push_back(nl.sum(i));
  stack.push_back(nl.cout());
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    if (live[id]) continue;
    live[id] = true;
    for (auto f : nl.at(id).fanins) stack.push_back(f);
  }
  std::vector<mutation> out;
  for (node_id id = 0; id < nl.size(); ++id) {
    const auto kind = nl.at(id).kind;
    if (!live[id] || is_source(kind)) continue;
    for (auto to : all_gate_kinds) {
      if (to == kind || is_source(to) || is_variadic(to) != is_variadic(kind)) continue;
      out.push_back({id, kind, to});
    }
  }
  return out;
}

inline netlist apply(const netlist& nl, const mutation& m) {
  netlist copy = nl;
  copy.mutate_kind(m.gate, m.to);
  return copy;
}


namespace detail {

inline std::uint8_t eval_gate(gate_kind kind, std::span<const node_id> fanins, const std::vector<std::uint8_t>& values) {
  std::uint8_t v = 0;
  switch (kind) {
    case gate_kind::and_gate:
      v = 3;
      for (auto f : fanins) v &= values[f];
      break;
    case gate_kind::or_gate:
      for (auto f : fanins) v |= values[f];
      break;
    case gate_kind::xor_gate:
      for (auto f : fanins) v ^= values[f];
      break;
    case gate_kind::not_gate: v = not_table[values[fanins[0]]]; break;
    case gate_kind::inward: v = inward_table[values[fanins[0]]]; break;
    case gate_kind::outward: v = outward_table[values[fanins[0]]]; break;
    case gate_kind::bitswap: v = bitswap_table[values[fanins[0]]]; break;
    default: throw arity_error("not a logic gate");
  }
  return v;
}

}  // namespace detail

/// Per node, the bits of its value that can reach an output. Outputs care
/// about both bits; an And with constant operands passes on only the bits
/// set in the constants; bitswap exchanges the bits; everything else passes
/// the full care set.
inline std::vector<std::uint8_t> care_bits(const netlist& nl) {
  std::vector<std::uint8_t> care(nl.size(), 0);
  for (std::size_t i = 1; i <= nl.width(); ++i) care[nl.sum(i)] = 3;
  care[nl.cout()] = 3;
  for (auto id = static_cast<node_id>(nl.size()); id-- > 0;) {
    const auto& n = nl.at(id);
    if (care[id] == 0 || is_source(n.kind)) continue;
    std::uint8_t pass = care[id];
    if (n.kind == gate_kind::and_gate) {
      for (auto f : n.fanins) {
        if (nl.at(f).kind == gate_kind::constant) pass &= static_cast<std::uint8_t>(nl.at(f).value.value());
      }
    } else if (n.kind == gate_kind::bitswap) {
      pass = static_cast<std::uint8_t>(((pass & 1) << 1) | ((pass >> 1) & 1));
    } else if (n.kind == gate_kind::inward || n.kind == gate_kind::outward) {
      pass = 3;
    }
    for (auto f : n.fanins) care[f] |= pass;
  }
  return care;
}

/// True when the mutated gate never changes an observable bit of its value
/// on any input assignment (for example Or to Xor over operands with
/// disjoint bits, or a change confined to a bit a constant mask discards).
/// Such mutants cannot be detected at the outputs and are filtered out of
/// the catalogue. Exhaustive over the inputs, so only for small widths.
inline bool locally_equivalent(const netlist& nl, const mutation& m, std::size_t bound = default_exhaustive_bound) {
  const auto n = nl.width();
  if (n > bound) {
    throw bound_exceeded("local equivalence needs an exhaustive sweep; width " + std::to_string(n) + " is over the bound");
  }
  const auto& gate = nl.at(m.gate);
  const auto care = care_bits(nl)[m.gate];
  std::vector<std::uint8_t> inputs(2 * n + 1), values;
  const std::uint64_t assignments = std::uint64_t{1} << (4 * n + 1);
  for (std::uint64_t x = 0; x < assignments; ++x) {
    auto bits = x;
    for (std::size_t k = 0; k < 2 * n; ++k, bits >>= 2) inputs[k] = static_cast<std::uint8_t>(bits & 3);
    inputs[2 * n] = static_cast<std::uint8_t>(bits & 1);
    nl.simulate(inputs, values);
    if (((detail::eval_gate(m.to, gate.fanins, values) ^ values[m.gate]) & care) != 0) {
      return false;
    }
  }
  return true;
}

/// `count` distinct mutations drawn with std::mt19937_64 from the
/// candidates that are not locally equivalent.
inline std::vector<mutation> mutation_catalogue(const netlist& nl, std::size_t count, std::uint64_t seed) {
  std::vector<mutation> pool;
  for (const auto& m : mutation_candidates(nl)) {
    if (!locally_equivalent(nl, m)) pool.push_back(m);
  }
  if (pool.size() < count) {
    throw contract_violation("only " + std::to_string(pool.size()) + " non-equivalent mutations available");
  }
  std::mt19937_64 engine(seed);
  std::vector<mutation> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto pick = static_cast<std::size_t>(engine() % pool.size());
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace qadd
