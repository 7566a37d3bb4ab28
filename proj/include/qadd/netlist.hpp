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
  \file netlist.hpp
  \brief Gate-level netlist of unbounded fan-in quaternary gates

  A netlist is an adder-shaped DAG: it always owns the input ports A1..An,
  B1..Bn and cin (node ids 0..2n, in that order) and the output ports
  S1..Sn and cout. Node ids are dense and every fan-in id is smaller than
  the id of the node that reads it, so the node vector is a topological
  order and acyclicity holds by construction.

  Builders may attach names to internal nodes ("P3", "G3", "c4", ...) so
  that measurements can be scoped to a set of signals.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "qudit.hpp"
#include "qword.hpp"

namespace qadd {

using node_id = std::uint32_t;

inline constexpr node_id invalid_node = std::numeric_limits<node_id>::max();

enum class gate_kind : std::uint8_t { constant, input, and_gate, or_gate, xor_gate, not_gate, inward, outward, bitswap };

inline constexpr std::array<gate_kind, 9> all_gate_kinds{gate_kind::constant, gate_kind::input,    gate_kind::and_gate,
                                                         gate_kind::or_gate,  gate_kind::xor_gate, gate_kind::not_gate,
                                                         gate_kind::inward,   gate_kind::outward,  gate_kind::bitswap};

constexpr std::string_view to_string(gate_kind kind) {
  switch (kind) {
    case gate_kind::constant: return "const";
    case gate_kind::input: return "input";
    case gate_kind::and_gate: return "and";
    case gate_kind::or_gate: return "or";
    case gate_kind::xor_gate: return "xor";
    case gate_kind::not_gate: return "not";
    case gate_kind::inward: return "inward";
    case gate_kind::outward: return "outward";
    case gate_kind::bitswap: return "bitswap";
  }
  return "?";
}

inline std::optional<gate_kind> gate_kind_from_string(std::string_view text) {
  for (auto kind : all_gate_kinds) {
    if (to_string(kind) == text) {
      return kind;
    }
  }
  return std::nullopt;
}

constexpr bool is_variadic(gate_kind kind) {
  return kind == gate_kind::and_gate || kind == gate_kind::or_gate || kind == gate_kind::xor_gate;
}

constexpr bool is_unary(gate_kind kind) {
  return kind == gate_kind::not_gate || kind == gate_kind::inward || kind == gate_kind::outward ||
         kind == gate_kind::bitswap;
}

constexpr bool is_source(gate_kind kind) { return kind == gate_kind::constant || kind == gate_kind::input; }

inline void check_arity(gate_kind kind, std::size_t fan_in) {
  const bool ok = is_variadic(kind) ? fan_in >= 2 : is_unary(kind) ? fan_in == 1 : fan_in == 0;
  if (!ok) {
    throw arity_error(std::string(to_string(kind)) + " gate cannot take " + std::to_string(fan_in) + " inputs");
  }
}

namespace detail {

template<qudit (*Op)(qudit)>
constexpr std::array<std::uint8_t, 4> unary_table() {
  std::array<std::uint8_t, 4> table{};
  for (int v = 0; v < 4; ++v) {
    table[v] = static_cast<std::uint8_t>(Op(qudit{v}).value());
  }
  return table;
}

inline constexpr auto not_table = unary_table<qnot>();
inline constexpr auto inward_table = unary_table<inward>();
inline constexpr auto outward_table = unary_table<outward>();
inline constexpr auto bitswap_table = unary_table<bitswap>();

}  // namespace detail

struct node {
  gate_kind kind = gate_kind::constant;
  std::vector<node_id> fanins;
  qudit value{};     // constants only
  std::string name;  // inputs only

  friend bool operator==(const node&, const node&) = default;
};

class netlist {
 public:
  /// Creates the 2n+1 input nodes. Structural hashing is on by default.
  explicit netlist(std::size_t width, std::string architecture = "custom", bool deduplicate = true)
      : width_(width), architecture_(std::move(architecture)), deduplicate_(deduplicate) {
    if (width == 0) {
      throw invalid_spec("netlist width must be at least 1");
    }
    for (std::size_t i = 1; i <= width; ++i) {
      append_input("A" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= width; ++i) {
      append_input("B" + std::to_string(i));
    }
    append_input("cin");
    sum_.assign(width, invalid_node);
  }

  std::size_t width() const { return width_; }
  std::size_t size() const { return nodes_.size(); }
  const std::string& architecture() const { return architecture_; }
  bool deduplicating() const { return deduplicate_; }

  const node& at(node_id id) const { return nodes_.at(id); }
  std::span<const node> nodes() const { return nodes_; }

  /* ports, 1-based */
  node_id a(std::size_t i) const { return static_cast<node_id>(i - 1); }
  node_id b(std::size_t i) const { return static_cast<node_id>(width_ + i - 1); }
  node_id cin() const { return static_cast<node_id>(2 * width_); }
  node_id sum(std::size_t i) const { return sum_.at(i - 1); }
  node_id cout() const { return cout_; }

  void set_sum(std::size_t i, node_id id) {
    check_exists(id);
    sum_.at(i - 1) = id;
  }
  void set_cout(node_id id) {
    check_exists(id);
    cout_ = id;
  }

  node_id add_const(qudit value) {
    node n;
    n.kind = gate_kind::constant;
    n.value = value;
    return intern(std::move(n));
  }

  /// Appends a gate, or returns an identical existing one when deduplicating.
  node_id add_gate(gate_kind kind, std::vector<node_id> fanins) {
    if (is_source(kind)) {
      throw arity_error("use add_const for constants; inputs are fixed by the port layout");
    }
    check_arity(kind, fanins.size());
    for (auto f : fanins) {
      check_exists(f);
    }
    node n;
    n.kind = kind;
    n.fanins = std::move(fanins);
    return intern(std::move(n));
  }

  node_id add_and(std::vector<node_id> fanins) { return add_gate(gate_kind::and_gate, std::move(fanins)); }
  node_id add_or(std::vector<node_id> fanins) { return add_gate(gate_kind::or_gate, std::move(fanins)); }
  node_id add_xor(std::vector<node_id> fanins) { return add_gate(gate_kind::xor_gate, std::move(fanins)); }
  node_id add_not(node_id x) { return add_gate(gate_kind::not_gate, {x}); }
  node_id add_inward(node_id x) { return add_gate(gate_kind::inward, {x}); }
  node_id add_outward(node_id x) { return add_gate(gate_kind::outward, {x}); }
  node_id add_bitswap(node_id x) { return add_gate(gate_kind::bitswap, {x}); }

  /// And(x, 1): keeps the low bit, which is where carries live.
  node_id add_mask(node_id x) { return add_and({x, add_const(qudit{1})}); }

  bool is_mask(node_id id) const {
    const auto& n = nodes_.at(id);
    if (n.kind != gate_kind::and_gate || n.fanins.size() != 2) {
      return false;
    }
    auto is_one = [&](node_id f) {
      return nodes_[f].kind == gate_kind::constant && nodes_[f].value == qudit{1};
    };
    return is_one(n.fanins[0]) || is_one(n.fanins[1]);
  }

  /// The non-constant operand of a mask gate.
  node_id masked_operand(node_id id) const {
    const auto& n = nodes_.at(id);
    const auto& first = nodes_[n.fanins[0]];
    return first.kind == gate_kind::constant && first.value == qudit{1} ? n.fanins[1] : n.fanins[0];
  }

  /* named internal signals */

  void name_signal(const std::string& name, node_id id) {
    check_exists(id);
    signals_[name] = id;
  }
  const std::map<std::string, node_id>& signals() const { return signals_; }

  /// Resolves a port name (A3, B1, cin, S2, cout) or a named signal.
  node_id find(std::string_view name) const {
    if (auto it = signals_.find(std::string(name)); it != signals_.end()) {
      return it->second;
    }
    if (name == "cin") {
      return cin();
    }
    if (name == "cout") {
      return require_set(cout_, "cout");
    }
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'S')) {
      std::size_t i = 0;
      for (char c : name.substr(1)) {
        if (c < '0' || c > '9') {
          i = 0;
          break;
        }
        i = i * 10 + static_cast<std::size_t>(c - '0');
      }
      if (i >= 1 && i <= width_) {
        return name[0] == 'A' ? a(i) : name[0] == 'B' ? b(i) : require_set(sum(i), name);
      }
    }
    throw unknown_signal("no signal named '" + std::string(name) + "'");
  }

  bool has_signal(std::string_view name) const {
    try {
      find(name);
      return true;
    } catch (const unknown_signal&) {
      return false;
    }
  }

  /* metadata */

  void set_param(const std::string& key, std::int64_t value) { params_[key] = value; }
  const std::map<std::string, std::int64_t>& params() const { return params_; }

  /// Throws unless every output port has been connected.
  void validate() const {
    for (std::size_t i = 1; i <= width_; ++i) {
      require_set(sum(i), "S" + std::to_string(i));
    }
    require_set(cout_, "cout");
  }

  /* evaluation */

  /// Computes every node value. `inputs` holds A1..An, B1..Bn, cin.
  void simulate(std::span<const std::uint8_t> inputs, std::vector<std::uint8_t>& values) const {
    values.resize(nodes_.size());
    std::copy(inputs.begin(), inputs.end(), values.begin());
    for (std::size_t id = inputs.size(); id < nodes_.size(); ++id) {
      const auto& n = nodes_[id];
      std::uint8_t v = 0;
      switch (n.kind) {
        case gate_kind::constant: v = static_cast<std::uint8_t>(n.value.value()); break;
        case gate_kind::input: v = values[id]; break;
        case gate_kind::and_gate:
          v = 3;
          for (auto f : n.fanins) v &= values[f];
          break;
        case gate_kind::or_gate:
          for (auto f : n.fanins) v |= values[f];
          break;
        case gate_kind::xor_gate:
          for (auto f : n.fanins) v ^= values[f];
          break;
        case gate_kind::not_gate: v = detail::not_table[values[n.fanins[0]]]; break;
        case gate_kind::inward: v = detail::inward_table[values[n.fanins[0]]]; break;
        case gate_kind::outward: v = detail::outward_table[values[n.fanins[0]]]; break;
        case gate_kind::bitswap: v = detail::bitswap_table[values[n.fanins[0]]]; break;
      }
      values[id] = v;
    }
  }

  struct adder_outputs {
    qword sum;
    qudit cout;

    friend bool operator==(const adder_outputs&, const adder_outputs&) = default;
  };

  adder_outputs run(const qword& a_word, const qword& b_word, qudit carry_in) const {
    require_same_width(a_word, b_word);
    if (a_word.width() != width_) {
      throw width_mismatch("netlist has width " + std::to_string(width_) + ", operands have " +
                           std::to_string(a_word.width()));
    }
    validate();
    std::vector<std::uint8_t> inputs(2 * width_ + 1);
    for (std::size_t i = 0; i < width_; ++i) {
      inputs[i] = static_cast<std::uint8_t>(a_word.digits()[i].value());
      inputs[width_ + i] = static_cast<std::uint8_t>(b_word.digits()[i].value());
    }
    inputs[2 * width_] = static_cast<std::uint8_t>(carry_in.value());
    std::vector<std::uint8_t> values;
    simulate(inputs, values);
    qword s(width_);
    for (std::size_t i = 1; i <= width_; ++i) {
      s.set(i, qudit{values[sum(i)]});
    }
    return {std::move(s), qudit{values[cout_]}};
  }

  /// Port-level evaluation. The assignment must cover A1..An, B1..Bn and
  /// cin; the result maps S1..Sn and cout to their values.
  std::map<std::string, qudit> evaluate(const std::map<std::string, qudit>& assignment) const {
    validate();
    std::vector<std::uint8_t> inputs(2 * width_ + 1);
    for (node_id id = 0; id < inputs.size(); ++id) {
      const auto it = assignment.find(nodes_[id].name);
      if (it == assignment.end()) {
        throw missing_assignment("no value assigned to input port " + nodes_[id].name);
      }
      inputs[id] = static_cast<std::uint8_t>(it->second.value());
    }
    std::vector<std::uint8_t> values;
    simulate(inputs, values);
    std::map<std::string, qudit> out;
    for (std::size_t i = 1; i <= width_; ++i) {
      out.emplace("S" + std::to_string(i), qudit{values[sum(i)]});
    }
    out.emplace("cout", qudit{values[cout_]});
    return out;
  }

  /// Structural identity: ids, kinds, edges, ports, names and metadata.
  friend bool operator==(const netlist& x, const netlist& y) {
    return x.width_ == y.width_ && x.architecture_ == y.architecture_ && x.params_ == y.params_ &&
           x.nodes_ == y.nodes_ && x.sum_ == y.sum_ && x.cout_ == y.cout_ && x.signals_ == y.signals_;
  }

  /// Appends a node without hashing or arity checks on the source kinds.
  /// Used by importers and rewrites that must preserve ids exactly; the
  /// caller is responsible for validation.
  node_id append_raw(node n) {
    const auto id = static_cast<node_id>(nodes_.size());
    if (deduplicate_) {
      index_.try_emplace(key_of(n), id);
    }
    nodes_.push_back(std::move(n));
    return id;
  }

  void set_architecture(std::string architecture) { architecture_ = std::move(architecture); }

  /// Test hook: rewrites the kind of an existing gate in place (mutation
  /// testing). The arity must remain legal for the new kind.
  void mutate_kind(node_id id, gate_kind kind) {
    auto& n = nodes_.at(id);
    if (is_source(n.kind) || is_source(kind)) {
      throw arity_error("cannot mutate sources");
    }
    check_arity(kind, n.fanins.size());
    n.kind = kind;
    index_.clear();
    deduplicate_ = false;
  }

 private:
  void append_input(std::string name) {
    node n;
    n.kind = gate_kind::input;
    n.name = std::move(name);
    nodes_.push_back(std::move(n));
  }

  void check_exists(node_id id) const {
    if (id >= nodes_.size()) {
      throw dangling_reference("node id " + std::to_string(id) + " does not exist");
    }
  }

  node_id require_set(node_id id, std::string_view port) const {
    if (id == invalid_node) {
      throw unknown_signal("output port " + std::string(port) + " is not connected");
    }
    return id;
  }

  static std::string key_of(const node& n) {
    std::string key(1, static_cast<char>(n.kind));
    if (n.kind == gate_kind::constant) {
      key.push_back(static_cast<char>('0' + n.value.value()));
      return key;
    }
    if (n.kind == gate_kind::input) {
      return key + n.name;
    }
    auto fanins = n.fanins;
    if (is_variadic(n.kind)) {
      std::sort(fanins.begin(), fanins.end());
    }
    for (auto f : fanins) {
      key += std::to_string(f);
      key.push_back(',');
    }
    return key;
  }

  node_id intern(node n) {
    if (deduplicate_) {
      auto key = key_of(n);
      if (auto it = index_.find(key); it != index_.end()) {
        return it->second;
      }
      const auto id = static_cast<node_id>(nodes_.size());
      index_.emplace(std::move(key), id);
      nodes_.push_back(std::move(n));
      return id;
    }
    const auto id = static_cast<node_id>(nodes_.size());
    nodes_.push_back(std::move(n));
    return id;
  }

  std::size_t width_;
  std::string architecture_;
  bool deduplicate_;
  std::vector<node> nodes_;
  std::vector<node_id> sum_;
  node_id cout_ = invalid_node;
  std::map<std::string, node_id> signals_;
  std::map<std::string, std::int64_t> params_;
  std::unordered_map<std::string, node_id> index_;
};

/// Splits every And/Or/Xor with more than two inputs into a balanced tree
/// of two-input gates. Ports, signal names and metadata carry over.
inline netlist lower_to_binary(const netlist& source) {
  netlist out(source.width(), source.architecture(), false);
  for (const auto& [key, value] : source.params()) {
    out.set_param(key, value);
  }
  out.set_param("fanin_limit", 2);

  std::vector<node_id> remap(source.size(), invalid_node);
  const auto inputs = 2 * source.width() + 1;
  for (node_id id = 0; id < inputs; ++id) {
    remap[id] = id;
  }

  auto build = [&](auto&& self, gate_kind kind, std::span<const node_id> operands) -> node_id {
    if (operands.size() == 1) {
      return operands.front();
    }
    const auto half = (operands.size() + 1) / 2;
    const auto left = self(self, kind, operands.first(half));
    const auto right = self(self, kind, operands.subspan(half));
    return out.add_gate(kind, {left, right});
  };

  for (node_id id = static_cast<node_id>(inputs); id < source.size(); ++id) {
    const auto& n = source.at(id);
    if (n.kind == gate_kind::constant) {
      remap[id] = out.add_const(n.value);
      continue;
    }
    std::vector<node_id> operands;
    operands.reserve(n.fanins.size());
    for (auto f : n.fanins) {
      operands.push_back(remap[f]);
    }
    remap[id] = is_variadic(n.kind) ? build(build, n.kind, operands) : out.add_gate(n.kind, std::move(operands));
  }

  for (std::size_t i = 1; i <= source.width(); ++i) {
    if (source.sum(i) != invalid_node) {
      out.set_sum(i, remap[source.sum(i)]);
    }
  }
  if (source.cout() != invalid_node) {
    out.set_cout(remap[source.cout()]);
  }
  for (const auto& [name, id] : source.signals()) {
    out.name_signal(name, remap[id]);
  }
  return out;
}

}  // namespace qadd
