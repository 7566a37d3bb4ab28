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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <qadd/adders.hpp>
#include <qadd/measure.hpp>
#include <qadd/netlist.hpp>
#include <qadd/verify.hpp>

using namespace qadd;
using namespace qadd::literals;

namespace {

/// Width-1 netlist with S1 = gate(A1, B1) and cout = cin.
netlist single_gate(gate_kind kind) {
  netlist nl(1);
  const auto g = is_unary(kind) ? nl.add_gate(kind, {nl.a(1)}) : nl.add_gate(kind, {nl.a(1), nl.b(1)});
  nl.set_sum(1, g);
  nl.set_cout(nl.cin());
  return nl;
}

qudit reference(gate_kind kind, qudit a, qudit b) {
  switch (kind) {
    case gate_kind::and_gate: return qand(a, b);
    case gate_kind::or_gate: return qor(a, b);
    case gate_kind::xor_gate: return qxor(a, b);
    case gate_kind::not_gate: return qnot(a);
    case gate_kind::inward: return inward(a);
    case gate_kind::outward: return outward(a);
    case gate_kind::bitswap: return bitswap(a);
    default: throw error("not a gate");
  }
}

/// Replays the same random construction into `nl`. Duplicate gates are
/// requested on purpose so that hashing has something to merge.
void random_build(netlist& nl, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<node_id> pool;
  for (node_id id = 0; id < nl.size(); ++id) pool.push_back(id);
  pool.push_back(nl.add_const(1_q));
  pool.push_back(nl.add_const(2_q));
  const std::array<gate_kind, 7> kinds{gate_kind::and_gate, gate_kind::or_gate, gate_kind::xor_gate, gate_kind::not_gate,
                                       gate_kind::inward,   gate_kind::outward, gate_kind::bitswap};
  for (int g = 0; g < 80; ++g) {
    const auto kind = kinds[rng() % kinds.size()];
    std::vector<node_id> fanins;
    const std::size_t arity = is_unary(kind) ? 1 : 2 + rng() % 3;
    for (std::size_t k = 0; k < arity; ++k) fanins.push_back(pool[rng() % pool.size()]);
    pool.push_back(nl.add_gate(kind, fanins));
    if (rng() % 4 == 0) {
      std::reverse(fanins.begin(), fanins.end());
      pool.push_back(nl.add_gate(kind, fanins));
    }
  }
  for (std::size_t i = 1; i <= nl.width(); ++i) nl.set_sum(i, pool[pool.size() - 1 - i]);
  nl.set_cout(pool.back());
}

}  // namespace

TEST(Netlist, InputLayout) {
  netlist nl(3);
  EXPECT_EQ(nl.size(), 7u);
  EXPECT_EQ(nl.a(1), 0u);
  EXPECT_EQ(nl.b(1), 3u);
  EXPECT_EQ(nl.cin(), 6u);
  EXPECT_EQ(nl.at(nl.b(2)).name, "B2");
  EXPECT_THROW(netlist(0), invalid_spec);
}

TEST(Netlist, AddGateAndArity) {
  netlist nl(1);
  const auto g = nl.add_and({nl.a(1), nl.b(1)});
  EXPECT_EQ(g, 3u);
  EXPECT_EQ(nl.at(g).fanins.size(), 2u);
  EXPECT_THROW(nl.add_and({nl.a(1)}), arity_error);
  EXPECT_THROW(nl.add_gate(gate_kind::not_gate, {nl.a(1), nl.b(1)}), arity_error);
  EXPECT_THROW(nl.add_gate(gate_kind::input, {}), arity_error);
  EXPECT_THROW(nl.add_and({nl.a(1), 99}), dangling_reference);
}

TEST(Netlist, StructuralHashing) {
  netlist nl(1);
  const auto x = nl.add_and({nl.a(1), nl.b(1)});
  EXPECT_EQ(nl.add_and({nl.a(1), nl.b(1)}), x);
  EXPECT_EQ(nl.add_and({nl.b(1), nl.a(1)}), x);
  EXPECT_NE(nl.add_or({nl.a(1), nl.b(1)}), x);
  EXPECT_EQ(nl.add_const(1_q), nl.add_const(1_q));

  netlist raw(1, "custom", false);
  const auto y = raw.add_and({raw.a(1), raw.b(1)});
  EXPECT_NE(raw.add_and({raw.a(1), raw.b(1)}), y);
}

TEST(Netlist, GateSemanticsMatchOperators) {
  for (auto kind : all_gate_kinds) {
    if (is_source(kind)) continue;
    const auto nl = single_gate(kind);
    for (auto a : all_qudits) {
      for (auto b : all_qudits) {
        const auto out = nl.evaluate({{"A1", a}, {"B1", b}, {"cin", 0_q}});
        EXPECT_EQ(out.at("S1"), reference(kind, a, b)) << to_string(kind);
      }
    }
  }
  const auto nl = single_gate(gate_kind::and_gate);
  EXPECT_EQ(nl.evaluate({{"A1", 1_q}, {"B1", 2_q}, {"cin", 0_q}}).at("S1"), 0_q);
}

TEST(Netlist, PassThroughAndMissingAssignment) {
  netlist nl(1);
  nl.set_sum(1, nl.a(1));
  nl.set_cout(nl.cin());
  for (auto x : all_qudits) {
    EXPECT_EQ(nl.evaluate({{"A1", x}, {"B1", 0_q}, {"cin", 1_q}}).at("S1"), x);
  }
  EXPECT_THROW(nl.evaluate({{"A1", 1_q}}), missing_assignment);
}

TEST(Netlist, UnconnectedOutputsRejected) {
  netlist nl(2);
  EXPECT_THROW(nl.validate(), error);
  EXPECT_THROW(nl.find("S1"), error);
  EXPECT_THROW(nl.find("nope"), unknown_signal);
  EXPECT_EQ(nl.find("B2"), nl.b(2));
}

TEST(Netlist, FullAdderCell) {
  const auto nl = build_ripple(1);
  const auto out = nl.evaluate({{"A1", 1_q}, {"B1", 2_q}, {"cin", 1_q}});
  EXPECT_EQ(out.at("S1"), 0_q);
  EXPECT_EQ(out.at("cout"), 1_q);
}

TEST(Netlist, EvaluationIsPureAndDeterministic) {
  const auto nl = build_tree(5);
  const auto copy = nl;
  const qword a{3, 1, 2, 0, 3}, b{1, 2, 2, 3, 0};
  const auto first = nl.run(a, b, 1_q);
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(nl.run(a, b, 1_q), first);
  }
  EXPECT_TRUE(nl == copy);
}

TEST(Netlist, DeduplicationPreservesEvaluation) {
  constexpr std::size_t n = 3;
  netlist hashed(n, "custom", true);
  netlist plain(n, "custom", false);
  random_build(hashed, 2024);
  random_build(plain, 2024);
  EXPECT_LT(hashed.size(), plain.size());

  digit_source source(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = source.word(n);
    const auto b = source.word(n);
    const auto c = source.digit();
    ASSERT_EQ(hashed.run(a, b, c), plain.run(a, b, c));
  }
}

TEST(Netlist, AddingGatesNeverLowersExistingDepth) {
  auto nl = build_ripple(3);
  const std::vector<std::string> scope{"c2", "c3", "c4"};
  auto before = measure(nl, scope);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto x = static_cast<node_id>(rng() % nl.size());
    const auto y = static_cast<node_id>(rng() % nl.size());
    const auto g = x == y ? nl.add_not(x) : nl.add_xor({x, y});
    nl.name_signal("extra", g);
    const auto after = measure(nl, scope);
    for (const auto& name : scope) {
      ASSERT_GE(after.per_signal.at(name).unit, before.per_signal.at(name).unit);
      ASSERT_GE(after.per_signal.at(name).stage, before.per_signal.at(name).stage);
    }
    before = after;
  }
}

TEST(Lowering, BinaryFanInAndEquivalence) {
  for (std::size_t n : {3u, 4u}) {
    const auto wide = build_single_stage(n);
    const auto low = lower_to_binary(wide);
    std::size_t widest = 0;
    for (const auto& node : low.nodes()) widest = std::max(widest, node.fanins.size());
    EXPECT_EQ(widest, 2u);
    EXPECT_EQ(low.params().at("fanin_limit"), 2);
    EXPECT_TRUE(check_exhaustive(low).passed());
    EXPECT_EQ(low.signals().size(), wide.signals().size());
  }
}

TEST(Lowering, BalancedSplit) {
  netlist nl(3);
  const auto g = nl.add_and({nl.a(1), nl.a(2), nl.a(3), nl.b(1), nl.b(2)});
  for (std::size_t i = 1; i <= 3; ++i) nl.set_sum(i, g);
  nl.set_cout(g);
  const auto low = lower_to_binary(nl);
  EXPECT_EQ(low.size(), nl.size() - 1 + 4);
  const auto report = measure(low, std::vector<std::string>{"cout"});
  EXPECT_EQ(report.depth, 3);
}
