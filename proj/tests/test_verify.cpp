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

#include <gtest/gtest.h>

#include <qadd/adders.hpp>
#include <qadd/cells.hpp>
#include <qadd/verify.hpp>

using namespace qadd;
using namespace qadd::literals;

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_add(qword{3, 3}, qword{1, 0}, 0_q), (oracle_result{qword{0, 0}, 1_q}));
  // 6 + 9 + 1: words are least significant first here.
  EXPECT_EQ(oracle_add(qword{2, 1}, qword{1, 2}, 1_q), (oracle_result{qword{0, 0}, 1_q}));
  EXPECT_EQ(oracle_add(qword{0, 0, 0}, qword{0, 0, 0}, 0_q), (oracle_result{qword{0, 0, 0}, 0_q}));
  EXPECT_THROW(oracle_add(qword{1}, qword{1, 1}, 0_q), width_mismatch);
  EXPECT_THROW(oracle_add(qword{1}, qword{1}, 2_q), contract_violation);
}

TEST(Oracle, ValueRoundTrip) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t words = std::uint64_t{1} << (2 * n);
    for (std::uint64_t v = 0; v < words; ++v) {
      const auto w = digitize(big_int{v}, n);
      ASSERT_EQ(value_of(w), big_int{v});
      ASSERT_EQ(digitize(value_of(w), n), w);
    }
  }
  digit_source source(6);
  for (int k = 0; k < 1000; ++k) {
    const auto w = source.word(6);
    ASSERT_EQ(digitize(value_of(w), 6), w);
  }
  EXPECT_THROW(digitize(big_int{16}, 2), contract_violation);
}

TEST(Oracle, AgreesWithRippleCells) {
  digit_source source(21);
  for (int k = 0; k < 2000; ++k) {
    const auto a = source.word(40), b = source.word(40);
    const auto c = source.carry();
    const auto r = ripple_add(a, b, c);
    const auto o = oracle_add(a, b, c);
    ASSERT_EQ(r.sum, o.sum);
    ASSERT_EQ(r.carry, o.cout);
  }
}

TEST(Exhaustive, CountsAndBound) {
  const auto r = check_exhaustive(build_ripple(2));
  EXPECT_EQ(r.cases_run, 512u);
  EXPECT_TRUE(r.passed());
  const auto t = check_exhaustive(build_tree(3));
  EXPECT_EQ(t.cases_run, 8192u);
  EXPECT_TRUE(t.passed());
  EXPECT_THROW(check_exhaustive(build_ripple(5)), bound_exceeded);
  EXPECT_NO_THROW(check_exhaustive(build_ripple(1), 1));
}

TEST(Exhaustive, CorruptedNetlistIsCaughtWithReplayableInputs) {
  const auto nl = build_ripple(2);
  node_id victim = invalid_node;
  for (node_id id = 0; id < nl.size(); ++id) {
    if (nl.at(id).kind == gate_kind::and_gate && !nl.is_mask(id)) {
      victim = id;
      break;
    }
  }
  ASSERT_NE(victim, invalid_node);
  const auto bad = apply(nl, mutation{victim, gate_kind::and_gate, gate_kind::or_gate});
  const auto report = check_exhaustive(bad);
  ASSERT_FALSE(report.passed());
  for (std::size_t k = 1; k < report.mismatches.size(); ++k) {
    EXPECT_TRUE(report.mismatches[k - 1].key() < report.mismatches[k].key());
  }
  const auto& m = report.mismatches.front();
  const auto a = qword::from_msd_string(m.a), b = qword::from_msd_string(m.b);
  const auto replay = bad.run(a, b, qudit{m.cin});
  EXPECT_EQ("S=" + replay.sum.to_msd_string() + " C=" + std::to_string(replay.cout.value()), m.actual);
  const auto truth = oracle_add(a, b, qudit{m.cin});
  EXPECT_EQ("S=" + truth.sum.to_msd_string() + " C=" + std::to_string(truth.cout.value()), m.expected);
}

TEST(Random, SeededAndDeterministic) {
  const auto nl = build_sparse(16, 4);
  const auto first = check_random(nl, 10000, 42);
  EXPECT_TRUE(first.passed());
  EXPECT_EQ(first.cases_run, 10000u + corner_vectors(16).size());
  EXPECT_EQ(export_json(first), export_json(check_random(nl, 10000, 42)));
  EXPECT_EQ(first.seed, 42u);
  EXPECT_THROW(check_random(nl, 0, 1), contract_violation);
}

TEST(Random, StreamDependsOnSeed) {
  digit_source x(1), y(1), z(2);
  const auto a = x.word(64);
  EXPECT_EQ(a, y.word(64));
  EXPECT_NE(a, z.word(64));
}

TEST(Random, DigitsAreUniform) {
  digit_source source(123);
  std::array<int, 4> hits{};
  for (int k = 0; k < 40000; ++k) ++hits[source.digit().value()];
  for (int h : hits) {
    EXPECT_GT(h, 9500);
    EXPECT_LT(h, 10500);
  }
}

TEST(Random, CornerVectors) {
  const auto corners = corner_vectors(32);
  bool found = false;
  const qword threes(32, 3_q), zeros(32, 0_q);
  for (const auto& v : corners) {
    found = found || (v.a == threes && v.b == zeros && v.cin == 1_q);
  }
  EXPECT_TRUE(found);
  const auto out = build_tree(32).run(threes, zeros, 1_q);
  EXPECT_EQ(out.sum, zeros);
  EXPECT_EQ(out.cout, 1_q);
  EXPECT_EQ(corners.size(), 2 * (5 + 3 * 32));
}

TEST(TruthTables, PassWithOneDocumentedDivergence) {
  const auto report = check_truth_tables();
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.cases_run, 70u + 20u);
  ASSERT_EQ(report.divergences.size(), 1u);
  EXPECT_NE(report.divergences.front().find("A=0 B=3 cin=1"), std::string::npos);
  EXPECT_NE(report.divergences.front().find("S=0 C=1"), std::string::npos);
}

TEST(TruthTables, SpotRows) {
  EXPECT_EQ(qand(2_q, 2_q), 2_q);
  EXPECT_EQ(qor(2_q, 2_q), 2_q);
  EXPECT_EQ(qxor(2_q, 2_q), 0_q);
  EXPECT_EQ(qnand(2_q, 2_q), 1_q);
  EXPECT_EQ(qnor(2_q, 2_q), 1_q);
  EXPECT_EQ(qxnor(2_q, 2_q), 3_q);
  EXPECT_EQ(full_add(1_q, 1_q, 1_q), (sum_carry{3_q, 0_q}));
}

TEST(Mutation, CatalogueIsCaught) {
  for (auto kind : all_adder_kinds) {
    const auto nl = build(adder_spec{kind, 2, 2, 2});
    ASSERT_TRUE(check_exhaustive(nl).passed());
    const auto catalogue = mutation_catalogue(nl, 20, 1234);
    ASSERT_EQ(catalogue.size(), 20u);
    for (const auto& m : catalogue) {
      EXPECT_FALSE(check_exhaustive(apply(nl, m)).passed())
          << to_string(kind) << " gate " << m.gate << " " << to_string(m.from) << "->" << to_string(m.to);
    }
    EXPECT_EQ(catalogue, mutation_catalogue(nl, 20, 1234));
  }
}

TEST(Mutation, EquivalentMutantsAreRecognized) {
  // Or over operands with disjoint bits behaves as Xor.
  netlist nl(1);
  const auto lo = nl.add_and({nl.a(1), nl.add_const(1_q)});
  const auto hi = nl.add_and({nl.b(1), nl.add_const(2_q)});
  const auto g = nl.add_or({lo, hi});
  nl.set_sum(1, g);
  nl.set_cout(nl.cin());
  const mutation m{g, gate_kind::or_gate, gate_kind::xor_gate};
  EXPECT_TRUE(locally_equivalent(nl, m));
  const auto mutant = apply(nl, m);
  for (auto a : all_qudits) {
    for (auto b : all_qudits) {
      EXPECT_EQ(mutant.run(qword(1, a), qword(1, b), 0_q), nl.run(qword(1, a), qword(1, b), 0_q));
    }
  }
  EXPECT_FALSE(locally_equivalent(nl, mutation{g, gate_kind::or_gate, gate_kind::and_gate}));
}
