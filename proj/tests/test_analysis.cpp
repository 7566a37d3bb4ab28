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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include <qadd/analysis.hpp>

using namespace qadd;

TEST(ClosedForm, Logarithms) {
  EXPECT_EQ(floor_log2(1), 0);
  EXPECT_EQ(floor_log2(7), 2);
  EXPECT_EQ(floor_log2(8), 3);
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(7), 3);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
  for (std::int64_t n = 1; n <= 1000; ++n) {
    EXPECT_EQ(floor_log2(n), static_cast<std::int64_t>(std::floor(std::log2(static_cast<double>(n)))));
  }
}

TEST(ClosedForm, PublishedValues) {
  EXPECT_EQ(closed_form_of(adder_kind::ripple, 4)->delay, 20);
  EXPECT_EQ(closed_form_of(adder_kind::ripple, 1)->gates, 9);
  EXPECT_EQ(closed_form_of(adder_kind::ripple, 1)->inputs, 19);

  const auto ss = *closed_form_of(adder_kind::single_stage, 3);
  EXPECT_EQ(ss.delay, 6);
  EXPECT_EQ(ss.gates, 33);
  EXPECT_EQ(ss.inputs, 77);

  const auto tree = *closed_form_of(adder_kind::tree, 7);
  EXPECT_EQ(tree.s, 2);
  EXPECT_EQ(tree.delay, 10);
  EXPECT_EQ(tree.product_gates, 10);
  EXPECT_EQ(tree.product_inputs, 20);
  EXPECT_EQ(tree.carry_gates, 34);
  EXPECT_EQ(tree.carry_inputs, 68);
  EXPECT_EQ(tree.gates, 44);
  EXPECT_EQ(tree.inputs, 88);

  EXPECT_FALSE(closed_form_of(adder_kind::sparse, 8));
  EXPECT_FALSE(closed_form_of(adder_kind::hybrid, 8));
  EXPECT_THROW(closed_form_of(adder_kind::ripple, 0), invalid_spec);
}

TEST(ClosedForm, PerQuditSumsMatchTotals) {
  std::int64_t gates = 0, inputs = 0;
  for (std::int64_t n = 1; n <= 256; ++n) {
    gates += single_stage_qudit_gates(n);
    inputs += single_stage_qudit_inputs(n);
    const auto cf = *closed_form_of(adder_kind::single_stage, n);
    ASSERT_EQ(cf.gates, gates);
    ASSERT_EQ(cf.inputs, inputs);
  }
}

TEST(ClosedForm, DelayDominanceAndDoubling) {
  for (std::int64_t n = 2; n <= 512; ++n) {
    const auto tree = *closed_form_of(adder_kind::tree, n);
    EXPECT_LE(6, tree.delay);
    EXPECT_LT(tree.delay, 5 * n);
    EXPECT_EQ(tree.product_inputs, 2 * tree.product_gates);
    EXPECT_EQ(tree.carry_inputs, 2 * tree.carry_gates);
  }
  EXPECT_EQ(closed_form_of(adder_kind::tree, 2)->delay, 6);
}

TEST(Compare, DelaysMatchExactly) {
  for (std::size_t n = 1; n <= 64; ++n) {
    for (auto kind : {adder_kind::ripple, adder_kind::single_stage, adder_kind::tree}) {
      if (kind == adder_kind::tree && n == 1) continue;
      const auto row = compare(adder_spec{kind, n});
      ASSERT_TRUE(row.delay_dev);
      EXPECT_EQ(row.delay_dev->absolute, 0) << to_string(kind) << " n=" << n;
    }
  }
}

TEST(Compare, RippleRow) {
  const auto row = compare(adder_spec{adder_kind::ripple, 4});
  EXPECT_EQ(row.meas_delay, 20);
  EXPECT_EQ(row.meas_gates, 36);
  EXPECT_EQ(row.gates_dev->absolute, 0);
}

TEST(Compare, TreeCountsMatchFormulas) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const auto row = compare(adder_spec{adder_kind::tree, n});
    EXPECT_EQ(row.gates_dev->absolute, 0) << n;
    EXPECT_EQ(row.inputs_dev->absolute, 0) << n;
    EXPECT_EQ(row.max_fan_in, 2);
  }
  EXPECT_EQ(compare(adder_spec{adder_kind::tree, 8}).meas_delay, 10);
}

TEST(Compare, SingleStageCountsWithItemizedDeviations) {
  const auto row = compare(adder_spec{adder_kind::single_stage, 8});
  EXPECT_EQ(row.cf->gates, 128);
  EXPECT_LE(std::abs(row.gates_dev->relative), 0.25);
  bool mask_note = false, shared_note = false;
  for (const auto& note : row.notes) {
    mask_note = mask_note || note.find("mask gates") != std::string::npos;
    shared_note = shared_note || note.find("shared") != std::string::npos;
  }
  EXPECT_TRUE(mask_note);
  EXPECT_TRUE(shared_note);
}

TEST(Compare, SingleStageMaskReading) {
  auto conv = documented_conventions(adder_kind::single_stage);
  conv.delay.mask = mask_counting::included;
  EXPECT_EQ(compare(adder_spec{adder_kind::single_stage, 8}, conv).meas_delay, 7);
}

TEST(Sweep, RowsAndDeterminism) {
  const std::vector<adder_kind> kinds{adder_kind::ripple, adder_kind::single_stage, adder_kind::tree};
  std::vector<std::size_t> widths;
  for (std::size_t n = 2; n <= 64; ++n) widths.push_back(n);
  sweep_options one;
  one.threads = 1;
  const auto rows = sweep(kinds, widths);
  EXPECT_EQ(rows.size(), 189u);
  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, sweep(kinds, widths, one));
  EXPECT_EQ(a.str(), b.str());

  int previous_tree = 0;
  for (const auto& row : rows) {
    if (row.spec.kind == adder_kind::single_stage) EXPECT_EQ(row.meas_delay, 6);
    if (row.spec.kind == adder_kind::tree) {
      EXPECT_GE(row.meas_delay, previous_tree);
      previous_tree = row.meas_delay;
    }
  }
  EXPECT_THROW(sweep({}, widths), invalid_spec);
}

TEST(Sweep, CsvShape) {
  const auto rows = sweep({adder_kind::tree, adder_kind::sparse}, {7});
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream in(os.str());
  std::string header, tree, sparse;
  std::getline(in, header);
  std::getline(in, tree);
  std::getline(in, sparse);
  EXPECT_EQ(header.rfind("kind,n,cf_delay,meas_delay,cf_gates,meas_gates,cf_inputs,meas_inputs,max_fan_in,conventions", 0),
            0u);
  EXPECT_EQ(tree.rfind("tree,7,10,10,44,44,88,88,2,", 0), 0u);
  EXPECT_EQ(sparse.rfind("sparse,7,,", 0), 0u);
}
