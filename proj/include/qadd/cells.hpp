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
  \file cells.hpp
  \brief Value-level adder cells written with the quaternary operators

  These are the reference equations the generated netlists must reproduce:
  half adder, full adder, per-qudit propagate/generate, the carry step and
  the flattened single-stage lookahead carries.
*/

#pragma once

#include <vector>

#include "qudit.hpp"
#include "qword.hpp"

namespace qadd {

struct sum_carry {
  qudit sum;
  qudit carry;  // 0 or 1

  friend bool operator==(const sum_carry&, const sum_carry&) = default;
};

struct prop_gen {
  qudit propagate;  // 3 iff a + b == 3, else 0
  qudit generate;   // 1 iff a + b >= 4, else 0

  friend bool operator==(const prop_gen&, const prop_gen&) = default;
};

inline constexpr qudit one{1};

/// Generate with the trailing mask left off; only its low bit is meaningful.
constexpr qudit raw_generate(qudit a, qudit b, qudit partial) {
  return qor(inward(qand(a, b)), qand(a, b, bitswap(partial)));
}

constexpr sum_carry half_add(qudit a, qudit b) {
  const auto sum = qxor(a, b, bitswap(qand(a, b, one)));
  const auto carry = qand(raw_generate(a, b, qxor(a, b)), one);
  return {sum, carry};
}

/// Total over every cin; the arithmetic identity 4*carry + sum = a + b + cin
/// holds for cin in {0, 1}.
constexpr sum_carry full_add(qudit a, qudit b, qudit cin) {
  const auto t = qor(qand(a, b), qand(b, cin), qand(cin, a));
  const auto sum = qxor(a, b, cin, bitswap(qand(t, one)));
  const auto carry = qand(qor(inward(qand(a, b)), qand(t, bitswap(qxor(a, b)))), one);
  return {sum, carry};
}

/// Full adder built from two half adders and an OR of their carries.
constexpr sum_carry cascade_full_add(qudit a, qudit b, qudit cin) {
  const auto first = half_add(a, b);
  const auto second = half_add(first.sum, cin);
  return {second.sum, qor(first.carry, second.carry)};
}

constexpr prop_gen pg(qudit a, qudit b) {
  const auto partial = qxor(a, b);
  return {saturate3(partial), qand(raw_generate(a, b, partial), one)};
}

/// c = g + p * c_prev, for g in {0,1}, p in {0,3}, c_prev in {0,1}.
constexpr qudit carry_step(qudit g, qudit p, qudit c_prev) { return qor(g, qand(p, c_prev)); }

/// Precondition check for carry_step, used by the verification layer.
constexpr bool carry_step_in_contract(qudit g, qudit p, qudit c_prev) {
  return g.value() <= 1 && (p.value() == 0 || p.value() == 3) && c_prev.value() <= 1;
}

struct ripple_result {
  qword sum;
  qudit carry;

  friend bool operator==(const ripple_result&, const ripple_result&) = default;
};

inline ripple_result ripple_add(const qword& a, const qword& b, qudit cin) {
  require_same_width(a, b);
  require_binary_carry(cin);
  if (a.width() == 0) {
    throw width_mismatch("ripple_add needs at least one qudit");
  }
  qword sum(a.width());
  auto carry = cin;
  for (std::size_t i = 1; i <= a.width(); ++i) {
    const auto cell = full_add(a.at(i), b.at(i), carry);
    sum.set(i, cell.sum);
    carry = cell.carry;
  }
  return {std::move(sum), carry};
}

/// Carries C_1..C_n (C_i leaves qudit i), each evaluated from the flattened
/// lookahead sum of products over G and P, independent of the other carries.
inline std::vector<qudit> single_stage_carries(const qword& a, const qword& b, qudit cin) {
  require_same_width(a, b);
  require_binary_carry(cin);
  const auto n = a.width();
  std::vector<prop_gen> cells;
  cells.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    cells.push_back(pg(a.at(i), b.at(i)));
  }

  std::vector<qudit> carries;
  carries.reserve(n);
  for (std::size_t top = 1; top <= n; ++top) {
    auto carry = cells[top - 1].generate;
    for (std::size_t k = 1; k < top; ++k) {
      auto term = cells[k - 1].generate;
      for (std::size_t j = k + 1; j <= top; ++j) {
        term = qand(term, cells[j - 1].propagate);
      }
      carry = qor(carry, term);
    }
    auto through = cin;
    for (std::size_t j = 1; j <= top; ++j) {
      through = qand(through, cells[j - 1].propagate);
    }
    carries.push_back(qor(carry, through));
  }
  return carries;
}

}  // namespace qadd
