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
  \file qudit.hpp
  \brief Quaternary digit and the operators of the quaternary algebra

  A qudit is one of the logic levels 0..3, read as the bit pair
  (value / 2, value % 2). The basic operators act bitwise on the pair; the
  special operators (inward, outward, bitswap) are unary.
*/

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>

#include "errors.hpp"

namespace qadd {

class qudit {
 public:
  constexpr qudit() = default;

  /// Throws invalid_qudit unless 0 <= value <= 3.
  constexpr explicit qudit(int value) : value_(checked(value)) {}

  constexpr int value() const { return value_; }
  constexpr int high() const { return value_ >> 1; }
  constexpr int low() const { return value_ & 1; }

  /// 0 and 3 keep their value when the two bits are exchanged.
  constexpr bool is_symmetric() const { return value_ == 0 || value_ == 3; }

  friend constexpr auto operator<=>(qudit, qudit) = default;

  friend std::ostream& operator<<(std::ostream& os, qudit q) {
    return os << static_cast<char>('0' + q.value_);
  }

 private:
  static constexpr std::uint8_t checked(int value) {
    if (value < 0 || value > 3) {
      throw invalid_qudit("qudit value out of range 0..3: " + std::to_string(value));
    }
    return static_cast<std::uint8_t>(value);
  }

  std::uint8_t value_ = 0;
};

inline constexpr std::array<qudit, 4> all_qudits{qudit{0}, qudit{1}, qudit{2}, qudit{3}};

inline namespace literals {
constexpr qudit operator""_q(unsigned long long value) {
  return value > 3 ? throw invalid_qudit("qudit literal out of range") : qudit{static_cast<int>(value)};
}
}  // namespace literals

/* basic operators */

constexpr qudit qand(qudit a, qudit b) { return qudit{a.value() & b.value()}; }
constexpr qudit qor(qudit a, qudit b) { return qudit{a.value() | b.value()}; }
constexpr qudit qxor(qudit a, qudit b) { return qudit{a.value() ^ b.value()}; }
constexpr qudit qnot(qudit a) { return qudit{3 - a.value()}; }

constexpr qudit qnand(qudit a, qudit b) { return qnot(qand(a, b)); }
constexpr qudit qnor(qudit a, qudit b) { return qnot(qor(a, b)); }
constexpr qudit qxnor(qudit a, qudit b) { return qnot(qxor(a, b)); }

namespace detail {

template<class Op>
constexpr qudit fold(std::span<const qudit> operands, Op op, const char* name) {
  if (operands.empty()) {
    throw arity_error(std::string(name) + " over an empty operand sequence");
  }
  qudit acc = operands.front();
  for (auto q : operands.subspan(1)) {
    acc = op(acc, q);
  }
  return acc;
}

}  // namespace detail

/* multi-input forms fold left; bitwise semantics make the order irrelevant */

constexpr qudit qand(std::span<const qudit> operands) {
  return detail::fold(operands, [](qudit a, qudit b) { return qand(a, b); }, "qand");
}
constexpr qudit qor(std::span<const qudit> operands) {
  return detail::fold(operands, [](qudit a, qudit b) { return qor(a, b); }, "qor");
}
constexpr qudit qxor(std::span<const qudit> operands) {
  return detail::fold(operands, [](qudit a, qudit b) { return qxor(a, b); }, "qxor");
}

template<class... Rest>
constexpr qudit qand(qudit a, qudit b, qudit c, Rest... rest) {
  qudit acc = qand(qand(a, b), c);
  ((acc = qand(acc, qudit{rest})), ...);
  return acc;
}
template<class... Rest>
constexpr qudit qor(qudit a, qudit b, qudit c, Rest... rest) {
  qudit acc = qor(qor(a, b), c);
  ((acc = qor(acc, qudit{rest})), ...);
  return acc;
}
template<class... Rest>
constexpr qudit qxor(qudit a, qudit b, qudit c, Rest... rest) {
  qudit acc = qxor(qxor(a, b), c);
  ((acc = qxor(acc, qudit{rest})), ...);
  return acc;
}

/* special operators */

/// Inward (half) inverter: complement, then pull 0/3 to the nearest of 1/2.
constexpr qudit inward(qudit a) {
  return a.value() < 2 ? qand(qnot(a), qudit{2}) : qor(qnot(a), qudit{1});
}

/// Outward (full) inverter: complement, then push 1/2 to the nearest of 0/3.
constexpr qudit outward(qudit a) {
  return a.value() < 2 ? qor(qnot(a), qudit{3}) : qand(qnot(a), qudit{0});
}

/// Exchanges the two bits: complements asymmetrical values, fixes 0 and 3.
constexpr qudit bitswap(qudit a) { return a.is_symmetric() ? a : qnot(a); }

/// 3 when a == 3, otherwise 0.
constexpr qudit saturate3(qudit a) { return qand(a, bitswap(a)); }

/// 3 when a == b, otherwise 0. Built as saturate3 of the xnor.
constexpr qudit equality(qudit a, qudit b) { return saturate3(qxnor(a, b)); }

}  // namespace qadd
