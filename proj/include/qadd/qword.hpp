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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "qudit.hpp"

namespace qadd {

/// Fixed-width word of qudits. Positions are 1-based; position 1 is the
/// least significant qudit.
class qword {
 public:
  qword() = default;

  explicit qword(std::size_t width, qudit fill = qudit{}) : digits_(width, fill) {}

  /// Digits listed least significant first.
  qword(std::initializer_list<int> lsd_first) {
    digits_.reserve(lsd_first.size());
    for (int d : lsd_first) {
      digits_.emplace_back(d);
    }
  }

  explicit qword(std::vector<qudit> lsd_first) : digits_(std::move(lsd_first)) {}

  /// Parses a base-4 string written most significant digit first.
  static qword from_msd_string(std::string_view text) {
    std::vector<qudit> digits;
    digits.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
      if (*it < '0' || *it > '3') {
        throw invalid_qudit(std::string("not a base-4 digit: '") + *it + "'");
      }
      digits.emplace_back(*it - '0');
    }
    return qword{std::move(digits)};
  }

  std::string to_msd_string() const {
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
      out.push_back(static_cast<char>('0' + it->value()));
    }
    return out;
  }

  std::size_t width() const { return digits_.size(); }

  qudit at(std::size_t position) const { return digits_.at(position - 1); }
  void set(std::size_t position, qudit q) { digits_.at(position - 1) = q; }

  /// Zero-based view, least significant first.
  const std::vector<qudit>& digits() const { return digits_; }

  friend bool operator==(const qword&, const qword&) = default;

  friend std::ostream& operator<<(std::ostream& os, const qword& w) { return os << w.to_msd_string(); }

 private:
  std::vector<qudit> digits_;
};

inline void require_same_width(const qword& a, const qword& b) {
  if (a.width() != b.width()) {
    throw width_mismatch("operand widths differ: " + std::to_string(a.width()) + " vs " +
                         std::to_string(b.width()));
  }
}

inline void require_binary_carry(qudit cin) {
  if (cin.value() > 1) {
    throw contract_violation("carry-in must be 0 or 1, got " + std::to_string(cin.value()));
  }
}

}  // namespace qadd
